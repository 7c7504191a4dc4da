#include "ekr/finite_field.hpp"

#include <stdexcept>
#include <string>

#include "ekr/numeric.hpp"

namespace ekr {

namespace {

// Multiply the element (digits base p) by x, reducing with x^k = sum c_i x^i.
std::uint32_t times_x(std::uint32_t a, std::uint32_t p, unsigned k, const std::vector<std::uint32_t>& c,
                      const std::vector<std::uint32_t>& pw) {
  std::uint32_t top = a / pw[k - 1];
  std::uint32_t out = 0;
  for (unsigned i = 0; i < k; ++i) {
    std::uint32_t lower = i == 0 ? 0 : (a / pw[i - 1]) % p;
    std::uint32_t digit = (lower + top * c[i]) % p;
    out += digit * pw[i];
  }
  return out;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  std::uint64_t p = 0;
  unsigned k = 0;
  if (q > (1u << 16) || !prime_power(q, p, k))
    throw std::invalid_argument("field order must be a prime power <= 65536, got " + std::to_string(q));
  p_ = static_cast<std::uint32_t>(p);
  k_ = k;
  pow_p_.resize(k_ + 1);
  pow_p_[0] = 1;
  for (unsigned i = 1; i <= k_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

  log_.assign(q_, 0);
  antilog_.assign(q_ - 1, 0);

  if (k_ == 1) {
    for (std::uint32_t g = 1; g < p_; ++g) {
      std::uint64_t x = 1;
      bool primitive = true;
      for (std::uint32_t e = 0; e < p_ - 1; ++e) {
        if (e > 0 && x == 1) {
          primitive = false;
          break;
        }
        antilog_[e] = static_cast<Element>(x);
        x = x * g % p_;
      }
      if (primitive && x == 1) {
        reduction_ = {g};
        break;
      }
    }
  } else {
    // Candidate monic f = x^k + sum a_i x^i enumerated with (a_{k-1},...,a_0)
    // increasing as a base-p integer; reduction c_i = -a_i mod p.
    for (std::uint32_t t = 0; t < pow_p_[k_]; ++t) {
      std::vector<std::uint32_t> c(k_);
      for (unsigned i = 0; i < k_; ++i) c[i] = (p_ - (t / pow_p_[i]) % p_) % p_;
      if (c[0] == 0) continue;
      std::uint32_t x = 1;
      bool primitive = true;
      for (std::uint32_t e = 0; e < q_ - 1; ++e) {
        if (e > 0 && x == 1) {
          primitive = false;
          break;
        }
        antilog_[e] = x;
        x = times_x(x, p_, k_, c, pow_p_);
      }
      if (primitive && x == 1) {
        reduction_ = c;
        break;
      }
    }
  }
  if (reduction_.empty()) throw std::logic_error("no primitive polynomial found");
  for (std::uint32_t e = 0; e < q_ - 1; ++e) log_[antilog_[e]] = e;
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) return (a + b) % p_;
  Element out = 0;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint32_t d = ((a / pow_p_[i]) % p_ + (b / pow_p_[i]) % p_) % p_;
    out += d * pow_p_[i];
  }
  return out;
}

FiniteField::Element FiniteField::neg(Element a) const {
  if (p_ == 2) return a;
  Element out = 0;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint32_t d = (a / pow_p_[i]) % p_;
    out += ((p_ - d) % p_) * pow_p_[i];
  }
  return out;
}

FiniteField::Element FiniteField::sub(Element a, Element b) const { return add(a, neg(b)); }

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero in a finite field");
  std::uint32_t l = log_[a];
  return antilog_[l == 0 ? 0 : q_ - 1 - l];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return antilog_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

FiniteField::Element FiniteField::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

}  // namespace ekr
