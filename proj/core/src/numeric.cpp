#include "ekr/numeric.hpp"

#include <cctype>

namespace ekr {

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw DataError("empty rational literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digits_before = false, digits_after = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/') {
      if (slash) throw DataError("malformed rational literal: " + s);
      slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? digits_after : digits_before) = true;
    } else {
      throw DataError("malformed rational literal: " + s);
    }
  }
  if (!digits_before || (slash && !digits_after)) throw DataError("malformed rational literal: " + s);
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw DataError("malformed rational literal: " + s);
  if (r.get_den() == 0) throw DataError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string decimal_string(const Rational& value, int digits, bool round_down) {
  Integer scale = power(10, static_cast<unsigned long>(digits));
  Rational scaled = value * scale;
  Integer q;
  if (round_down)
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  else
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  bool negative = q < 0;
  Integer a = abs(q);
  std::string body = a.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + body : body;
}

double to_double(const Rational& value) { return value.get_d(); }

Integer power(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::uint64_t to_u64(const Integer& value) {
  if (value < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64)
    throw std::overflow_error("integer does not fit in 64 bits: " + value.get_str());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power(std::uint64_t n, std::uint64_t& p, unsigned& k) {
  if (n < 2) return false;
  std::uint64_t d = 2;
  while (d * d <= n && n % d != 0) ++d;
  if (n % d != 0) d = n;
  unsigned e = 0;
  std::uint64_t m = n;
  while (m % d == 0) {
    m /= d;
    ++e;
  }
  if (m != 1) return false;
  p = d;
  k = e;
  return true;
}

}  // namespace ekr
