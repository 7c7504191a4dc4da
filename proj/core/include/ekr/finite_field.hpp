#pragma once

#include <cstdint>
#include <vector>

namespace ekr {

// GF(q) for prime powers q <= 2^16.
//
// Elements are integers 0..q-1 read as base-p digit vectors: the element
// sum_i c_i p^i is the residue class of sum_i c_i x^i modulo the defining
// polynomial. The defining polynomial is the lexicographically least monic
// primitive polynomial of degree k over GF(p), comparing coefficient vectors
// (c_{k-1}, ..., c_0) as base-p integers; so x (the element p) generates the
// multiplicative group and log/antilog tables follow directly. For k = 1 the
// field is Z/p with the smallest primitive root as generator.
class FiniteField {
 public:
  using Element = std::uint32_t;

  explicit FiniteField(std::uint32_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  // Coefficients c_0..c_{k-1} of x^k = sum c_i x^i (the reduction rule).
  const std::vector<std::uint32_t>& reduction() const { return reduction_; }
  Element generator() const { return antilog_[1 % (q_ - 1)]; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return antilog_[s];
  }
  Element inv(Element a) const;  // a != 0
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;
  Element frobenius(Element a) const { return pow(a, p_); }
  // Discrete log to the generator; a != 0.
  std::uint32_t log(Element a) const { return log_[a]; }
  Element exp(std::uint64_t e) const { return antilog_[e % (q_ - 1)]; }
  // Image of an integer in the prime subfield.
  Element from_int(long long n) const;

 private:
  std::uint32_t q_;
  std::uint32_t p_;
  unsigned k_;
  std::vector<std::uint32_t> reduction_;
  std::vector<std::uint32_t> log_;
  std::vector<Element> antilog_;
  std::vector<std::uint32_t> pow_p_;  // p^i
};

}  // namespace ekr
