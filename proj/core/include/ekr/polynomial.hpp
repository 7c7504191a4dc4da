#pragma once

#include <utility>
#include <vector>

#include "ekr/interval.hpp"
#include "ekr/numeric.hpp"

namespace ekr {

// Dense univariate polynomial, coefficient i multiplies x^i. The zero
// polynomial is the empty vector; leading coefficients are never zero.
using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;
using IntMatrix = std::vector<std::vector<Integer>>;

int degree(const IntPoly& p);
void trim(IntPoly& p);
void trim(RatPoly& p);
IntPoly derivative(const IntPoly& p);
Integer content(const IntPoly& p);
// Divides out the content and makes the leading coefficient positive.
IntPoly primitive_part(const IntPoly& p);
RatPoly to_rational(const IntPoly& p);
// Clears denominators and returns the primitive part.
IntPoly to_primitive_integer(const RatPoly& p);

Rational evaluate(const IntPoly& p, const Rational& x);
Integer evaluate(const IntPoly& p, const Integer& x);
// Sign of p(x) computed in integers (homogenised at the denominator of x).
int sign_at(const IntPoly& p, const Rational& x);
Enclosure evaluate(const IntPoly& p, const Enclosure& x);

// Exact quotient p / (x - r) for a root r; throws if r is not a root.
RatPoly deflate(const RatPoly& p, const Rational& r);

// det(xI - m) by the division-free Berkowitz recurrence. Result is monic.
IntPoly characteristic_polynomial(const IntMatrix& m);

// Yun's square-free factorisation: p = lc * prod f_j^j with f_j square-free,
// pairwise coprime, primitive with positive leading coefficient. Only
// non-constant factors are returned, paired with their multiplicity j.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// A real algebraic number: either an exact rational, or the unique root of a
// square-free integer polynomial inside an open isolating interval (lo, hi)
// with a strict sign change of the polynomial across it.
class RealAlgebraic {
 public:
  static RealAlgebraic from_rational(const Rational& v);
  static RealAlgebraic from_isolating_interval(IntPoly p, Rational lo, Rational hi);

  bool is_rational() const { return exact_; }
  const Rational& value() const;  // only valid when is_rational()
  const IntPoly& defining_polynomial() const { return poly_; }
  Enclosure enclosure() const;
  double approx() const;

  // Narrow the isolating interval by bisection until its width is at most w.
  RealAlgebraic refined(const Rational& w) const;
  // Value divided by a positive integer.
  RealAlgebraic divided_by(const Integer& d) const;
  RealAlgebraic negated() const;

 private:
  IntPoly poly_;
  Rational lo_, hi_;
  bool exact_ = true;
};

// Certified ordering; values must be distinct unless both are rational.
bool less_than(const RealAlgebraic& a, const RealAlgebraic& b);

// All distinct real roots of a square-free polynomial, ascending. Roots that
// are rational are detected and returned exactly.
std::vector<RealAlgebraic> real_roots(const IntPoly& squarefree);

}  // namespace ekr
