#pragma once

#include <string>

#include "ekr/numeric.hpp"

namespace ekr {

// Closed rational interval [lo, hi] certified to contain a real quantity.
struct Enclosure {
  Rational lo;
  Rational hi;

  static Enclosure point(const Rational& v) { return {v, v}; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  Rational width() const { return hi - lo; }
  double approx() const;
  // "[lo, hi]" with the given number of decimals, rounded outward.
  std::string to_string(int digits = 12) const;
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
Enclosure operator/(const Enclosure& a, const Enclosure& b);  // b must exclude 0
Enclosure operator-(const Enclosure& a);

// Certified sqrt(x) for x >= 0 with width at most 2^-bits (times a small factor).
// Returns a point enclosure when x is the square of a rational.
Enclosure sqrt_enclosure(const Rational& x, unsigned bits = 64);
Enclosure sqrt_enclosure(const Enclosure& x, unsigned bits = 64);

// Certified natural and binary logarithms of a positive rational, computed
// with outward-rounded MPFR at the given precision.
Enclosure log_enclosure(const Rational& x, unsigned bits = 128);
Enclosure log2_enclosure(const Rational& x, unsigned bits = 128);

}  // namespace ekr
