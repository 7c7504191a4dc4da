#include "ekr/interval.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>

namespace ekr {

double Enclosure::approx() const { return Rational((lo + hi) / 2).get_d(); }

std::string Enclosure::to_string(int digits) const {
  return "[" + decimal_string(lo, digits, true) + ", " + decimal_string(hi, digits, false) + "]";
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Enclosure operator-(const Enclosure& a, const Enclosure& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Enclosure operator-(const Enclosure& a) { return {-a.hi, -a.lo}; }

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (b.lo <= 0 && b.hi >= 0) throw std::domain_error("interval division by an enclosure containing 0");
  Enclosure inv{1 / b.hi, 1 / b.lo};
  return a * inv;
}

Enclosure sqrt_enclosure(const Rational& x, unsigned bits) {
  if (x < 0) throw std::domain_error("sqrt of a negative rational");
  // sqrt(p/q) = sqrt(p*q)/q; bracket sqrt(p*q*4^bits) by integer square roots.
  Integer pq = x.get_num() * x.get_den();
  Integer root;
  mpz_sqrt(root.get_mpz_t(), pq.get_mpz_t());
  if (root * root == pq) {
    Rational exact(root, x.get_den());
    exact.canonicalize();
    return Enclosure::point(exact);
  }
  Integer scaled = pq << (2 * bits);
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Integer den = Integer(x.get_den()) << bits;
  Rational lo(root, den), hi(root + 1, den);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

Enclosure sqrt_enclosure(const Enclosure& x, unsigned bits) {
  if (x.lo < 0) throw std::domain_error("sqrt of an enclosure reaching below 0");
  return {sqrt_enclosure(x.lo, bits).lo, sqrt_enclosure(x.hi, bits).hi};
}

namespace {

class MpfrValue {
 public:
  explicit MpfrValue(unsigned bits) { mpfr_init2(v_, bits); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

Rational to_rational(mpfr_ptr v) {
  Rational r;
  mpfr_get_q(r.get_mpq_t(), v);
  return r;
}

template <typename Fn>
Enclosure directed(const Rational& x, unsigned bits, Fn fn) {
  if (x <= 0) throw std::domain_error("logarithm of a non-positive rational");
  MpfrValue in_lo(bits), in_hi(bits), out_lo(bits), out_hi(bits);
  mpfr_set_q(in_lo.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(in_hi.get(), x.get_mpq_t(), MPFR_RNDU);
  fn(out_lo.get(), in_lo.get(), MPFR_RNDD);
  fn(out_hi.get(), in_hi.get(), MPFR_RNDU);
  return {to_rational(out_lo.get()), to_rational(out_hi.get())};
}

}  // namespace

Enclosure log_enclosure(const Rational& x, unsigned bits) {
  if (x == 1) return Enclosure::point(0);
  return directed(x, bits, [](mpfr_ptr o, mpfr_ptr i, mpfr_rnd_t r) { mpfr_log(o, i, r); });
}

Enclosure log2_enclosure(const Rational& x, unsigned bits) {
  // Exact for powers of two (numerator or denominator a power of two, other side 1).
  if (x > 0) {
    const Integer& n = x.get_num();
    const Integer& d = x.get_den();
    if (d == 1 && mpz_popcount(n.get_mpz_t()) == 1)
      return Enclosure::point(Rational(static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2) - 1)));
    if (n == 1 && mpz_popcount(d.get_mpz_t()) == 1)
      return Enclosure::point(Rational(-static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2) - 1)));
  }
  return directed(x, bits, [](mpfr_ptr o, mpfr_ptr i, mpfr_rnd_t r) { mpfr_log2(o, i, r); });
}

}  // namespace ekr
