#include "ekr/suzuki_ree.hpp"

#include <algorithm>
#include <stdexcept>

namespace ekr {

namespace {

// Returns e with q = base^e, or -1.
long exact_log(const Integer& q, unsigned long base) {
  if (q < 1) return -1;
  Integer v = q;
  long e = 0;
  while (v > 1) {
    if (mpz_divisible_ui_p(v.get_mpz_t(), base) == 0) return -1;
    v /= base;
    ++e;
  }
  return e;
}

Integer exact_quotient(const Integer& a, const Integer& b) {
  if (mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) == 0) throw std::logic_error("formula quotient is not integral");
  return a / b;
}

}  // namespace

SuzukiData sz_spectrum(const Integer& q) {
  long e = exact_log(q, 2);
  if (e < 3 || e % 2 == 0) throw std::invalid_argument("Suzuki groups need q = 2^(2l+1) with l >= 1");
  SuzukiData s;
  s.q = q;
  s.r = power(Integer(2), static_cast<unsigned long>((e - 1) / 2 + 1));
  s.r_squared_is_2q = s.r * s.r == 2 * q;
  s.order = (q * q + 1) * q * q * (q - 1);
  s.degree = q * q + 1;
  const Integer& r = s.r;
  Integer pi1 = exact_quotient(q + r, 4) * (q - r + 1) * q * q * (q - 1);
  Integer pi2 = exact_quotient(q - r, 4) * (q + r + 1) * q * q * (q - 1);
  s.derangements = pi1 + pi2;
  Integer valency = exact_quotient(q * q * q * (q - 1) * (q - 1), 2);
  s.derangements_match_valency = s.derangements == valency;
  s.spectrum = {
      {-exact_quotient(q * (q - 1) * (q - 1), 2), q * q * q * q, "X"},
      {0, (q * q + 1) * (q * q + 1) * exact_quotient(q - 2, 2), "X_i"},
      {q * q, exact_quotient(q * (q - 1) * (q - 1) * (q - 1) * (q + 1), 2), "Y_j, Z_k, W_l"},
      {valency, 1, "principal"},
  };
  Integer total = 0;
  for (const auto& e2 : s.spectrum) total += e2.multiplicity;
  s.multiplicities_sum_to_order = total == s.order;
  return s;
}

ReeData ree_family_check(const Integer& q) {
  long e = exact_log(q, 3);
  if (e < 3 || e % 2 == 0) throw std::invalid_argument("Ree groups need q = 3^(2l+1) with l >= 1");
  ReeData d;
  d.q = q;
  d.m = power(Integer(3), static_cast<unsigned long>((e - 1) / 2));
  const Integer& m = d.m;
  Integer q3 = q * q * q;
  d.order = (q3 + 1) * q3 * (q - 1);
  d.degree = q3 + 1;
  Integer torus_class = (q * q - q + 1) * q3 * (q - 1);
  d.families = {
      {"S^a", exact_quotient(q - 3, 24), torus_class},
      {"JS^a", exact_quotient(q - 3, 8), torus_class},
      {"V", exact_quotient(q - 3 * m, 6), (q + 1 + 3 * m) * q3 * (q * q - 1)},
      {"W", exact_quotient(q + 3 * m, 6), (q + 1 - 3 * m) * q3 * (q * q - 1)},
  };
  d.family_total = 0;
  for (const auto& f : d.families) d.family_total += f.class_count * f.class_size;
  Integer core = q3 - 2 * q * q - 1;
  d.valency = exact_quotient(q3 * (q - 1) * core, 2);
  d.family_identity = d.family_total == d.valency;

  d.xi3 = -exact_quotient((q - 1) * core, 2);
  Integer low = 3 * m * q * q * (-q + 4 * m - 1);
  Integer high = 3 * m * q * q * (q + 4 * m + 1);
  d.listed = {{"xi1", d.valency}, {"xi2", 0},     {"xi3", d.xi3}, {"xi4", 0},  {"xi5", low},
              {"xi6", high},      {"xi7", low},   {"xi8", high},  {"xi9", q3}, {"xi10", q3}};
  d.dominance = std::all_of(d.listed.begin(), d.listed.end(),
                            [&](const ReeEigenvalue& v) { return v.afforded_by == "xi3" || v.value > d.xi3; });

  // (|Omega|-1)^2 (|G|/|D| - 2) with |D| the valency.
  Rational ratio(d.order, d.valency);
  ratio.canonicalize();
  Rational lhs = Rational(q3 * q3) * (ratio - 2);
  lhs.canonicalize();
  Rational rhs(q3 * q3 * (4 * q * q + 4), core);
  rhs.canonicalize();
  d.critical_identity = lhs == rhs;
  Rational radicand(4 * q * q + 4, core);
  radicand.canonicalize();
  d.critical_rhs = Enclosure::point(Rational(q3)) * sqrt_enclosure(radicand, 96);
  return d;
}

}  // namespace ekr
