#include "ekr/psu3.hpp"

#include <algorithm>
#include <stdexcept>

#include "ekr/matrix_groups.hpp"

namespace ekr {

namespace {

void require_prime_power(std::uint64_t q) {
  std::uint64_t p;
  unsigned k;
  if (q < 3 || !prime_power(q, p, k)) throw std::invalid_argument("PSU_3(q) needs a prime power q >= 3");
}

unsigned gcd3(std::uint64_t q) { return (q + 1) % 3 == 0 ? 3 : 1; }

Integer exact_div(const Integer& a, const Integer& b) {
  if (mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) == 0) throw std::logic_error("formula quotient is not integral");
  return a / b;
}

Rational ratio(const Integer& a, const Integer& b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

// Phi_n by exact division of x^n - 1 by the cyclotomic polynomials of the
// proper divisors of n.
IntPoly cyclotomic(std::uint64_t n) {
  IntPoly p(n + 1, Integer(0));
  p[0] = -1;
  p[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d) continue;
    IntPoly f = cyclotomic(d);
    // Monic long division p / f.
    IntPoly quotient(p.size() - f.size() + 1, Integer(0));
    IntPoly rem = p;
    for (std::size_t i = quotient.size(); i-- > 0;) {
      Integer c = rem[i + f.size() - 1];
      quotient[i] = c;
      if (c != 0)
        for (std::size_t j = 0; j < f.size(); ++j) rem[i + j] -= c * f[j];
    }
    p = std::move(quotient);
  }
  return p;
}

// Reduces sum c_r x^r modulo the monic polynomial f.
IntPoly reduce_mod(IntPoly a, const IntPoly& f) {
  const std::size_t df = f.size() - 1;
  for (std::size_t i = a.size(); i-- > df;) {
    Integer c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= df; ++j) a[i - df + j] -= c * f[j];
  }
  a.resize(std::min(a.size(), df));
  return a;
}

TripleClaim make_claim(std::string description, const Rational& claimed, std::vector<std::uint64_t> elements,
                       const std::vector<std::uint64_t>& tally) {
  TripleClaim c;
  c.description = std::move(description);
  c.claimed = claimed;
  c.elements = std::move(elements);
  c.pass = true;
  for (auto e : c.elements) {
    c.observed.push_back(tally[e]);
    if (Rational(static_cast<unsigned long>(tally[e])) != claimed) c.pass = false;
  }
  return c;
}

}  // namespace

PSU3Scheme psu3_scheme(std::uint64_t q) {
  require_prime_power(q);
  PSU3Scheme s;
  s.q = q;
  s.d = gcd3(q);
  const Integer Q = static_cast<unsigned long>(q);
  const Integer Q3 = Q * Q * Q;
  s.order = psu3_order(q);
  const Integer torus = Q * Q - Q + 1;
  const Integer split = (Q + 1) * (Q + 1);
  if (s.d == 1) {
    s.c1_total = exact_div(Q3 * Q * (Q * Q - 1) * (Q * Q - 1), 3);
    s.c2_total = exact_div(Q3 * Q * (Q - 1) * (Q - 1) * torus, 6);
    s.c1_classes = exact_div(Q * Q - Q, 3);
    s.c2_classes = exact_div(Q * Q - Q, 6);
    s.c1_class_size = exact_div(s.order, torus);
    s.c2_class_size = exact_div(s.order, split);
    s.c2_single_class_size = 0;
    s.class_counts_consistent =
        s.c1_classes * s.c1_class_size == s.c1_total && s.c2_classes * s.c2_class_size == s.c2_total;
  } else {
    s.c1_total = exact_div(Q3 * (Q - 1) * (Q + 1) * (Q + 1) * (Q + 1) * (Q - 2), 9);
    s.c2_total = exact_div(Q3 * (Q - 1) * torus * (Q * Q - Q + 4), 18);
    s.c1_classes = exact_div(Q * Q - Q - 2, 9);
    Integer c2_prime = exact_div(Q * Q - Q - 2, 18);
    s.c2_classes = c2_prime + 1;
    s.c1_class_size = exact_div(3 * s.order, torus);
    s.c2_class_size = exact_div(3 * s.order, split);
    s.c2_single_class_size = exact_div(s.order, split);
    s.class_counts_consistent = s.c1_classes * s.c1_class_size == s.c1_total &&
                                c2_prime * s.c2_class_size + s.c2_single_class_size == s.c2_total;
  }
  s.a = ratio(Q * (2 * Q * Q + Q - 1), 3 * s.c1_total);
  s.b = ratio(Q * torus, 3 * s.c2_total);
  s.principal_is_q_cubed = s.a * Rational(s.c1_total) + s.b * Rational(s.c2_total) == Rational(Q3);

  s.predicted.push_back({"principal", 1, 1, Rational(Q3)});
  s.predicted.push_back({"psi", Q3, 1, -1});
  s.predicted.push_back({"degree q(q-1)", Q * (Q - 1), 1, -1});
  if (s.d == 1) {
    if (q % 2 == 1) {
      s.predicted.push_back({"degree q^2-q+1, u=(q+1)/2", torus, 1, -1});
      s.predicted.push_back({"degree q^2-q+1, other u", torus, Q - 1, ratio(2, Q - 1)});
    } else {
      s.predicted.push_back({"degree q^2-q+1", torus, Q, ratio(2, Q - 1)});
    }
  } else {
    s.predicted.push_back({"degree q^2-q+1", torus, exact_div(Q + 1, 3) - 1, ratio(6 * Q, Q * Q - Q + 4)});
  }
  return s;
}

WeightVector psu3_weights(const PSU3Scheme& scheme, const ConjugacyClassTable& classes, const ActionStats& stats) {
  const std::uint64_t centraliser = (scheme.q * scheme.q - scheme.q + 1) / scheme.d;
  std::vector<Rational> values;
  Integer c1 = 0, c2 = 0;
  for (ClassId c : stats.derangement_classes) {
    bool first = stats.order / classes[c].size == centraliser;
    values.push_back(first ? scheme.a : scheme.b);
    (first ? c1 : c2) += static_cast<unsigned long>(classes[c].size);
  }
  if (c1 != scheme.c1_total || c2 != scheme.c2_total)
    throw DataError("derangement class totals " + to_string(c1) + " and " + to_string(c2) + " do not match the PSU_3(" +
                    std::to_string(scheme.q) + ") scheme");
  return WeightVector::from_values(stats, std::move(values));
}

bool PSU3SpectrumCheck::all_pass() const {
  return max_is_q_cubed && min_is_minus_one && degree_budget_ok &&
         std::all_of(present.begin(), present.end(), [](const auto& p) { return p.second; });
}

PSU3SpectrumCheck psu3_check_spectrum(const PSU3Scheme& scheme, const Spectrum& s) {
  PSU3SpectrumCheck out;
  const Integer Q = static_cast<unsigned long>(scheme.q);
  out.max_is_q_cubed = s.max().exact() && s.max().value.value() == Rational(Q * Q * Q);
  out.min_is_minus_one = s.min().exact() && s.min().value.value() == -1;
  Integer budget = 0;
  for (const auto& p : scheme.predicted) {
    out.present.emplace_back(p, s.find(p.value) != nullptr);
    if (p.value == -1) budget += p.character_count * p.character_degree * p.character_degree;
  }
  const SpectrumEntry* neg = s.find(-1);
  out.degree_budget_ok = neg != nullptr && neg->multiplicity == budget;
  return out;
}

std::vector<std::array<std::uint64_t, 3>> psu3_triples(std::uint64_t q) {
  const std::uint64_t n = q + 1;
  std::vector<std::array<std::uint64_t, 3>> out;
  const bool primed = gcd3(q) == 3;
  const std::uint64_t l_max = primed ? n / 3 : n;
  for (std::uint64_t k = 1; k <= n; ++k)
    for (std::uint64_t l = k + 1; l <= l_max; ++l)
      for (std::uint64_t m = l + 1; m <= n; ++m)
        if ((k + l + m) % n == 0) out.push_back({k, l, m});
  return out;
}

bool TripleCounts::all_pass() const {
  bool ok = std::all_of(claims.begin(), claims.end(), [](const TripleClaim& c) { return c.pass; });
  if (d == 1) ok = ok && Rational(static_cast<unsigned long>(triple_count)) == expected_triple_count;
  return ok;
}

TripleCounts psu3_triple_counts(std::uint64_t q) {
  require_prime_power(q);
  if (q > 1000) throw std::invalid_argument("triple enumeration supports q <= 1000");
  TripleCounts t;
  t.q = q;
  t.d = gcd3(q);
  const std::uint64_t n = q + 1;
  auto triples = psu3_triples(q);
  t.triple_count = triples.size();
  const Integer Q = static_cast<unsigned long>(q);
  if (t.d == 1) {
    t.expected_triple_count = ratio(Q * Q - Q, 6);
    std::vector<std::uint64_t> tally(n + 1, 0);
    for (const auto& tr : triples)
      for (auto x : tr) ++tally[x];
    std::vector<std::uint64_t> odd, even;
    for (std::uint64_t x = 1; x <= q; ++x) (x % 2 ? odd : even).push_back(x);
    if (q % 2 == 1) {
      t.claims.push_back(make_claim("q+1 occurs in (q-1)/2 triples", ratio(Q - 1, 2), {n}, tally));
      t.claims.push_back(make_claim("odd elements of 1..q occur in (q-1)/2 triples", ratio(Q - 1, 2), odd, tally));
      t.claims.push_back(make_claim("even elements of 1..q occur in (q-3)/2 triples", ratio(Q - 3, 2), even, tally));
    } else {
      std::vector<std::uint64_t> all = odd;
      all.insert(all.end(), even.begin(), even.end());
      std::sort(all.begin(), all.end());
      t.claims.push_back(make_claim("q+1 occurs in q/2 triples", ratio(Q, 2), {n}, tally));
      t.claims.push_back(make_claim("elements of 1..q occur in (q-2)/2 triples", ratio(Q - 2, 2), all, tally));
    }
  } else {
    // Entries j of triples in T' tallied by the index i in 1..(q+1)/3 with j = 3i mod (q+1).
    const std::uint64_t third = n / 3;
    std::vector<std::uint64_t> tally(third + 1, 0);
    for (const auto& tr : triples)
      for (auto x : tr)
        for (std::uint64_t i = 1; i <= third; ++i)
          if ((3 * i) % n == x % n) ++tally[i];
    std::vector<std::uint64_t> all, odd, even;
    for (std::uint64_t i = 1; i <= third; ++i) {
      all.push_back(i);
      (i % 2 ? odd : even).push_back(i);
    }
    if (q % 2 == 1) {
      t.claims.push_back(make_claim("entries congruent to 3i occur (q-2)/6 times", ratio(Q - 2, 6), all, tally));
    } else {
      t.claims.push_back(make_claim("entries congruent to 3i, i even, occur (q-5)/6 times", ratio(Q - 5, 6), even, tally));
      t.claims.push_back(make_claim("entries congruent to 3i, i odd, occur (q+1)/6 times", ratio(Q + 1, 6), odd, tally));
    }
  }
  return t;
}

Rational psu3_eigenvalue_from_sum(std::uint64_t q, const Rational& sum) {
  const Integer Q = static_cast<unsigned long>(q);
  Rational out = gcd3(q) == 1 ? Rational(2 * sum / Rational(Q - 1)) : Rational(Rational(6 * Q) * (sum + 1) / Rational(Q * Q - Q + 4));
  out.canonicalize();
  return out;
}

CharacterSum psu3_character_sum(std::uint64_t q, std::uint64_t u) {
  require_prime_power(q);
  CharacterSum cs;
  cs.q = q;
  cs.u = u;
  cs.d = gcd3(q);
  const std::uint64_t n = q + 1;
  const std::uint64_t u_max = cs.d == 1 ? q : n / 3 - 1;
  if (u < 1 || u > u_max) throw std::invalid_argument("character parameter u out of range");
  IntPoly f(n, Integer(0));
  for (const auto& tr : psu3_triples(q))
    for (auto x : tr) f[(3 * u * x) % n] += 1;
  IntPoly r = reduce_mod(f, cyclotomic(n));
  bool rational = true;
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) rational = false;
  if (rational) cs.value = Rational(r.empty() ? Integer(0) : r[0]);
  const Integer Q = static_cast<unsigned long>(q);
  if (cs.d == 1)
    cs.claimed = (q % 2 == 1 && 2 * u == n) ? -ratio(Q + 1, 2) : Rational(1);
  else
    cs.claimed = 0;
  cs.pass = cs.value && *cs.value == cs.claimed;
  if (cs.value) cs.eigenvalue = psu3_eigenvalue_from_sum(q, *cs.value);
  return cs;
}

}  // namespace ekr
