#include "ekr/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace ekr {

namespace {

struct IntegralRoot {
  RealAlgebraic value;  // eigenvalue of L * M
  int multiplicity;
};

std::vector<IntegralRoot> integral_roots(const IntMatrix& m, IntPoly* squarefree_product) {
  IntPoly chi = characteristic_polynomial(m);
  std::vector<IntegralRoot> roots;
  IntPoly prod{Integer(1)};
  for (auto& [factor, mult] : squarefree_decomposition(chi)) {
    auto rs = real_roots(factor);
    if (static_cast<int>(rs.size()) != degree(factor))
      throw std::logic_error("collapsed matrix has non-real eigenvalues; weights are not inverse-closed");
    for (auto& r : rs) roots.push_back({std::move(r), mult});
    IntPoly next(prod.size() + factor.size() - 1, Integer(0));
    for (std::size_t i = 0; i < prod.size(); ++i)
      for (std::size_t j = 0; j < factor.size(); ++j) next[i + j] += prod[i] * factor[j];
    prod = std::move(next);
  }
  std::sort(roots.begin(), roots.end(), [](const IntegralRoot& a, const IntegralRoot& b) { return less_than(a.value, b.value); });
  if (squarefree_product) *squarefree_product = std::move(prod);
  return roots;
}

// Tr((L M)^k) for k = 0..count-1 on the full group, from the identity
// coefficient of powers of the weighted class sum.
std::vector<Integer> integral_power_sums(const IntMatrix& m, const Integer& order, std::size_t count) {
  const std::size_t r = m.size();
  std::vector<Integer> v(r, Integer(0)), next(r);
  v[0] = 1;
  std::vector<Integer> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(order * v[0]);
    if (k + 1 == count) break;
    for (std::size_t i = 0; i < r; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < r; ++j)
        if (m[i][j] != 0 && v[j] != 0) s += m[i][j] * v[j];
      next[i] = s;
    }
    std::swap(v, next);
  }
  return out;
}

// m(mu) = sum_k q_k(mu) T_k / P'(mu) with q = P / (x - mu).
template <typename T>
T multiplicity_formula(const IntPoly& p, const T& mu, const std::vector<Integer>& sums, const T& dp) {
  const int s = degree(p);
  T q = T(p[static_cast<std::size_t>(s)]);
  T acc = q * T(sums[static_cast<std::size_t>(s - 1)]);
  for (int k = s - 1; k >= 1; --k) {
    q = T(p[static_cast<std::size_t>(k)]) + mu * q;
    acc = acc + q * T(sums[static_cast<std::size_t>(k - 1)]);
  }
  return acc / dp;
}

Integer solve_multiplicity(const IntPoly& p, const IntPoly& dp, const RealAlgebraic& mu, const std::vector<Integer>& sums) {
  if (mu.is_rational()) {
    Rational m = multiplicity_formula<Rational>(p, mu.value(), sums, evaluate(dp, mu.value()));
    if (m.get_den() != 1 || m <= 0) throw std::logic_error("eigenvalue multiplicity is not a positive integer");
    return m.get_num();
  }
  // Interval evaluation; refine until the enclosure pins a single integer.
  for (unsigned long bits = 64; bits <= (1UL << 20); bits *= 2) {
    Rational width(Integer(1), power(Integer(2), bits));
    Enclosure x = mu.refined(width).enclosure();
    Enclosure d = evaluate(dp, x);
    if (d.lo <= 0 && d.hi >= 0) continue;
    Enclosure q = Enclosure::point(Rational(p.back()));
    Enclosure acc = q * Enclosure::point(Rational(sums[p.size() - 2]));
    for (int k = degree(p) - 1; k >= 1; --k) {
      q = Enclosure::point(Rational(p[static_cast<std::size_t>(k)])) + x * q;
      acc = acc + q * Enclosure::point(Rational(sums[static_cast<std::size_t>(k - 1)]));
    }
    Enclosure m = acc / d;
    Integer lo_int, hi_int;
    mpz_cdiv_q(lo_int.get_mpz_t(), m.lo.get_num_mpz_t(), m.lo.get_den_mpz_t());
    mpz_fdiv_q(hi_int.get_mpz_t(), m.hi.get_num_mpz_t(), m.hi.get_den_mpz_t());
    if (lo_int == hi_int && m.width() < 1) {
      if (lo_int <= 0) throw std::logic_error("eigenvalue multiplicity is not positive");
      return lo_int;
    }
  }
  throw std::logic_error("multiplicity enclosure did not converge");
}

}  // namespace

std::vector<CollapsedEigenvalue> eigenvalues_exact(const CollapsedMatrix& m) {
  std::vector<CollapsedEigenvalue> out;
  for (auto& r : integral_roots(m.integral, nullptr)) out.push_back({r.value.divided_by(m.scale), r.multiplicity});
  return out;
}

Rational power_sum(const ClassAlgebra& algebra, const ActionStats& stats, const WeightVector& weights, unsigned k) {
  CollapsedMatrix m = collapsed_matrix(algebra, stats, weights);
  Integer order = algebra.group().order();
  auto sums = integral_power_sums(m.integral, order, k + 1);
  Rational out(sums.back(), power(m.scale, k));
  out.canonicalize();
  return out;
}

Integer Spectrum::total_multiplicity() const {
  Integer t = 0;
  for (const auto& e : entries) t += e.multiplicity;
  return t;
}

const SpectrumEntry* Spectrum::find(const Rational& value) const {
  for (const auto& e : entries)
    if (e.value.is_rational() && e.value.value() == value) return &e;
  return nullptr;
}

Spectrum spectrum(const ClassAlgebra& algebra, const ActionStats& stats, const WeightVector& weights) {
  CollapsedMatrix m = collapsed_matrix(algebra, stats, weights);
  Spectrum s;
  s.order = algebra.group().order();
  IntPoly p;
  auto roots = integral_roots(m.integral, &p);
  IntPoly dp = derivative(p);
  auto sums = integral_power_sums(m.integral, s.order, static_cast<std::size_t>(degree(p)));
  for (const auto& r : roots) {
    SpectrumEntry e;
    e.multiplicity = solve_multiplicity(p, dp, r.value, sums);
    e.value = r.value.divided_by(m.scale);
    e.character_count = r.multiplicity;
    s.entries.push_back(std::move(e));
  }
  if (s.total_multiplicity() != s.order) throw std::logic_error("eigenvalue multiplicities do not sum to the group order");
  return s;
}

bool verify_trace_identity(const Spectrum& s, const ClassAlgebra& algebra, const WeightVector& weights) {
  if (s.total_multiplicity() != s.order) return false;
  Rational target = 0;
  const auto& cls = algebra.classes();
  for (std::size_t i = 0; i < weights.classes.size(); ++i)
    target += weights.values[i] * weights.values[i] * Rational(static_cast<unsigned long>(cls[weights.classes[i]].size));
  target *= Rational(s.order);
  Enclosure total = Enclosure::point(0);
  for (const auto& e : s.entries) {
    Enclosure v = e.value.is_rational() ? Enclosure::point(e.value.value()) : e.value.refined(Rational(Integer(1), power(Integer(2), 200))).enclosure();
    total = total + Enclosure::point(Rational(e.multiplicity)) * v * v;
  }
  return total.contains(target) && (total.is_point() || total.width() < 1);
}

}  // namespace ekr
