#include "ekr/symplectic.hpp"

#include <algorithm>
#include <stdexcept>

#include "ekr/bounds.hpp"

namespace ekr {

SpScheme sp_scheme(unsigned n, int epsilon) {
  if (n < 2) throw std::invalid_argument("Sp_2n(2) needs n >= 2");
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  SpScheme s;
  s.n = n;
  s.epsilon = epsilon;
  const Integer two_n = power(Integer(2), n);
  s.order = sp2n2_order(n);
  s.torus = two_n + epsilon;
  s.degree = power(Integer(2), n - 1) * s.torus;
  s.d = s.order / s.torus;
  s.tau = Rational(-s.d, s.degree - 1);
  s.tau.canonicalize();
  s.bound = Rational(s.order, s.degree);
  s.bound.canonicalize();
  const Integer half = power(Integer(2), n - 1);
  s.alpha = (half - 1) * (two_n - 1) / 3;
  s.beta = (half + 1) * (two_n + 1) / 3;
  s.zeta1 = (two_n * two_n - 1) / 3;
  s.weil_degree_identity = s.alpha + s.beta + 2 * s.zeta1 == two_n * two_n;
  s.ratio_matches = ratio_bound(Rational(s.d), s.tau, s.order) == s.bound;
  s.weighted_critical_rhs = Enclosure::point(Rational(s.degree - 1)) * sqrt_enclosure(Rational(s.torus - 2), 96);
  return s;
}

std::optional<ClassId> sp_torus_class(const GroupTable& g, const ConjugacyClassTable& classes,
                                      const SymplecticActions& actions, int epsilon) {
  return sp_torus_class(g, classes, epsilon == 1 ? actions.plus_range : actions.minus_range, actions.n, epsilon);
}

std::optional<ClassId> sp_torus_class(const GroupTable& g, const ConjugacyClassTable& classes, PointRange same,
                                      unsigned n, int epsilon) {
  const std::uint64_t torus = epsilon == 1 ? (std::uint64_t{1} << n) + 1 : (std::uint64_t{1} << n) - 1;
  std::optional<ClassId> best;
  for (ClassId c = 0; c < classes.size(); ++c) {
    const auto& k = classes[c];
    if (k.element_order != torus || g.fixed_points(k.representative, same) != 0) continue;
    if (!best || k.size > classes[*best].size) best = c;
  }
  return best;
}

bool SpWeilCheck::all_pass() const {
  return degrees_sum_to_forms && plus.pass && minus.pass &&
         std::all_of(classes.begin(), classes.end(), [](const WeilClassCheck& c) { return c.pass; });
}

SpWeilCheck sp_weil_identity_check(const GroupTable& g, const ConjugacyClassTable& classes, const SymplecticActions& actions) {
  if (g.degree() != actions.combined.degree) throw std::invalid_argument("group table does not carry the combined action");
  SpWeilCheck out;
  out.degrees_sum_to_forms = actions.plus_range.size() + actions.minus_range.size() == (std::size_t{1} << (2 * actions.n));
  for (ClassId c = 0; c < classes.size(); ++c) {
    ElementId x = classes[c].representative;
    WeilClassCheck w;
    w.cls = c;
    w.fixed_plus = static_cast<long>(g.fixed_points(x, actions.plus_range));
    w.fixed_minus = static_cast<long>(g.fixed_points(x, actions.minus_range));
    w.fixed_vectors = static_cast<long>(g.fixed_points(x, actions.natural_range));
    w.pass = w.fixed_plus + w.fixed_minus == w.fixed_vectors + 1;
    out.classes.push_back(w);
  }
  for (int eps : {1, -1}) {
    TorusPattern& t = eps == 1 ? out.plus : out.minus;
    t.epsilon = eps;
    t.cls = sp_torus_class(g, classes, actions, eps);
    if (!t.cls) continue;
    ElementId x = classes[*t.cls].representative;
    PointRange same = eps == 1 ? actions.plus_range : actions.minus_range;
    PointRange other = eps == 1 ? actions.minus_range : actions.plus_range;
    t.fixed_same = static_cast<long>(g.fixed_points(x, same));
    t.fixed_other = static_cast<long>(g.fixed_points(x, other));
    t.pass = t.fixed_same == 0 && t.fixed_other == 1;
  }
  return out;
}

WeightVector sp_weights(const GroupTable& g, const ConjugacyClassTable& classes, const ActionStats& stats, unsigned n,
                        int epsilon) {
  auto c = sp_torus_class(g, classes, stats.range, n, epsilon);
  if (!c) throw std::invalid_argument("no class of torus generators of order 2^n + eps");
  std::vector<ClassId> support{*c};
  if (classes[*c].inverse != *c) support.push_back(classes[*c].inverse);
  return WeightVector::indicator(stats, support);
}

}  // namespace ekr
