#include "ekr/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace ekr {

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::ratio: return "ratio";
    case BoundKind::weighted_ratio: return "weighted-ratio";
    case BoundKind::clique_coclique: return "clique-coclique";
    case BoundKind::critical: return "critical";
    case BoundKind::weighted_critical: return "weighted-critical";
    case BoundKind::subgroup_reduction: return "subgroup-reduction";
  }
  return "unknown";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified: return "EKR-certified";
    case Verdict::certified_with_surrogate: return "EKR-certified-with-conjecture-surrogate";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

Rational ratio_bound(const Rational& d, const Rational& tau, const Integer& order) {
  if (tau >= 0) throw std::invalid_argument("ratio bound needs a negative least eigenvalue");
  if (d <= 0) throw std::invalid_argument("ratio bound needs a positive largest eigenvalue");
  Rational out = Rational(order) / (1 - d / tau);
  out.canonicalize();
  return out;
}

Enclosure ratio_bound(const Enclosure& d, const Enclosure& tau, const Integer& order) {
  if (tau.hi >= 0) throw std::invalid_argument("ratio bound needs a negative least eigenvalue");
  if (d.lo <= 0) throw std::invalid_argument("ratio bound needs a positive largest eigenvalue");
  // |G| tau / (tau - d): both factors of the quotient are negative.
  return Enclosure::point(Rational(order)) * tau / (tau - d);
}

Enclosure weighted_ratio_bound(const Spectrum& s) {
  if (s.entries.size() < 2) throw std::invalid_argument("spectrum has a single eigenvalue; the ratio bound is undefined");
  const auto& mx = s.max().value;
  const auto& mn = s.min().value;
  if (!mx.is_rational()) throw std::invalid_argument("largest eigenvalue is not rational");
  if (mn.is_rational()) return Enclosure::point(ratio_bound(mx.value(), mn.value(), s.order));
  auto tau = mn.refined(Rational(Integer(1), power(Integer(2), 128))).enclosure();
  return ratio_bound(Enclosure::point(mx.value()), tau, s.order);
}

Rational clique_coclique_bound(const Integer& n, const Integer& clique) {
  if (clique <= 0) throw std::invalid_argument("clique size must be positive");
  Rational out(n, clique);
  out.canonicalize();
  return out;
}

namespace {

CriticalRhs finish_rhs(std::size_t degree, Rational radicand) {
  CriticalRhs out;
  radicand.canonicalize();
  out.radicand = radicand;
  out.negative_radicand = radicand < 0;
  if (!out.negative_radicand)
    out.value = Enclosure::point(Rational(static_cast<unsigned long>(degree - 1))) * sqrt_enclosure(radicand, 96);
  return out;
}

}  // namespace

CriticalRhs critical_degree_rhs(std::size_t degree, const Integer& order, const Integer& derangements) {
  if (derangements <= 0) throw std::invalid_argument("critical bound needs at least one derangement");
  Rational ratio(order, derangements);
  ratio.canonicalize();
  return finish_rhs(degree, ratio - 2);
}

CriticalRhs weighted_critical_rhs(std::size_t degree, const Integer& order, const std::vector<Rational>& weights,
                                  const std::vector<Integer>& class_sizes) {
  if (weights.size() != class_sizes.size()) throw std::invalid_argument("weights and class sizes differ in length");
  Rational sq = 0, lin = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) throw std::invalid_argument("weights must be nonnegative");
    sq += weights[i] * weights[i] * Rational(class_sizes[i]);
    lin += weights[i] * Rational(class_sizes[i]);
  }
  if (lin == 0) throw std::invalid_argument("weights are all zero");
  return finish_rhs(degree, Rational(order) * sq / (lin * lin) - 2);
}

SubgroupReduction subgroup_reduction(const GroupTable& g, const std::vector<ElementId>& subgroup, PointRange range) {
  if (subgroup.empty()) throw std::invalid_argument("subgroup is empty");
  std::vector<char> member(g.order(), 0);
  for (ElementId h : subgroup) {
    if (h >= g.order()) throw std::invalid_argument("subgroup element id out of range");
    member[h] = 1;
  }
  std::size_t distinct = static_cast<std::size_t>(std::count(member.begin(), member.end(), 1));
  for (ElementId a : subgroup)
    for (ElementId b : subgroup)
      if (!member[g.multiply(a, b)]) throw std::invalid_argument("element set is not closed under multiplication");
  std::vector<char> seen(g.degree(), 0);
  std::size_t reached = 0;
  for (ElementId h : subgroup) {
    Point p = g.image(h, static_cast<Point>(range.begin));
    if (!seen[p]) {
      seen[p] = 1;
      ++reached;
    }
  }
  if (reached != range.size()) throw std::invalid_argument("subgroup is not transitive on the action");
  SubgroupReduction out;
  out.group_order = static_cast<unsigned long>(g.order());
  out.subgroup_order = static_cast<unsigned long>(distinct);
  out.degree = range.size();
  out.subgroup_bound = Rational(out.subgroup_order, static_cast<unsigned long>(out.degree));
  out.subgroup_bound.canonicalize();
  out.group_bound = Rational(out.group_order, static_cast<unsigned long>(out.degree));
  out.group_bound.canonicalize();
  return out;
}

const BoundEntry* BoundReport::find(BoundKind kind) const {
  for (const auto& b : bounds)
    if (b.kind == kind) return &b;
  return nullptr;
}

SpectralSummary summarize(const std::string& group, const ActionStats& stats, const ConjugacyClassTable& classes,
                          const Spectrum& s, const WeightVector& weights) {
  SpectralSummary out;
  out.group = group;
  out.degree = stats.degree;
  out.order = static_cast<unsigned long>(stats.order);
  out.derangements = static_cast<unsigned long>(stats.derangements);
  if (!s.max().value.is_rational()) throw std::logic_error("largest eigenvalue is not rational");
  out.max = s.max().value.value();
  out.min = s.min().value;
  out.min_multiplicity = s.min().multiplicity;
  out.weighted = std::any_of(weights.values.begin(), weights.values.end(), [](const Rational& v) { return v != 1; });
  out.weights = weights.values;
  for (ClassId c : weights.classes) out.class_sizes.push_back(static_cast<unsigned long>(classes[c].size));
  return out;
}

BoundReport ekr_verdict(const SpectralSummary& s, const std::optional<std::vector<ElementId>>& clique) {
  BoundReport r;
  r.group = s.group;
  r.degree = s.degree;
  r.order = s.order;
  r.derangements = s.derangements;
  r.target = Rational(s.order, static_cast<unsigned long>(s.degree));
  r.target.canonicalize();
  r.weighted = s.weighted;

  const bool has_negative = s.min.is_rational() ? s.min.value() < 0 : s.min.enclosure().hi < 0;
  if (s.max > 0 && has_negative) {
    BoundEntry e;
    e.kind = s.weighted ? BoundKind::weighted_ratio : BoundKind::ratio;
    Enclosure tau = s.min.is_rational() ? Enclosure::point(s.min.value())
                                        : s.min.refined(Rational(Integer(1), power(Integer(2), 128))).enclosure();
    e.value = ratio_bound(Enclosure::point(s.max), tau, s.order);
    e.inputs = "d=" + to_string(s.max) + ", tau=" + (s.min.is_rational() ? to_string(s.min.value()) : tau.to_string(12)) +
               ", |G|=" + to_string(s.order);
    e.tight = e.value.is_point() && e.value.lo == r.target;
    if (e.tight) {
      r.d = s.max;
      r.tau = s.min;
      r.tau_multiplicity = s.min_multiplicity;
    }
    r.bounds.push_back(std::move(e));
  }
  if (s.derangements > 0) {
    CriticalRhs c = critical_degree_rhs(s.degree, s.order, s.derangements);
    BoundEntry e;
    e.kind = BoundKind::critical;
    e.inputs = "|Omega|=" + std::to_string(s.degree) + ", |G|=" + to_string(s.order) + ", |D|=" + to_string(s.derangements) +
               (c.negative_radicand ? ", negative radicand: only psi can attain lambda(psi)" : "");
    e.value = c.negative_radicand ? Enclosure::point(0) : c.value;
    r.bounds.push_back(std::move(e));
  }
  if (s.weighted && s.max > 0) {
    CriticalRhs c = weighted_critical_rhs(s.degree, s.order, s.weights, s.class_sizes);
    BoundEntry e;
    e.kind = BoundKind::weighted_critical;
    e.inputs = "|Omega|=" + std::to_string(s.degree) + ", |G|=" + to_string(s.order) + ", radicand=" + to_string(c.radicand) +
               (c.negative_radicand ? ", negative radicand: only psi can attain lambda(psi)" : "");
    e.value = c.negative_radicand ? Enclosure::point(0) : c.value;
    r.bounds.push_back(std::move(e));
  }
  if (clique) {
    BoundEntry e;
    e.kind = BoundKind::clique_coclique;
    e.value = Enclosure::point(clique_coclique_bound(s.order, static_cast<unsigned long>(clique->size())));
    e.inputs = "n=" + to_string(s.order) + ", clique=" + std::to_string(clique->size());
    e.tight = e.value.lo == r.target;
    if (e.tight) r.clique_witness = clique;
    r.bounds.push_back(std::move(e));
  }
  const bool certified = std::any_of(r.bounds.begin(), r.bounds.end(), [](const BoundEntry& b) { return b.tight; });
  if (s.min.is_rational() && s.degree >= 2) {
    Rational expected = -s.max / Rational(static_cast<unsigned long>(s.degree - 1));
    Integer budget = Integer(static_cast<unsigned long>(s.degree - 1)) * Integer(static_cast<unsigned long>(s.degree - 1));
    r.surrogate = s.min.value() == expected && s.min_multiplicity == budget;
  }
  if (certified) r.verdict = r.surrogate ? Verdict::certified_with_surrogate : Verdict::certified;
  return r;
}

}  // namespace ekr
