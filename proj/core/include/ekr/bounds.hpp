#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ekr/class_algebra.hpp"
#include "ekr/interval.hpp"
#include "ekr/spectrum.hpp"

namespace ekr {

enum class BoundKind { ratio, weighted_ratio, clique_coclique, critical, weighted_critical, subgroup_reduction };
std::string to_string(BoundKind kind);

// |G| (1 - d/tau)^-1. Throws std::invalid_argument unless tau < 0 < d.
Rational ratio_bound(const Rational& d, const Rational& tau, const Integer& order);
Enclosure ratio_bound(const Enclosure& d, const Enclosure& tau, const Integer& order);

// Ratio bound from the extreme eigenvalues of a (weighted) spectrum; a
// point enclosure whenever the least eigenvalue is rational. Throws
// std::invalid_argument for a spectrum with a single eigenvalue or with
// no negative eigenvalue.
Enclosure weighted_ratio_bound(const Spectrum& s);

// n / clique. Throws std::invalid_argument when clique == 0.
Rational clique_coclique_bound(const Integer& n, const Integer& clique);

// (|Omega| - 1) sqrt(radicand) where the radicand is |G|/|D| - 2 in the
// unweighted case and |G| sum a^2|C| / (sum a|C|)^2 - 2 in the weighted case.
// A negative radicand means no character other than psi can reach lambda(psi).
struct CriticalRhs {
  Rational radicand;
  bool negative_radicand = false;
  Enclosure value;  // meaningful only when the radicand is nonnegative
};
CriticalRhs critical_degree_rhs(std::size_t degree, const Integer& order, const Integer& derangements);
CriticalRhs weighted_critical_rhs(std::size_t degree, const Integer& order, const std::vector<Rational>& weights,
                                  const std::vector<Integer>& class_sizes);

// Transfer of an EKR bound from a transitive subgroup H to G.
struct SubgroupReduction {
  Integer group_order;
  Integer subgroup_order;
  std::size_t degree = 0;
  Rational subgroup_bound;  // |H| / |Omega|
  Rational group_bound;     // |G| / |Omega|
};
// `subgroup` lists element ids of g; it must be closed under multiplication
// and transitive on the points of `range`. Throws std::invalid_argument
// otherwise.
SubgroupReduction subgroup_reduction(const GroupTable& g, const std::vector<ElementId>& subgroup, PointRange range);

struct BoundEntry {
  BoundKind kind = BoundKind::ratio;
  std::string inputs;  // human-readable description of the values used
  Enclosure value;
  bool tight = false;  // value equals |G|/|Omega| exactly
};

enum class Verdict { certified, certified_with_surrogate, inconclusive };
std::string to_string(Verdict v);

struct BoundReport {
  std::string group;
  std::size_t degree = 0;
  Integer order;
  Integer derangements;
  Rational target;  // |G| / |Omega|
  bool weighted = false;
  std::vector<BoundEntry> bounds;
  Verdict verdict = Verdict::inconclusive;
  // Witnessing eigenvalue pair when a spectral bound certifies.
  std::optional<Rational> d;
  std::optional<RealAlgebraic> tau;
  Integer tau_multiplicity;
  bool surrogate = false;  // tau = -d/(|Omega|-1) with multiplicity (|Omega|-1)^2
  std::optional<std::vector<ElementId>> clique_witness;

  const BoundEntry* find(BoundKind kind) const;
};

// Everything the verdict needs from a spectrum, so that enumerated groups and
// character tables share one code path.
struct SpectralSummary {
  std::string group;
  std::size_t degree = 0;
  Integer order;
  Integer derangements;
  Rational max;                // sum a_i |C_i|
  RealAlgebraic min;
  Integer min_multiplicity;
  bool weighted = false;       // false for the plain adjacency matrix
  std::vector<Rational> weights;       // per derangement class
  std::vector<Integer> class_sizes;    // per derangement class
};

// Runs every applicable bound. Certified when any bound equals |G|/|Omega|
// exactly; the surrogate flag is added when the least eigenvalue is
// -d/(|Omega|-1) with multiplicity (|Omega|-1)^2.
BoundReport ekr_verdict(const SpectralSummary& summary, const std::optional<std::vector<ElementId>>& clique = std::nullopt);

SpectralSummary summarize(const std::string& group, const ActionStats& stats, const ConjugacyClassTable& classes,
                          const Spectrum& s, const WeightVector& weights);

}  // namespace ekr
