#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ekr/class_algebra.hpp"
#include "ekr/interval.hpp"

namespace ekr {

// Search units: derangement classes grouped with their inverse classes, so
// that every 0/1 weighting built from units is inverse-closed. Units are
// ordered by their smallest class id; `members` are class ids (or class
// indices of a character table).
struct WeightUnit {
  std::vector<std::size_t> members;
};

std::vector<WeightUnit> inverse_pair_units(const std::vector<std::size_t>& derangement_classes,
                                           const std::function<std::size_t(std::size_t)>& inverse_of);

// Ratio bound for the 0/1 weighting supported on the given classes, or
// nothing when the weighted spectrum is degenerate.
using BoundOracle = std::function<std::optional<Enclosure>(const std::vector<std::size_t>& support)>;

struct SubsetSearchResult {
  std::vector<std::size_t> support;  // classes carrying weight 1
  Enclosure bound;
  bool certified = false;  // bound equals the target exactly
  std::size_t evaluated = 0;
};

// Enumerates nonempty unions of units by increasing number of units and then
// lexicographically by unit index. Returns the first subset whose bound
// equals `target` exactly; otherwise the subset with the smallest bound
// (earliest wins ties). Throws std::invalid_argument for more than 20 units.
SubsetSearchResult weight_subset_search(const std::vector<WeightUnit>& units, const Rational& target,
                                        const BoundOracle& oracle);

// Oracle for an enumerated group.
BoundOracle enumerated_bound_oracle(const ClassAlgebra& algebra, const ActionStats& stats);

}  // namespace ekr
