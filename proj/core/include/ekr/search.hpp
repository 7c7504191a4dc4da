#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ekr/action_stats.hpp"
#include "ekr/group_table.hpp"

namespace ekr {

// Budgets count branch-and-bound node expansions, never wall-clock time, so
// results do not depend on the machine.
struct SearchBudget {
  std::uint64_t max_nodes = 200'000'000;
  std::size_t max_order = 400;
};

enum class CocliqueClass { stabiliser_coset, in_span_v, other };
std::string to_string(CocliqueClass c);

struct CocliqueWitness {
  std::vector<ElementId> elements;  // ascending
  CocliqueClass classification = CocliqueClass::other;
  std::optional<std::pair<std::size_t, std::size_t>> coset;  // (a, b) with S = {g : a^g = b}, points relative to the range
  std::size_t size() const { return elements.size(); }
};

struct MaxCocliqueResult {
  CocliqueWitness witness;  // lexicographically least maximum coclique when complete
  bool complete = false;
  std::size_t upper_bound = 0;  // proven; equals witness.size() when complete
  std::uint64_t nodes = 0;
};

// g h^-1 fixes a point of the range, i.e. some a has a^g = a^h.
bool intersecting_pair(const GroupTable& g, PointRange range, ElementId x, ElementId y);
bool is_intersecting(const GroupTable& g, PointRange range, const std::vector<ElementId>& s);

// Exact maximum intersecting set. Throws std::invalid_argument when |G|
// exceeds budget.max_order. An exhausted budget gives complete = false with
// the best set found and a proven upper bound.
MaxCocliqueResult max_coclique_exact(const GroupTable& g, const ActionStats& stats, const SearchBudget& budget = {});

struct CliqueSearchResult {
  std::optional<std::vector<ElementId>> clique;  // |Omega| elements pairwise differing by derangements
  bool from_subgroup = false;                    // found as a regular subgroup
  bool complete = false;                         // the search space was exhausted (or a clique found)
  std::uint64_t nodes = 0;
};

// Regular subgroups generated by one or two derangements come first, then an
// exact clique search in the derangement graph within the node budget.
CliqueSearchResult find_sharply_transitive_clique(const GroupTable& g, const ActionStats& stats,
                                                  const SearchBudget& budget = {});

class ModuleV;

// Strongest label of an intersecting set; throws std::invalid_argument if
// `s` is not intersecting. `v` may be null, in which case span membership is
// not tested and non-cosets are labelled "other".
CocliqueWitness classify_coclique(const GroupTable& g, PointRange range, std::vector<ElementId> s, const ModuleV* v);

// |C ∩ S| for a clique C and coclique S; at most 1 always, and exactly 1 for
// every translate S^x when both bounds are attained.
std::size_t intersection_size(const std::vector<ElementId>& c, const std::vector<ElementId>& s);

}  // namespace ekr
