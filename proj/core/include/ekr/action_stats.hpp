#pragma once

#include <cstdint>
#include <vector>

#include "ekr/conjugacy.hpp"
#include "ekr/group_table.hpp"

namespace ekr {

// Permutation-character data of one action of an enumerated group.
struct ActionStats {
  PointRange range;             // points of the action inside the table
  std::size_t degree = 0;       // |Omega|
  int transitivity = 0;         // 0 intransitive, 1 transitive, 2 for 2-transitive or better
  std::uint64_t order = 0;      // |G|
  std::uint64_t derangements = 0;
  std::vector<ClassId> derangement_classes;  // ascending class id
  std::vector<long> fixed_points;            // pi per class
  std::vector<long> psi;                     // pi - 1 per class

  bool is_derangement_class(ClassId c) const { return fixed_points[c] == 0; }
};

// Computes the statistics of the action on `range` (the whole point set by
// default). Intransitive actions are reported with transitivity 0 rather
// than rejected; callers needing 2-transitivity check the field.
ActionStats action_stats(const GroupTable& g, const ConjugacyClassTable& classes);
ActionStats action_stats(const GroupTable& g, const ConjugacyClassTable& classes, PointRange range);

// |G| >= 2 |D|.
bool derangement_fraction_check(const ActionStats& stats);

}  // namespace ekr
