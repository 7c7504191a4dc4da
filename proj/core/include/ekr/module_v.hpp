#pragma once

#include <cstddef>
#include <vector>

#include "ekr/group_table.hpp"
#include "ekr/polynomial.hpp"

namespace ekr {

// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
std::size_t integer_rank(IntMatrix m);

// The span V of the indicator vectors v_{a,b} of {g : a^g = b} in Q^G. Work
// is done on the |Omega|^2 Gram matrix, whose rank equals the rank of the
// vectors over the rationals.
class ModuleV {
 public:
  // Throws std::invalid_argument when |G| exceeds max_order.
  ModuleV(const GroupTable& g, PointRange range, std::size_t max_order = 10'000);

  std::size_t degree() const { return range_.size(); }
  std::size_t rank() const { return rank_; }
  // 1 + (|Omega| - 1)^2, the rank for a 2-transitive action.
  std::size_t expected_rank() const { return 1 + (degree() - 1) * (degree() - 1); }
  // Whether the characteristic vector of S lies in V.
  bool contains(const std::vector<ElementId>& s) const;

 private:
  const GroupTable& g_;
  PointRange range_;
  IntMatrix gram_;
  std::size_t rank_ = 0;
};

inline std::size_t module_v_rank(const GroupTable& g, PointRange range) { return ModuleV(g, range).rank(); }

}  // namespace ekr
