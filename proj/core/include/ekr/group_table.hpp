#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ekr/generator_file.hpp"
#include "ekr/permutation.hpp"

namespace ekr {

using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultEnumerationCap = 2'000'000;

class EnumerationLimitError : public std::runtime_error {
 public:
  explicit EnumerationLimitError(std::size_t cap);
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// Half-open range of points [begin, end) on which an action is read. Used
// when one enumeration carries several actions side by side.
struct PointRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  bool contains(std::size_t a) const { return begin <= a && a < end; }
};

// A fully enumerated permutation group. Element ids follow breadth-first
// insertion order from the identity (id 0) under the generators, so they
// are stable for a fixed generator list.
class GroupTable {
 public:
  static GroupTable enumerate(const GeneratorSet& gens, std::size_t cap = kDefaultEnumerationCap);

  GroupTable(GroupTable&&) = default;
  GroupTable& operator=(GroupTable&&) = default;
  GroupTable(const GroupTable&) = delete;
  GroupTable& operator=(const GroupTable&) = delete;

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return order_; }
  PointRange full_range() const { return {0, degree_}; }
  const std::vector<Permutation>& generators() const { return generators_; }

  std::span<const Point> element(ElementId id) const {
    return {data_.data() + static_cast<std::size_t>(id) * degree_, degree_};
  }
  Point image(ElementId id, std::size_t a) const { return data_[static_cast<std::size_t>(id) * degree_ + a]; }
  Permutation permutation(ElementId id) const;
  std::optional<ElementId> find(std::span<const Point> images) const;
  ElementId inverse(ElementId id) const { return inverse_[id]; }
  // Id of g * h (apply g, then h).
  ElementId multiply(ElementId g, ElementId h) const;
  std::size_t fixed_points(ElementId id, PointRange range) const;

 private:
  GroupTable() = default;
  void insert_index(ElementId id);
  std::uint64_t hash(std::span<const Point> images) const;
  void grow_index();

  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Point> data_;
  std::vector<ElementId> slots_;  // open addressing, kEmpty marks free
  std::vector<ElementId> inverse_;
};

// Transitivity on ordered k-tuples of distinct points (k = 1 or 2),
// restricted to a range that the generators must preserve.
bool is_k_transitive(const GroupTable& g, int k);
bool is_k_transitive(const GroupTable& g, int k, PointRange range);

std::vector<ElementId> point_stabilizer(const GroupTable& g, std::size_t alpha);
// {g : alpha^g = beta}
std::vector<ElementId> coset_mapping(const GroupTable& g, std::size_t alpha, std::size_t beta);

}  // namespace ekr
