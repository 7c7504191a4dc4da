#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ekr/group_table.hpp"

namespace ekr {

using ClassId = std::uint32_t;

struct ConjugacyClass {
  ElementId representative;  // smallest member id
  std::uint64_t size;
  std::uint64_t element_order;
  std::string name;  // element order plus a letter, e.g. "7B"
  ClassId inverse;   // class of the inverses of its members
};

// Conjugacy classes of an enumerated group, ordered by (size, smallest
// member id). Class 0 is the identity.
class ConjugacyClassTable {
 public:
  explicit ConjugacyClassTable(const GroupTable& g);

  std::size_t size() const { return classes_.size(); }
  const ConjugacyClass& operator[](ClassId c) const { return classes_[c]; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  ClassId class_of(ElementId x) const { return label_[x]; }
  std::span<const ElementId> members(ClassId c) const {
    return {members_.data() + offset_[c], offset_[c + 1] - offset_[c]};
  }
  std::uint64_t group_order() const { return order_; }
  // Throws std::out_of_range for unknown names.
  ClassId by_name(const std::string& name) const;

 private:
  std::uint64_t order_ = 0;
  std::vector<ConjugacyClass> classes_;
  std::vector<ClassId> label_;
  std::vector<ElementId> members_;
  std::vector<std::size_t> offset_;
};

inline ConjugacyClassTable conjugacy_classes(const GroupTable& g) { return ConjugacyClassTable(g); }

}  // namespace ekr
