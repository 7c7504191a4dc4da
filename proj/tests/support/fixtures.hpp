#pragma once

#include <memory>
#include <string>

#include "ekr/action_stats.hpp"
#include "ekr/class_algebra.hpp"
#include "ekr/conjugacy.hpp"
#include "ekr/data_dir.hpp"
#include "ekr/generator_file.hpp"
#include "ekr/group_table.hpp"

namespace ekr::test {

// An enumerated group with its classes, action statistics and class algebra.
struct Enumerated {
  GroupTable g;
  ConjugacyClassTable classes;
  ActionStats stats;
  ClassAlgebra algebra;

  explicit Enumerated(const GeneratorSet& gens, std::size_t cap = kDefaultEnumerationCap)
      : g(GroupTable::enumerate(gens, cap)), classes(g), stats(action_stats(g, classes)), algebra(g, classes) {}
};

inline std::unique_ptr<Enumerated> enumerate(const GeneratorSet& gens) { return std::make_unique<Enumerated>(gens); }

inline std::unique_ptr<Enumerated> enumerate_file(const std::string& relative) {
  return enumerate(load_group_file(data_path(relative)));
}

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace ekr::test
