#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ekr/action_stats.hpp"
#include "ekr/conjugacy.hpp"
#include "ekr/group_table.hpp"
#include "ekr/numeric.hpp"
#include "ekr/polynomial.hpp"

namespace ekr {

// Nonnegative weights a_1..a_l on the derangement classes of an action, in
// the order of ActionStats::derangement_classes.
struct WeightVector {
  std::vector<ClassId> classes;
  std::vector<Rational> values;

  static WeightVector unit(const ActionStats& stats);
  static WeightVector zero(const ActionStats& stats);
  // Weight 1 on the listed classes (which must be derangement classes), 0 elsewhere.
  static WeightVector indicator(const ActionStats& stats, const std::vector<ClassId>& support);
  // Explicit values; throws std::invalid_argument on length mismatch or negative entries.
  static WeightVector from_values(const ActionStats& stats, std::vector<Rational> values);

  bool all_zero() const;
  Rational weight_of(ClassId c) const;  // 0 for classes outside the support
};

// Centre of the group algebra in the class-sum basis. The multiplication
// matrix of a class sum C_k has entries N_k[i][j] = c_{kj}^i, the number of
// x in C_k with x^-1 z_i in C_j (z_i the representative of class i).
// Matrices are computed on first use and cached; the cache is safe for
// concurrent readers.
class ClassAlgebra {
 public:
  ClassAlgebra(const GroupTable& g, const ConjugacyClassTable& classes) : g_(g), classes_(classes) {}
  ClassAlgebra(const ClassAlgebra&) = delete;
  ClassAlgebra& operator=(const ClassAlgebra&) = delete;

  const GroupTable& group() const { return g_; }
  const ConjugacyClassTable& classes() const { return classes_; }
  std::size_t dimension() const { return classes_.size(); }
  const IntMatrix& multiplication_matrix(ClassId k) const;

 private:
  const GroupTable& g_;
  const ConjugacyClassTable& classes_;
  mutable std::mutex mutex_;
  mutable std::map<ClassId, std::unique_ptr<IntMatrix>> cache_;
};

// Matrix of multiplication by sum_k a_k C_k on the centre. `scale` is the
// least common multiple L of the weight denominators and `integral` = L * M.
struct CollapsedMatrix {
  std::vector<std::vector<Rational>> entries;
  Integer scale = 1;
  IntMatrix integral;
  std::size_t dimension() const { return entries.size(); }
};

// Throws std::invalid_argument when the weights do not match the derangement
// classes of `stats`, or differ on a class and its inverse class (the
// weighted adjacency matrix would not be symmetric).
CollapsedMatrix collapsed_matrix(const ClassAlgebra& algebra, const ActionStats& stats, const WeightVector& weights);

}  // namespace ekr
