#pragma once

#include <optional>
#include <vector>

#include "ekr/action_stats.hpp"
#include "ekr/class_algebra.hpp"
#include "ekr/interval.hpp"
#include "ekr/matrix_groups.hpp"

namespace ekr {

// Closed forms for Sp_2n(2) on Omega^eps, weighted by the class of a
// generator x^eps of the cyclic torus of order 2^n + eps.
struct SpScheme {
  unsigned n = 0;
  int epsilon = 1;  // +1 or -1
  Integer order;
  Integer degree;           // 2^(n-1) (2^n + eps)
  Integer torus;            // 2^n + eps
  Integer d;                // |G| / torus
  Rational tau;             // -d / (degree - 1)
  Rational bound;           // |G| / degree
  Integer alpha, beta, zeta1;  // degrees of alpha_n, beta_n, zeta_n^1
  bool weil_degree_identity = false;  // alpha + beta + 2 zeta1 = 4^n
  bool ratio_matches = false;         // ratio bound from (d, tau) equals |G|/degree
  Enclosure weighted_critical_rhs;    // (degree - 1) sqrt(torus - 2)
};

// Throws std::invalid_argument for n < 2 or eps not +-1.
SpScheme sp_scheme(unsigned n, int epsilon);

// Class of x^eps: elements of order 2^n + eps acting without fixed points on
// Omega^eps. The largest such class wins, then the smallest id. Sp_4(2) has
// two classes of order 3 of equal size; only one is fixed-point-free.
std::optional<ClassId> sp_torus_class(const GroupTable& g, const ConjugacyClassTable& classes,
                                      const SymplecticActions& actions, int epsilon);
// Same lookup on a table carrying only the action on Omega^eps (in `same`).
std::optional<ClassId> sp_torus_class(const GroupTable& g, const ConjugacyClassTable& classes, PointRange same,
                                      unsigned n, int epsilon);

struct WeilClassCheck {
  ClassId cls = 0;
  long fixed_plus = 0;
  long fixed_minus = 0;
  long fixed_vectors = 0;  // fixed nonzero vectors, so 2^dim Ker(g-1) = fixed_vectors + 1
  bool pass = false;       // fixed_plus + fixed_minus = fixed_vectors + 1
};

struct TorusPattern {
  int epsilon = 1;
  std::optional<ClassId> cls;
  long fixed_same = -1;   // fixed points of x^eps on Omega^eps (expected 0)
  long fixed_other = -1;  // fixed points on Omega^-eps (expected 1)
  bool pass = false;
};

struct SpWeilCheck {
  std::vector<WeilClassCheck> classes;
  TorusPattern plus, minus;
  bool degrees_sum_to_forms = false;  // |Omega+| + |Omega-| = 2^(2n)
  bool all_pass() const;
};

// `g` must be the enumeration of actions.combined.
SpWeilCheck sp_weil_identity_check(const GroupTable& g, const ConjugacyClassTable& classes, const SymplecticActions& actions);

// 0/1 weighting on the x^eps class (and its inverse class, if different).
// `stats` describes the action on Omega^eps.
WeightVector sp_weights(const GroupTable& g, const ConjugacyClassTable& classes, const ActionStats& stats, unsigned n,
                        int epsilon);

}  // namespace ekr
