#pragma once

#include <cstdint>
#include <string>

#include "ekr/generator_file.hpp"
#include "ekr/group_table.hpp"
#include "ekr/numeric.hpp"

namespace ekr {

enum class Family { psl, pgl, sp2n2, psu3, file };
enum class ActionKind { projective_points, quadratic_forms_plus, quadratic_forms_minus, isotropic_points, natural };

struct MatrixGroupSpec {
  Family family = Family::psl;
  unsigned n = 2;
  std::uint32_t q = 2;
  ActionKind action = ActionKind::projective_points;

  // Throws std::invalid_argument when the parameters fall outside the
  // 2-transitive family conditions (PSL/PGL: n >= 2 and (n,q) not (2,2) or
  // (2,3); Sp: n >= 2; PSU3: q >= 3).
  void validate() const;
  std::string label() const;
};

std::uint64_t projective_point_count(unsigned n, std::uint64_t q);
Integer psl_order(unsigned n, std::uint64_t q);
Integer sp2n2_order(unsigned n);
Integer psu3_order(std::uint64_t q);

// SL_n(q) by adjacent elementary transvections x_{i,i+1}(t), x_{i+1,i}(t)
// with t over the basis 1, w, ..., w^(k-1) of GF(q) over GF(p), acting on
// projective points (points ordered by position of the leading 1, then by
// the remaining coordinates read base q).
GeneratorSet psl_generators(unsigned n, std::uint32_t q);
// psl_generators plus diag(w, 1, ..., 1).
GeneratorSet pgl_generators(unsigned n, std::uint32_t q);

// Sp_2n(2) preserving B(u,v) = sum_i u_i v_{n+i} + u_{n+i} v_i, generated by
// the transvections v -> v + B(v,a) a for a in {e_i, f_i, e_i + e_{i+1}}.
// Quadratic forms polarising to B are indexed by their values on the basis;
// the group acts by Q^g(v) = Q(v g^-1). The combined set acts on
// plus forms, minus forms, then nonzero vectors, side by side.
struct SymplecticActions {
  unsigned n = 0;
  GeneratorSet plus;
  GeneratorSet minus;
  GeneratorSet natural;  // nonzero vectors, point index = bitmask - 1
  GeneratorSet combined;
  PointRange plus_range;
  PointRange minus_range;
  PointRange natural_range;
};
SymplecticActions sp2n2_actions(unsigned n);

// SU_3(q) for the Hermitian form h(u,v) = u0 v2^q + u1 v1^q + u2 v0^q on
// GF(q^2)^3, generated by small generating sets of its upper and lower
// unitriangular subgroups, acting on the q^3 + 1 isotropic points.
GeneratorSet psu3_generators(std::uint32_t q);

GeneratorSet build_generators(const MatrixGroupSpec& spec);

// Convenience sets for small test groups on {0..n-1}.
GeneratorSet symmetric_generators(std::size_t n);
GeneratorSet alternating_generators(std::size_t n);

}  // namespace ekr
