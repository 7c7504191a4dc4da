#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ekr/action_stats.hpp"
#include "ekr/class_algebra.hpp"
#include "ekr/spectrum.hpp"

namespace ekr {

struct PredictedEigenvalue {
  std::string family;        // which characters afford it
  Integer character_degree;
  Integer character_count;
  Rational value;
};

// The (a,b)-weighted scheme on PSU_3(q) acting on q^3 + 1 isotropic points.
// C1 collects the derangement classes with centraliser order (q^2-q+1)/d;
// C2 the remaining derangement classes.
struct PSU3Scheme {
  std::uint64_t q = 0;
  unsigned d = 1;  // gcd(3, q+1)
  Integer order;
  Integer c1_total, c2_total;             // element counts of the two families
  Integer c1_classes, c2_classes;         // class counts (C2 includes C2'' when d = 3)
  Integer c1_class_size, c2_class_size;   // C2' size when d = 3
  Integer c2_single_class_size;           // C2'' size when d = 3, else 0
  Rational a, b;
  std::vector<PredictedEigenvalue> predicted;
  bool principal_is_q_cubed = false;      // a |C1| + b |C2| = q^3
  bool class_counts_consistent = false;   // counts times sizes give the totals
};

// Throws std::invalid_argument unless q >= 3 is a prime power.
PSU3Scheme psu3_scheme(std::uint64_t q);

// Weights for an enumerated PSU_3(q). Throws DataError when the class
// totals of the enumerated group disagree with the scheme.
WeightVector psu3_weights(const PSU3Scheme& scheme, const ConjugacyClassTable& classes, const ActionStats& stats);

struct PSU3SpectrumCheck {
  bool max_is_q_cubed = false;
  bool min_is_minus_one = false;
  std::vector<std::pair<PredictedEigenvalue, bool>> present;  // each predicted value found
  bool degree_budget_ok = false;  // multiplicity of -1 covers q^6 + (q(q-1))^2 [+ (q^2-q+1)^2]
  bool all_pass() const;
};
PSU3SpectrumCheck psu3_check_spectrum(const PSU3Scheme& scheme, const Spectrum& s);

// Triple sets T (gcd(3,q+1) = 1) and T' (gcd = 3) and element tallies.
struct TripleClaim {
  std::string description;
  Rational claimed;
  std::vector<std::uint64_t> elements;  // elements (or residues) the claim is about
  std::vector<std::uint64_t> observed;  // tally for each listed element
  bool pass = false;
};
struct TripleCounts {
  std::uint64_t q = 0;
  unsigned d = 1;
  std::uint64_t triple_count = 0;
  Rational expected_triple_count;  // (q^2-q)/6 for T
  std::vector<TripleClaim> claims;
  bool all_pass() const;
};
std::vector<std::array<std::uint64_t, 3>> psu3_triples(std::uint64_t q);  // T or T' by gcd
// Throws std::invalid_argument for q < 3, q > 1000 or q not a prime power.
TripleCounts psu3_triple_counts(std::uint64_t q);

// sum over the triple set of e^(3uk) + e^(3ul) + e^(3um), e a primitive
// (q+1)-th root of unity, reduced exactly in Q(e).
struct CharacterSum {
  std::uint64_t q = 0;
  std::uint64_t u = 0;
  unsigned d = 1;
  std::optional<Rational> value;  // empty when the sum is not rational
  Rational claimed;
  bool pass = false;
  Rational eigenvalue;            // weighted eigenvalue implied by the computed sum (if rational)
};
// Valid u: 1..q when d = 1; 1..(q+1)/3 - 1 when d = 3. Throws
// std::invalid_argument otherwise.
CharacterSum psu3_character_sum(std::uint64_t q, std::uint64_t u);

// Eigenvalue of a degree q^2-q+1 character from its sum over the C2 family:
// 2S/(q-1) when d = 1 and 6q(S+1)/(q^2-q+4) when d = 3.
Rational psu3_eigenvalue_from_sum(std::uint64_t q, const Rational& sum);

}  // namespace ekr
