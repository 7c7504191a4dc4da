#pragma once

#include <optional>
#include <vector>

#include "ekr/class_algebra.hpp"
#include "ekr/polynomial.hpp"

namespace ekr {

// A distinct eigenvalue of a collapsed matrix together with its multiplicity
// as a root of the characteristic polynomial (the number of irreducible
// characters affording it).
struct CollapsedEigenvalue {
  RealAlgebraic value;
  int multiplicity = 0;
};

// Distinct eigenvalues in ascending order. Rational eigenvalues are exact;
// irrational ones carry an isolating interval of their minimal square-free
// factor. Throws std::logic_error if a non-real root shows up, which cannot
// happen for inverse-closed weights.
std::vector<CollapsedEigenvalue> eigenvalues_exact(const CollapsedMatrix& m);

// Tr(A^k) for the |G| x |G| weighted adjacency matrix A.
Rational power_sum(const ClassAlgebra& algebra, const ActionStats& stats, const WeightVector& weights, unsigned k);

struct SpectrumEntry {
  RealAlgebraic value;
  Integer multiplicity;      // dimension of the eigenspace of A
  int character_count = 0;   // multiplicity as a root of the collapsed characteristic polynomial
  bool exact() const { return value.is_rational(); }
};

struct Spectrum {
  Integer order;                      // |G|
  std::vector<SpectrumEntry> entries; // ascending by value

  Integer total_multiplicity() const;
  const SpectrumEntry& max() const { return entries.back(); }
  const SpectrumEntry& min() const { return entries.front(); }
  // Entry with the given rational value, if present.
  const SpectrumEntry* find(const Rational& value) const;
};

// Spectrum of the weighted derangement graph with multiplicities solved
// exactly from the power sums; the sum of multiplicities is checked to be |G|.
Spectrum spectrum(const ClassAlgebra& algebra, const ActionStats& stats, const WeightVector& weights);

// Sum of m * lambda^2 equals |G| * sum a_i^2 |C_i|, and sum of m equals |G|.
// Irrational eigenvalues are handled through their enclosures.
bool verify_trace_identity(const Spectrum& s, const ClassAlgebra& algebra, const WeightVector& weights);

}  // namespace ekr
