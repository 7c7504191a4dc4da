#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ekr/interval.hpp"
#include "ekr/numeric.hpp"

namespace ekr {

std::uint64_t euler_phi(std::uint64_t n);

struct TotientCheck {
  std::uint64_t n = 0;
  std::uint64_t phi = 0;
  bool log2_bound = false;               // phi(n) >= n / log2(n)
  std::optional<bool> log3_bound;        // phi(n) >= 2n / (log3(n) + 2), odd n only
  bool pass() const { return log2_bound && log3_bound.value_or(true); }
};

// Throws std::invalid_argument for n <= 6.
TotientCheck psl_totient_bound(std::uint64_t n);

struct TotientSweep {
  std::uint64_t first = 0, last = 0;
  std::uint64_t checked = 0;
  std::uint64_t exact_fallbacks = 0;  // comparisons settled by big-integer powers
  std::vector<std::uint64_t> failures;
  bool pass() const { return failures.empty(); }
};
// Sieve-based sweep over [first, last], first >= 7.
TotientSweep psl_totient_sweep(std::uint64_t first, std::uint64_t last);

struct DerangementProportion {
  unsigned n = 0;
  std::uint64_t q = 0;
  Enclosure bound;                 // 1 / (n^2 log2 q)
  std::optional<Rational> measured;
  std::optional<bool> pass;        // measured >= bound, when measured is given
};
DerangementProportion psl_derangement_lower_bound(unsigned n, std::uint64_t q,
                                                  const std::optional<Rational>& measured = std::nullopt);

// (q^n - q)/(q - 1) sqrt(n^2 log2 q - 2).
Enclosure psl_critical_rhs(unsigned n, std::uint64_t q);

// Exact rational evaluation of an arithmetic expression in n and q with
// + - * / ^ and parentheses. Throws DataError on malformed input.
Rational evaluate_expression(const std::string& expr, const Integer& n, const Integer& q);

// One row of the table of small character degrees of PSL_n(q).
struct SmallDegreeRow {
  std::string degree_expr[3];
  std::string count_expr[3];
  std::string n_condition;  // e.g. "4", ">=5", ">=5,!6"
  std::string q_condition;  // e.g. "odd,!3", "even,!2", "2", ">=3", "any"
  std::string note;         // condition as printed
  bool applies(unsigned n, std::uint64_t q) const;
};

// Tab-separated, '#' comments, columns d1 N1 d2 N2 d3 N3 n q note.
std::vector<SmallDegreeRow> load_small_degree_table(const std::string& path);

struct DegreeFilterEntry {
  Integer degree;
  Integer count;
  bool below_rhs = false;  // degree not certified above the rhs: the character survives the filter
};
struct DegreeFilter {
  unsigned n = 0;
  std::uint64_t q = 0;
  Enclosure rhs;
  std::optional<SmallDegreeRow> row;
  std::vector<DegreeFilterEntry> degrees;
};
// Throws std::invalid_argument for n < 4 (the filter is only used there).
DegreeFilter psl_degree_filter(unsigned n, std::uint64_t q, const std::vector<SmallDegreeRow>& table);

}  // namespace ekr
