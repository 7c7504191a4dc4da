#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ekr/bounds.hpp"
#include "ekr/interval.hpp"
#include "ekr/numeric.hpp"
#include "ekr/subset_search.hpp"

namespace ekr {

// r + s sqrt(D) with D a squarefree integer other than 1 (D = 1 marks a
// rational value, s = 0).
struct QuadraticValue {
  Rational r;
  Rational s;
  Integer radicand = 1;
  bool is_rational() const { return radicand == 1 || s == 0; }
  QuadraticValue conjugate() const;  // complex conjugate (negates s when D < 0)
  bool operator==(const QuadraticValue& o) const = default;
};
// Accepts "a", "a/b", "a/b+c/d*sqrt(D)", "c/d*sqrt(D)", "-sqrt(D)".
QuadraticValue parse_quadratic(std::string_view text);
std::string to_string(const QuadraticValue& v);

// Element of Q(sqrt(D1), sqrt(D2), ...): a rational combination of square
// roots of distinct squarefree integers, keyed by radicand (1 is the
// rational part). Zero coefficients are never stored.
class QuadraticSum {
 public:
  QuadraticSum() = default;
  explicit QuadraticSum(const Rational& v) { add(v, 1); }
  void add(const Rational& coefficient, const Integer& radicand);
  void add(const QuadraticValue& v, const Rational& scale);
  QuadraticSum scaled(const Rational& f) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool is_real() const;  // no negative radicand
  Rational rational_part() const;
  const std::map<Integer, Rational>& terms() const { return terms_; }
  // Only for real values.
  Enclosure enclosure(unsigned bits = 128) const;
  bool operator==(const QuadraticSum& o) const { return terms_ == o.terms_; }

 private:
  std::map<Integer, Rational> terms_;
};
std::string to_string(const QuadraticSum& v);
// Exact comparison of real values; equal values compare false both ways.
bool less_than(const QuadraticSum& a, const QuadraticSum& b);

struct ChartabClass {
  std::string name;
  Integer size;
  long fixed_points = 0;
};

struct ChartabCharacter {
  Integer degree;
  std::vector<QuadraticValue> values;  // per class; values[0] is the degree
};

struct CharacterTableFile {
  std::string group;
  Integer order;
  std::size_t degree = 0;  // |Omega|
  std::vector<ChartabClass> classes;
  std::vector<ChartabCharacter> characters;

  // Throws std::out_of_range for unknown names.
  std::size_t class_index(const std::string& name) const;
  std::vector<std::size_t> derangement_classes() const;
  // Class of the inverses: the column of complex-conjugate values.
  std::size_t inverse_class(std::size_t c) const;
  Integer derangement_count() const;
};

// Parses the text format
//   group <name> order <N> degree <n>
//   classes:
//   <name> <size> <fixed points>   (one per class, identity first)
//   chars:
//   <degree> <v_1> ... <v_k>      (one per irreducible character)
// with '#' comments. Syntax errors carry line numbers; a table failing the
// class-size sum, sum of squared degrees, identity column, orthogonality to
// the trivial character, or transitivity (sum |C| fix(C) = |G|) check is
// rejected. All failures raise DataError.
CharacterTableFile parse_chartab(std::string_view text, const std::string& source = "<chartab>");
CharacterTableFile load_chartab(const std::filesystem::path& path);

struct ChartabEigenvalue {
  std::size_t character = 0;
  Integer degree;
  QuadraticSum value;  // (1/chi(1)) sum a_i |C_i| chi(x_i)
};

// Weights are per class of the table. Throws std::invalid_argument when the
// count is wrong, a weight is negative, a non-derangement class carries
// weight, or an eigenvalue is not real.
std::vector<ChartabEigenvalue> weighted_eigs_from_chartab(const CharacterTableFile& t, const std::vector<Rational>& weights);

// Per-class weights: 1 on the named classes, 0 elsewhere. Throws
// std::out_of_range for unknown names.
std::vector<Rational> chartab_weights(const CharacterTableFile& t, const std::vector<std::string>& names);
// 1 on every derangement class.
std::vector<Rational> chartab_unit_weights(const CharacterTableFile& t);

// Distinct eigenvalues ascending, each with multiplicity sum chi(1)^2.
struct ChartabSpectrumEntry {
  QuadraticSum value;
  Integer multiplicity;
  std::vector<std::size_t> characters;
};
std::vector<ChartabSpectrumEntry> chartab_spectrum(const std::vector<ChartabEigenvalue>& eigs);

SpectralSummary chartab_summary(const CharacterTableFile& t, const std::vector<Rational>& weights);
// Throws std::invalid_argument when the table has no derangement class or
// the weights vanish.
BoundReport chartab_ekr_verdict(const CharacterTableFile& t, const std::vector<Rational>& weights);

// Bound oracle for weight_subset_search with supports given as class indices.
BoundOracle chartab_bound_oracle(const CharacterTableFile& t);

}  // namespace ekr
