#include "ekr/chartab.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ekr/polynomial.hpp"

namespace ekr {

namespace {

// Writes d = f^2 * core with core squarefree; returns f.
Integer split_square(Integer& d) {
  Integer f = 1;
  const bool neg = d < 0;
  Integer m = neg ? Integer(-d) : d;
  for (Integer p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      f *= p;
    }
  }
  d = neg ? Integer(-m) : m;
  return f;
}

std::string trim_copy(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

QuadraticValue QuadraticValue::conjugate() const {
  QuadraticValue c = *this;
  if (radicand < 0) c.s = -s;
  return c;
}

QuadraticValue parse_quadratic(std::string_view text) {
  const std::string t = trim_copy(text);
  QuadraticValue v;
  const std::size_t at = t.find("sqrt(");
  if (at == std::string::npos) {
    v.r = parse_rational(t);
    return v;
  }
  if (t.back() != ')') throw DataError("malformed value '" + t + "'");
  Integer d;
  try {
    d = Integer(trim_copy(std::string_view(t).substr(at + 5, t.size() - at - 6)));
  } catch (const std::invalid_argument&) {
    throw DataError("malformed radicand in '" + t + "'");
  }
  // Coefficient: the signed rational ending right before "*sqrt(" (or a bare sign).
  std::size_t end = at;
  Rational s = 1;
  std::size_t start = end;
  if (end > 0 && t[end - 1] == '*') {
    --end;
    start = end;
    while (start > 0 && (std::isdigit(static_cast<unsigned char>(t[start - 1])) || t[start - 1] == '/')) --start;
    if (start == end) throw DataError("malformed coefficient in '" + t + "'");
    s = parse_rational(std::string_view(t).substr(start, end - start));
  }
  if (start > 0 && (t[start - 1] == '+' || t[start - 1] == '-')) {
    if (t[start - 1] == '-') s = -s;
    --start;
  }
  const std::string head = trim_copy(std::string_view(t).substr(0, start));
  if (!head.empty()) v.r = parse_rational(head);
  if (d == 0) throw DataError("radicand 0 in '" + t + "'");
  const Integer f = split_square(d);
  s *= f;
  if (d == 1) {
    v.r += s;
  } else if (s != 0) {
    v.s = s;
    v.radicand = d;
  }
  return v;
}

std::string to_string(const QuadraticValue& v) {
  if (v.is_rational()) return to_string(v.r);
  std::string out = v.r != 0 ? to_string(v.r) : "";
  if (v.r != 0 && v.s > 0) out += "+";
  std::string coeff = v.s == 1 ? "" : v.s == -1 ? "-" : to_string(v.s) + "*";
  return out + coeff + "sqrt(" + to_string(v.radicand) + ")";
}

void QuadraticSum::add(const Rational& coefficient, const Integer& radicand) {
  if (coefficient == 0) return;
  Rational& c = terms_[radicand];
  c += coefficient;
  if (c == 0) terms_.erase(radicand);
}

void QuadraticSum::add(const QuadraticValue& v, const Rational& scale) {
  add(v.r * scale, 1);
  if (!v.is_rational()) add(v.s * scale, v.radicand);
}

QuadraticSum QuadraticSum::scaled(const Rational& f) const {
  QuadraticSum out;
  for (const auto& [d, c] : terms_) out.add(c * f, d);
  return out;
}

bool QuadraticSum::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

bool QuadraticSum::is_real() const {
  return std::none_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first < 0; });
}

Rational QuadraticSum::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? Rational(0) : it->second;
}

Enclosure QuadraticSum::enclosure(unsigned bits) const {
  if (!is_real()) throw std::logic_error("enclosure of a non-real value");
  Enclosure e = Enclosure::point(0);
  for (const auto& [d, c] : terms_) e = e + Enclosure::point(c) * (d == 1 ? Enclosure::point(1) : sqrt_enclosure(Rational(d), bits));
  return e;
}

std::string to_string(const QuadraticSum& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [d, c] : v.terms()) {
    QuadraticValue q;
    if (d == 1) {
      q.r = c;
    } else {
      q.s = c;
      q.radicand = d;
    }
    std::string piece = to_string(q);
    if (!out.empty() && piece[0] != '-') out += "+";
    out += piece;
  }
  return out;
}

bool less_than(const QuadraticSum& a, const QuadraticSum& b) {
  QuadraticSum diff = b;
  for (const auto& [d, c] : a.terms()) diff.add(-c, d);
  if (diff.is_zero()) return false;
  if (diff.is_rational()) return diff.rational_part() > 0;
  // A nonzero combination of independent square roots: refine until decided.
  for (unsigned bits = 64;; bits *= 2) {
    Enclosure e = diff.enclosure(bits);
    if (e.lo > 0) return true;
    if (e.hi < 0) return false;
  }
}

std::size_t CharacterTableFile::class_index(const std::string& name) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].name == name) return i;
  throw std::out_of_range("unknown class " + name + " in " + group);
}

std::vector<std::size_t> CharacterTableFile::derangement_classes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].fixed_points == 0) out.push_back(i);
  return out;
}

std::size_t CharacterTableFile::inverse_class(std::size_t c) const {
  for (std::size_t j = 0; j < classes.size(); ++j) {
    if (classes[j].size != classes[c].size) continue;
    bool match = std::all_of(characters.begin(), characters.end(),
                             [&](const ChartabCharacter& chi) { return chi.values[j] == chi.values[c].conjugate(); });
    if (match) return j;
  }
  throw DataError("no column of conjugate values for class " + classes[c].name);
}

Integer CharacterTableFile::derangement_count() const {
  Integer n = 0;
  for (std::size_t c : derangement_classes()) n += classes[c].size;
  return n;
}

CharacterTableFile parse_chartab(std::string_view text, const std::string& source) {
  CharacterTableFile t;
  enum class Section { header, classes, chars } section = Section::header;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) -> DataError {
    return DataError(source + ":" + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string s = trim_copy(line);
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok[0] == "group") {
      if (have_header) throw fail("duplicate group line");
      if (tok.size() != 6 || tok[2] != "order" || tok[4] != "degree") throw fail("expected 'group <name> order <N> degree <n>'");
      t.group = tok[1];
      try {
        t.order = Integer(tok[3]);
        t.degree = std::stoul(tok[5]);
      } catch (const std::exception&) {
        throw fail("bad order or degree");
      }
      have_header = true;
      continue;
    }
    if (s == "classes:") {
      if (!have_header) throw fail("'classes:' before the group line");
      section = Section::classes;
      continue;
    }
    if (s == "chars:") {
      if (section != Section::classes) throw fail("'chars:' before 'classes:'");
      section = Section::chars;
      continue;
    }
    try {
      if (section == Section::classes) {
        if (tok.size() != 3) throw fail("expected '<name> <size> <fixed points>'");
        ChartabClass c;
        c.name = tok[0];
        c.size = Integer(tok[1]);
        c.fixed_points = std::stol(tok[2]);
        if (c.size <= 0 || c.fixed_points < 0) throw fail("class size must be positive and fixed points nonnegative");
        t.classes.push_back(c);
      } else if (section == Section::chars) {
        if (tok.size() != t.classes.size() + 1)
          throw fail("expected a degree and " + std::to_string(t.classes.size()) + " values");
        ChartabCharacter chi;
        chi.degree = Integer(tok[0]);
        for (std::size_t i = 1; i < tok.size(); ++i) chi.values.push_back(parse_quadratic(tok[i]));
        t.characters.push_back(std::move(chi));
      } else {
        throw fail("unexpected line before 'classes:'");
      }
    } catch (const DataError& e) {
      if (std::string(e.what()).rfind(source, 0) == 0) throw;
      throw fail(e.what());
    } catch (const std::invalid_argument&) {
      throw fail("malformed number");
    } catch (const std::out_of_range&) {
      throw fail("number out of range");
    }
  }
  if (!have_header) throw DataError(source + ": missing group line");
  if (t.classes.empty() || t.characters.empty()) throw DataError(source + ": missing classes or characters");
  if (t.characters.size() != t.classes.size())
    throw DataError(source + ": " + std::to_string(t.characters.size()) + " characters for " +
                    std::to_string(t.classes.size()) + " classes");

  // Invariants.
  Integer size_sum = 0, degree_squares = 0, fixed_sum = 0;
  for (const auto& c : t.classes) {
    size_sum += c.size;
    fixed_sum += c.size * c.fixed_points;
  }
  if (size_sum != t.order) throw DataError(source + ": class sizes sum to " + to_string(size_sum) + ", not " + to_string(t.order));
  if (t.classes[0].size != 1 || t.classes[0].fixed_points != static_cast<long>(t.degree))
    throw DataError(source + ": first class must be the identity (size 1, fixing every point)");
  if (fixed_sum != t.order) throw DataError(source + ": fixed-point counts do not describe a transitive action");
  bool trivial_seen = false;
  for (std::size_t k = 0; k < t.characters.size(); ++k) {
    const auto& chi = t.characters[k];
    if (chi.degree <= 0 || chi.values[0] != QuadraticValue{Rational(chi.degree), 0, 1})
      throw DataError(source + ": character " + std::to_string(k + 1) + " does not take its degree on the identity");
    degree_squares += chi.degree * chi.degree;
    QuadraticSum inner;
    for (std::size_t i = 0; i < t.classes.size(); ++i) inner.add(chi.values[i], Rational(t.classes[i].size));
    bool trivial = std::all_of(chi.values.begin(), chi.values.end(),
                               [](const QuadraticValue& v) { return v == QuadraticValue{1, 0, 1}; });
    trivial_seen = trivial_seen || trivial;
    if (!(inner == (trivial ? QuadraticSum(Rational(t.order)) : QuadraticSum())))
      throw DataError(source + ": character " + std::to_string(k + 1) + " fails orthogonality with the trivial character");
  }
  if (!trivial_seen) throw DataError(source + ": no trivial character");
  if (degree_squares != t.order)
    throw DataError(source + ": squared degrees sum to " + to_string(degree_squares) + ", not " + to_string(t.order));
  return t;
}

CharacterTableFile load_chartab(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_chartab(ss.str(), path.string());
}

std::vector<ChartabEigenvalue> weighted_eigs_from_chartab(const CharacterTableFile& t, const std::vector<Rational>& weights) {
  if (weights.size() != t.classes.size()) throw std::invalid_argument("one weight per class is required");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) throw std::invalid_argument("weights must be nonnegative");
    if (weights[i] != 0 && t.classes[i].fixed_points != 0)
      throw std::invalid_argument("class " + t.classes[i].name + " is not a derangement class");
  }
  std::vector<ChartabEigenvalue> out;
  for (std::size_t k = 0; k < t.characters.size(); ++k) {
    const auto& chi = t.characters[k];
    QuadraticSum sum;
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (weights[i] != 0) sum.add(chi.values[i], weights[i] * t.classes[i].size);
    ChartabEigenvalue e;
    e.character = k;
    e.degree = chi.degree;
    e.value = sum.scaled(Rational(Integer(1), chi.degree));
    if (!e.value.is_real())
      throw std::invalid_argument("character " + std::to_string(k + 1) + " gives a non-real eigenvalue; weights are not inverse-closed");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Rational> chartab_weights(const CharacterTableFile& t, const std::vector<std::string>& names) {
  std::vector<Rational> w(t.classes.size(), 0);
  for (const auto& n : names) w[t.class_index(n)] = 1;
  return w;
}

std::vector<Rational> chartab_unit_weights(const CharacterTableFile& t) {
  std::vector<Rational> w(t.classes.size(), 0);
  for (std::size_t c : t.derangement_classes()) w[c] = 1;
  return w;
}

std::vector<ChartabSpectrumEntry> chartab_spectrum(const std::vector<ChartabEigenvalue>& eigs) {
  std::vector<ChartabSpectrumEntry> out;
  for (const auto& e : eigs) {
    auto it = std::find_if(out.begin(), out.end(), [&](const ChartabSpectrumEntry& s) { return s.value == e.value; });
    if (it == out.end()) {
      out.push_back({e.value, 0, {}});
      it = out.end() - 1;
    }
    it->multiplicity += e.degree * e.degree;
    it->characters.push_back(e.character);
  }
  std::sort(out.begin(), out.end(),
            [](const ChartabSpectrumEntry& a, const ChartabSpectrumEntry& b) { return less_than(a.value, b.value); });
  return out;
}

namespace {

RealAlgebraic to_real_algebraic(const QuadraticSum& v) {
  if (v.is_rational()) return RealAlgebraic::from_rational(v.rational_part());
  if (v.terms().size() > 2 || (v.terms().size() == 2 && v.terms().begin()->first != 1))
    throw std::logic_error("eigenvalue outside a single quadratic field");
  const Rational r = v.rational_part();
  const auto& [d, s] = *v.terms().rbegin();
  // (x - r)^2 - s^2 d, whose roots are 2|s|sqrt(d) apart.
  IntPoly p = to_primitive_integer(RatPoly{r * r - s * s * d, -2 * r, 1});
  for (unsigned bits = 64;; bits *= 2) {
    Enclosure e = v.enclosure(bits);
    if (sign_at(p, e.lo) * sign_at(p, e.hi) < 0) return RealAlgebraic::from_isolating_interval(p, e.lo, e.hi);
  }
}

}  // namespace

SpectralSummary chartab_summary(const CharacterTableFile& t, const std::vector<Rational>& weights) {
  const auto spec = chartab_spectrum(weighted_eigs_from_chartab(t, weights));
  SpectralSummary s;
  s.group = t.group;
  s.degree = t.degree;
  s.order = t.order;
  s.derangements = t.derangement_count();
  if (!spec.back().value.is_rational()) throw std::logic_error("largest eigenvalue is not rational");
  s.max = spec.back().value.rational_part();
  s.min = to_real_algebraic(spec.front().value);
  s.min_multiplicity = spec.front().multiplicity;
  for (std::size_t c : t.derangement_classes()) {
    s.weights.push_back(weights[c]);
    s.class_sizes.push_back(t.classes[c].size);
    if (weights[c] != 1) s.weighted = true;
  }
  return s;
}

BoundReport chartab_ekr_verdict(const CharacterTableFile& t, const std::vector<Rational>& weights) {
  if (t.derangement_classes().empty()) throw std::invalid_argument(t.group + " has no derangement class");
  if (std::all_of(weights.begin(), weights.end(), [](const Rational& w) { return w == 0; }))
    throw std::invalid_argument("all weights are zero");
  return ekr_verdict(chartab_summary(t, weights));
}

BoundOracle chartab_bound_oracle(const CharacterTableFile& t) {
  return [&t](const std::vector<std::size_t>& support) -> std::optional<Enclosure> {
    std::vector<Rational> w(t.classes.size(), 0);
    for (std::size_t c : support) w[c] = 1;
    const auto spec = chartab_spectrum(weighted_eigs_from_chartab(t, w));
    if (spec.size() < 2 || !spec.back().value.is_rational()) return std::nullopt;
    Enclosure tau = spec.front().value.enclosure(128);
    if (!(tau.hi < 0)) return std::nullopt;
    return ratio_bound(Enclosure::point(spec.back().value.rational_part()), tau, t.order);
  };
}

}  // namespace ekr
