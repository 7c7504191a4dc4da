#include "ekr/psl.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ekr {

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Decides base^exp_a >= other^exp_b exactly.
bool power_at_least(std::uint64_t base, std::uint64_t exp_a, std::uint64_t other, std::uint64_t exp_b) {
  return power(Integer(static_cast<unsigned long>(base)), exp_a) >= power(Integer(static_cast<unsigned long>(other)), exp_b);
}

// Sign of x * ln(n) / ln(b) - y decided with a double prefilter, then MPFR
// enclosures; returns nullopt when even the enclosure cannot decide.
std::optional<bool> log_comparison(std::uint64_t x, std::uint64_t n, unsigned b, double y) {
  double v = static_cast<double>(x) * std::log(static_cast<double>(n)) / std::log(static_cast<double>(b)) - y;
  if (std::fabs(v) > 1e-6 * (1.0 + std::fabs(y))) return v > 0;
  Enclosure ln_n = log_enclosure(Rational(static_cast<unsigned long>(n)), 256);
  Enclosure ln_b = log_enclosure(Rational(static_cast<unsigned long>(b)), 256);
  Enclosure lhs = Enclosure::point(Rational(static_cast<unsigned long>(x))) * ln_n / ln_b;
  Rational target(y);
  if (lhs.lo > target) return true;
  if (lhs.hi < target) return false;
  return std::nullopt;
}

TotientCheck check_with_phi(std::uint64_t n, std::uint64_t phi, std::uint64_t* fallbacks) {
  TotientCheck c;
  c.n = n;
  c.phi = phi;
  // phi log2 n >= n  <=>  n^phi >= 2^n
  auto r2 = log_comparison(phi, n, 2, static_cast<double>(n));
  if (!r2) {
    if (fallbacks) ++*fallbacks;
    r2 = power_at_least(n, phi, 2, n);
  }
  c.log2_bound = *r2;
  if (n % 2 == 1) {
    // phi (log3 n + 2) >= 2n  <=>  phi log3 n >= 2n - 2 phi  <=>  n^phi >= 3^(2n - 2 phi)
    if (2 * phi >= 2 * n) {
      c.log3_bound = true;
    } else {
      std::uint64_t rhs = 2 * n - 2 * phi;
      auto r3 = log_comparison(phi, n, 3, static_cast<double>(rhs));
      if (!r3) {
        if (fallbacks) ++*fallbacks;
        r3 = power_at_least(n, phi, 3, rhs);
      }
      c.log3_bound = *r3;
    }
  }
  return c;
}

}  // namespace

TotientCheck psl_totient_bound(std::uint64_t n) {
  if (n <= 6) throw std::invalid_argument("the totient bound is stated for n > 6");
  return check_with_phi(n, euler_phi(n), nullptr);
}

TotientSweep psl_totient_sweep(std::uint64_t first, std::uint64_t last) {
  if (first <= 6) throw std::invalid_argument("the totient bound is stated for n > 6");
  TotientSweep s;
  s.first = first;
  s.last = last;
  if (last < first) return s;
  std::vector<std::uint64_t> phi(last + 1);
  for (std::uint64_t i = 0; i <= last; ++i) phi[i] = i;
  for (std::uint64_t p = 2; p <= last; ++p) {
    if (phi[p] != p) continue;
    for (std::uint64_t k = p; k <= last; k += p) phi[k] -= phi[k] / p;
  }
  for (std::uint64_t n = first; n <= last; ++n) {
    auto c = check_with_phi(n, phi[n], &s.exact_fallbacks);
    ++s.checked;
    if (!c.pass()) s.failures.push_back(n);
  }
  return s;
}

DerangementProportion psl_derangement_lower_bound(unsigned n, std::uint64_t q, const std::optional<Rational>& measured) {
  std::uint64_t p;
  unsigned k;
  if (n < 2 || !prime_power(q, p, k)) throw std::invalid_argument("need n >= 2 and a prime power q");
  DerangementProportion d;
  d.n = n;
  d.q = q;
  const Integer n2 = static_cast<unsigned long>(n) * static_cast<unsigned long>(n);
  Enclosure lg = log2_enclosure(Rational(static_cast<unsigned long>(q)), 256);
  d.bound = Enclosure::point(1) / (Enclosure::point(Rational(n2)) * lg);
  d.measured = measured;
  if (measured) {
    Enclosure prod = Enclosure::point(*measured * Rational(n2)) * lg;
    if (prod.lo >= 1) {
      d.pass = true;
    } else if (prod.hi < 1) {
      d.pass = false;
    } else {
      // m n^2 log2 q >= 1 with m = a/b  <=>  q^(a n^2) >= 2^b
      Integer a = measured->get_num() * n2;
      Integer b = measured->get_den();
      d.pass = power(Integer(static_cast<unsigned long>(q)), to_u64(a)) >= power(Integer(2), to_u64(b));
    }
  }
  return d;
}

Enclosure psl_critical_rhs(unsigned n, std::uint64_t q) {
  const Integer Q = static_cast<unsigned long>(q);
  Rational lead(power(Q, n) - Q, Q - 1);
  lead.canonicalize();
  Enclosure lg = log2_enclosure(Rational(Q), 256);
  Enclosure radicand = Enclosure::point(Rational(static_cast<unsigned long>(n) * n)) * lg - Enclosure::point(2);
  return Enclosure::point(lead) * sqrt_enclosure(radicand, 96);
}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(const std::string& text, const Integer& n, const Integer& q) : s_(text), n_(n), q_(q) {}

  Rational parse() {
    Rational v = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw DataError("expression '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
  }
  Rational sum() {
    Rational v = product();
    while (true) {
      if (eat('+')) v += product();
      else if (eat('-')) v -= product();
      else return v;
    }
  }
  Rational product() {
    Rational v = unary();
    while (true) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        Rational d = unary();
        if (d == 0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }
  Rational unary() {
    if (eat('-')) return -unary();
    return power_expr();
  }
  Rational power_expr() {
    Rational base = atom();
    if (eat('^')) {
      Rational e = unary();
      if (e.get_den() != 1 || e < 0) fail("exponent must be a nonnegative integer");
      Rational out(power(base.get_num(), to_u64(e.get_num())), power(base.get_den(), to_u64(e.get_num())));
      out.canonicalize();
      return out;
    }
    return base;
  }
  Rational atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Rational v = sum();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (c == 'n') {
      ++pos_;
      return Rational(n_);
    }
    if (c == 'q') {
      ++pos_;
      return Rational(q_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Rational(Integer(s_.substr(start, pos_ - start)));
    }
    fail("unexpected character");
  }

  std::string s_;
  std::size_t pos_ = 0;
  Integer n_, q_;
};

bool condition_holds(const std::string& cond, std::uint64_t v) {
  std::stringstream ss(cond);
  std::string tok;
  bool ok = true;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok == "any") continue;
    if (tok == "odd") ok = ok && v % 2 == 1;
    else if (tok == "even") ok = ok && v % 2 == 0;
    else if (tok.rfind(">=", 0) == 0) ok = ok && v >= std::stoull(tok.substr(2));
    else if (tok[0] == '!') ok = ok && v != std::stoull(tok.substr(1));
    else ok = ok && v == std::stoull(tok);
  }
  return ok;
}

}  // namespace

Rational evaluate_expression(const std::string& expr, const Integer& n, const Integer& q) {
  return ExpressionParser(expr, n, q).parse();
}

bool SmallDegreeRow::applies(unsigned n, std::uint64_t q) const {
  return condition_holds(n_condition, n) && condition_holds(q_condition, q);
}

std::vector<SmallDegreeRow> load_small_degree_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::vector<SmallDegreeRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t')) cols.push_back(col);
    if (cols.size() != 9) throw DataError(path + ":" + std::to_string(lineno) + ": expected 9 tab-separated columns");
    SmallDegreeRow r;
    for (int i = 0; i < 3; ++i) {
      r.degree_expr[i] = cols[static_cast<std::size_t>(2 * i)];
      r.count_expr[i] = cols[static_cast<std::size_t>(2 * i + 1)];
    }
    r.n_condition = cols[6];
    r.q_condition = cols[7];
    r.note = cols[8];
    // Validate the expressions once at load time.
    for (int i = 0; i < 3; ++i) {
      try {
        evaluate_expression(r.degree_expr[i], 5, 7);
        evaluate_expression(r.count_expr[i], 5, 7);
      } catch (const DataError& e) {
        throw DataError(path + ":" + std::to_string(lineno) + ": " + e.what());
      }
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

DegreeFilter psl_degree_filter(unsigned n, std::uint64_t q, const std::vector<SmallDegreeRow>& table) {
  if (n < 4) throw std::invalid_argument("the degree filter is applied for n >= 4");
  DegreeFilter f;
  f.n = n;
  f.q = q;
  f.rhs = psl_critical_rhs(n, q);
  for (const auto& row : table) {
    if (!row.applies(n, q)) continue;
    f.row = row;
    for (int i = 0; i < 3; ++i) {
      Rational d = evaluate_expression(row.degree_expr[i], static_cast<unsigned long>(n), static_cast<unsigned long>(q));
      Rational c = evaluate_expression(row.count_expr[i], static_cast<unsigned long>(n), static_cast<unsigned long>(q));
      if (d.get_den() != 1 || c.get_den() != 1) throw DataError("table row '" + row.note + "' gives a non-integral value");
      f.degrees.push_back({d.get_num(), c.get_num(), d <= f.rhs.hi});
    }
    break;
  }
  return f;
}

}  // namespace ekr
