#include "ekr/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ekr {

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

namespace {

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

int rdegree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

void make_monic(RatPoly& p) {
  if (p.empty()) return;
  Rational lc = p.back();
  for (auto& c : p) c /= lc;
}

// Quotient and remainder over Q.
void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lc = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational f = r.back() / lc;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
  RatPoly q, r;
  divmod(a, b, q, r);
  if (!r.empty()) throw std::logic_error("inexact polynomial division");
  return q;
}

RatPoly monic_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly q, r;
    divmod(a, b, q, r);
    // Keep coefficients small by normalising each remainder.
    make_monic(r);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

}  // namespace

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  IntPoly q = p;
  trim(q);
  if (q.empty()) return q;
  Integer g = content(q);
  if (q.back() < 0) g = -g;
  for (auto& c : q) c /= g;
  return q;
}

RatPoly to_rational(const IntPoly& p) {
  RatPoly r;
  r.reserve(p.size());
  for (const auto& c : p) r.emplace_back(c);
  return r;
}

IntPoly to_primitive_integer(const RatPoly& p) {
  Integer den = 1;
  for (const auto& c : p) den = lcm(den, c.get_den());
  IntPoly out;
  out.reserve(p.size());
  for (const auto& c : p) {
    Rational s = c * den;
    out.push_back(s.get_num());
  }
  return primitive_part(out);
}

Rational evaluate(const IntPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer evaluate(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_at(const IntPoly& p, const Rational& x) {
  // Horner on sum c_i a^i b^(n-i), which has the sign of p(a/b) since b > 0.
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = 0;
  Integer bpow = 1;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * a + *it * bpow;
    bpow *= b;
  }
  return sgn(acc);
}

Enclosure evaluate(const IntPoly& p, const Enclosure& x) {
  Enclosure acc = Enclosure::point(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Enclosure::point(Rational(*it));
  return acc;
}

RatPoly deflate(const RatPoly& p, const Rational& r) {
  if (p.empty()) return p;
  RatPoly q(p.size() - 1, Rational(0));
  Rational carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  if (p[0] + carry * r != 0) throw std::logic_error("deflate: value is not a root");
  return q;
}

IntPoly characteristic_polynomial(const IntMatrix& m) {
  const std::size_t n = m.size();
  // Coefficients kept high-to-low during the recurrence.
  std::vector<Integer> poly{Integer(1)};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Integer> t(k + 2);
    t[0] = 1;
    t[1] = -m[k][k];
    std::vector<Integer> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = m[i][k];
    for (std::size_t j = 2; j < k + 2; ++j) {
      Integer dot = 0;
      for (std::size_t i = 0; i < k; ++i) dot += m[k][i] * v[i];
      t[j] = -dot;
      if (j + 1 < k + 2) {
        std::vector<Integer> w(k, Integer(0));
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c)
            if (m[r][c] != 0) w[r] += m[r][c] * v[c];
        v.swap(w);
      }
    }
    std::vector<Integer> next(k + 2, Integer(0));
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= i && j < poly.size(); ++j) next[i] += t[i - j] * poly[j];
    poly.swap(next);
  }
  std::reverse(poly.begin(), poly.end());
  return poly;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  RatPoly f = to_rational(p);
  trim(f);
  if (rdegree(f) < 1) return out;
  make_monic(f);
  RatPoly df = derivative(f);
  RatPoly a = monic_gcd(f, df);
  RatPoly b = exact_div(f, a);
  RatPoly c = exact_div(df, a);
  RatPoly d = sub(c, derivative(b));
  int i = 1;
  while (rdegree(b) > 0) {
    RatPoly g = monic_gcd(b, d);
    RatPoly b_next = exact_div(b, g);
    RatPoly c_next = d.empty() ? RatPoly{} : exact_div(d, g);
    if (rdegree(g) > 0) out.emplace_back(to_primitive_integer(g), i);
    b = std::move(b_next);
    d = sub(c_next, derivative(b));
    ++i;
  }
  return out;
}

namespace {

class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p) {
    chain_.push_back(primitive_part(p));
    IntPoly d = ekr::derivative(chain_[0]);
    if (d.empty()) return;
    chain_.push_back(primitive_part(d));
    while (true) {
      const IntPoly& a = chain_[chain_.size() - 2];
      const IntPoly& b = chain_.back();
      if (degree(b) <= 0) break;
      // Pseudo-remainder: lc(b)^(delta+1) a = Q b + R.
      IntPoly r = a;
      int delta = degree(a) - degree(b);
      const Integer& lc = b.back();
      int pending = delta + 1;
      while (!r.empty() && degree(r) >= degree(b)) {
        std::size_t shift = static_cast<std::size_t>(degree(r) - degree(b));
        Integer f = r.back();
        for (auto& c : r) c *= lc;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
        trim(r);
        --pending;
      }
      for (; pending > 0; --pending)
        for (auto& c : r) c *= lc;
      if (r.empty()) break;
      // rem = R / lc^(delta+1); next = -rem scaled by a positive constant.
      bool flip = (lc < 0) && ((delta + 1) % 2 == 1);
      IntPoly next = r;
      Integer g = content(next);
      for (auto& c : next) {
        c /= g;
        if (!flip) c = -c;
      }
      chain_.push_back(std::move(next));
    }
  }

  int variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const auto& q : chain_) {
      int s = sign_at(q, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  const IntPoly& base() const { return chain_[0]; }

 private:
  std::vector<IntPoly> chain_;
};

struct Isolated {
  Rational lo, hi;
  bool exact;
};

void isolate(const SturmChain& s, const Rational& lo, const Rational& hi, int vlo, int vhi,
             std::vector<Isolated>& out) {
  int n = vlo - vhi;
  if (n <= 0) return;
  const IntPoly& p = s.base();
  if (n == 1) {
    if (sign_at(p, hi) == 0) {
      out.push_back({hi, hi, true});
      return;
    }
    if (sign_at(p, lo) != 0) {
      out.push_back({lo, hi, false});
      return;
    }
  }
  Rational mid = (lo + hi) / 2;
  int vmid = s.variations(mid);
  isolate(s, lo, mid, vlo, vmid, out);
  isolate(s, mid, hi, vmid, vhi, out);
}

}  // namespace

RealAlgebraic RealAlgebraic::from_rational(const Rational& v) {
  RealAlgebraic r;
  r.exact_ = true;
  r.lo_ = r.hi_ = v;
  Rational c = v;
  c.canonicalize();
  r.poly_ = {-Integer(c.get_num()), Integer(c.get_den())};
  return r;
}

RealAlgebraic RealAlgebraic::from_isolating_interval(IntPoly p, Rational lo, Rational hi) {
  int slo = sign_at(p, lo), shi = sign_at(p, hi);
  if (slo == 0 || shi == 0 || slo == shi) throw std::invalid_argument("interval does not isolate a simple root");
  RealAlgebraic r;
  r.exact_ = false;
  r.poly_ = std::move(p);
  r.lo_ = std::move(lo);
  r.hi_ = std::move(hi);
  return r;
}

const Rational& RealAlgebraic::value() const {
  if (!exact_) throw std::logic_error("irrational value has no exact rational form");
  return lo_;
}

Enclosure RealAlgebraic::enclosure() const { return {lo_, hi_}; }

double RealAlgebraic::approx() const {
  if (exact_) return lo_.get_d();
  return refined(Rational(1, 1) / (Integer(1) << 60)).enclosure().approx();
}

RealAlgebraic RealAlgebraic::refined(const Rational& w) const {
  RealAlgebraic r = *this;
  if (r.exact_) return r;
  int slo = sign_at(r.poly_, r.lo_);
  while (r.hi_ - r.lo_ > w) {
    Rational mid = (r.lo_ + r.hi_) / 2;
    int s = sign_at(r.poly_, mid);
    if (s == 0) return from_rational(mid);
    if (s == slo)
      r.lo_ = mid;
    else
      r.hi_ = mid;
  }
  return r;
}

RealAlgebraic RealAlgebraic::divided_by(const Integer& d) const {
  if (d <= 0) throw std::invalid_argument("divided_by expects a positive divisor");
  if (exact_) return from_rational(lo_ / Rational(d));
  // y = x / d is a root of p(d y): coefficient i scaled by d^i.
  IntPoly q = poly_;
  Integer f = 1;
  for (auto& c : q) {
    c *= f;
    f *= d;
  }
  return from_isolating_interval(primitive_part(q), lo_ / Rational(d), hi_ / Rational(d));
}

RealAlgebraic RealAlgebraic::negated() const {
  if (exact_) return from_rational(-lo_);
  IntPoly q = poly_;
  for (std::size_t i = 1; i < q.size(); i += 2) q[i] = -q[i];
  return from_isolating_interval(primitive_part(q), -hi_, -lo_);
}

bool less_than(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_rational() && b.is_rational()) return a.value() < b.value();
  RealAlgebraic x = a, y = b;
  for (int i = 0; i < 4096; ++i) {
    Enclosure ex = x.enclosure(), ey = y.enclosure();
    if (ex.hi < ey.lo) return true;
    if (ey.hi < ex.lo) return false;
    Rational w = std::max(ex.width(), ey.width()) / 4;
    if (w == 0) break;
    x = x.refined(w);
    y = y.refined(w);
  }
  throw std::logic_error("less_than: values could not be separated");
}

std::vector<RealAlgebraic> real_roots(const IntPoly& squarefree) {
  std::vector<RealAlgebraic> roots;
  IntPoly p = primitive_part(squarefree);
  if (degree(p) < 1) return roots;
  SturmChain chain(p);
  // Cauchy bound: every root has modulus < 1 + max |a_i / a_n|.
  Integer lc = abs(p.back());
  Integer maxc = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) maxc = std::max(maxc, Integer(abs(p[i])));
  Integer bound;
  mpz_cdiv_q(bound.get_mpz_t(), maxc.get_mpz_t(), lc.get_mpz_t());
  bound += 2;
  Rational lo(-bound), hi(bound);
  std::vector<Isolated> found;
  isolate(chain, lo, hi, chain.variations(lo), chain.variations(hi), found);
  for (auto& iso : found) {
    if (iso.exact) {
      roots.push_back(RealAlgebraic::from_rational(iso.lo));
      continue;
    }
    // Any rational root is a multiple of 1/lc; narrow until at most one such
    // multiple lies strictly inside the interval and test it.
    RealAlgebraic r = RealAlgebraic::from_isolating_interval(p, iso.lo, iso.hi).refined(Rational(1) / Rational(lc * 2));
    if (r.is_rational()) {
      roots.push_back(r);
      continue;
    }
    Enclosure e = r.enclosure();
    Rational scaled = e.lo * lc;
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    bool done = false;
    for (Integer c = k; Rational(c) <= e.hi * lc; ++c) {
      Rational cand(c, lc);
      cand.canonicalize();
      if (e.lo < cand && cand < e.hi && sign_at(p, cand) == 0) {
        roots.push_back(RealAlgebraic::from_rational(cand));
        done = true;
        break;
      }
    }
    if (!done) roots.push_back(r);
  }
  return roots;
}

}  // namespace ekr
