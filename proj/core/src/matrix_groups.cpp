#include "ekr/matrix_groups.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "ekr/finite_field.hpp"

namespace ekr {

namespace {

using Vec = std::vector<FiniteField::Element>;
using Mat = std::vector<FiniteField::Element>;  // row-major n x n

Mat identity_matrix(unsigned n) {
  Mat m(n * n, 0);
  for (unsigned i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

Vec row_times(const FiniteField& f, const Vec& v, const Mat& m, unsigned n) {
  Vec out(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j) out[j] = f.add(out[j], f.mul(v[i], m[i * n + j]));
  }
  return out;
}

Mat mat_mul(const FiniteField& f, const Mat& a, const Mat& b, unsigned n) {
  Mat out(n * n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) {
      if (a[i * n + k] == 0) continue;
      for (unsigned j = 0; j < n; ++j) out[i * n + j] = f.add(out[i * n + j], f.mul(a[i * n + k], b[k * n + j]));
    }
  return out;
}

// Scale so the first nonzero coordinate is 1.
Vec normalise(const FiniteField& f, Vec v) {
  for (auto x : v) {
    if (x == 0) continue;
    auto inv = f.inv(x);
    for (auto& y : v) y = f.mul(y, inv);
    break;
  }
  return v;
}

class ProjectiveIndex {
 public:
  ProjectiveIndex(unsigned n, std::uint64_t q) : n_(n), q_(q), offset_(n + 1, 0) {
    for (unsigned i = 0; i < n; ++i) {
      std::uint64_t block = 1;
      for (unsigned j = i + 1; j < n; ++j) block *= q;
      offset_[i + 1] = offset_[i] + block;
    }
  }
  std::uint64_t count() const { return offset_[n_]; }
  // v must be normalised.
  std::uint64_t index(const Vec& v) const {
    unsigned lead = 0;
    while (v[lead] == 0) ++lead;
    std::uint64_t code = 0, mult = 1;
    for (unsigned j = lead + 1; j < n_; ++j) {
      code += v[j] * mult;
      mult *= q_;
    }
    return offset_[lead] + code;
  }
  Vec point(std::uint64_t idx) const {
    unsigned lead = 0;
    while (idx >= offset_[lead + 1]) ++lead;
    std::uint64_t code = idx - offset_[lead];
    Vec v(n_, 0);
    v[lead] = 1;
    for (unsigned j = lead + 1; j < n_; ++j) {
      v[j] = static_cast<FiniteField::Element>(code % q_);
      code /= q_;
    }
    return v;
  }

 private:
  unsigned n_;
  std::uint64_t q_;
  std::vector<std::uint64_t> offset_;
};

Permutation projective_action(const FiniteField& f, const ProjectiveIndex& idx, const Mat& m, unsigned n) {
  std::uint64_t count = idx.count();
  std::vector<Point> img(count);
  for (std::uint64_t a = 0; a < count; ++a) img[a] = static_cast<Point>(idx.index(normalise(f, row_times(f, idx.point(a), m, n))));
  return Permutation::from_images(std::move(img));
}

void check_linear(unsigned n, std::uint32_t q) {
  std::uint64_t p;
  unsigned k;
  if (n < 2) throw std::invalid_argument("linear groups need n >= 2");
  if (!prime_power(q, p, k)) throw std::invalid_argument("q must be a prime power");
  if (n == 2 && (q == 2 || q == 3)) throw std::invalid_argument("(n,q) = (2,2) and (2,3) are excluded");
  if (projective_point_count(n, q) > kMaxDegree) throw std::invalid_argument("action degree too large");
}

std::vector<Mat> sl_generators(const FiniteField& f, unsigned n) {
  std::vector<Mat> gens;
  for (unsigned i = 0; i + 1 < n; ++i)
    for (unsigned b = 0; b < f.degree(); ++b) {
      auto t = f.exp(b);
      Mat up = identity_matrix(n), down = identity_matrix(n);
      up[i * n + i + 1] = t;
      down[(i + 1) * n + i] = t;
      gens.push_back(up);
      gens.push_back(down);
    }
  return gens;
}

int popcount_parity(std::uint32_t x) { return std::popcount(x) & 1; }

}  // namespace

void MatrixGroupSpec::validate() const {
  switch (family) {
    case Family::psl:
    case Family::pgl:
      check_linear(n, q);
      if (action != ActionKind::projective_points) throw std::invalid_argument("linear groups act on projective points");
      break;
    case Family::sp2n2:
      if (n < 2) throw std::invalid_argument("Sp(2n,2) needs n >= 2");
      if (n > 5) throw std::invalid_argument("Sp(2n,2) construction limited to n <= 5");
      if (action != ActionKind::quadratic_forms_plus && action != ActionKind::quadratic_forms_minus &&
          action != ActionKind::natural)
        throw std::invalid_argument("Sp(2n,2) acts on quadratic forms or vectors");
      break;
    case Family::psu3: {
      std::uint64_t p;
      unsigned k;
      if (!prime_power(q, p, k) || q < 3) throw std::invalid_argument("PSU3(q) needs a prime power q >= 3");
      if (static_cast<std::uint64_t>(q) * q > (1u << 16)) throw std::invalid_argument("q^2 exceeds the field limit");
      if (action != ActionKind::isotropic_points) throw std::invalid_argument("PSU3 acts on isotropic points");
      break;
    }
    case Family::file:
      break;
  }
}

std::string MatrixGroupSpec::label() const {
  switch (family) {
    case Family::psl:
      return "PSL(" + std::to_string(n) + "," + std::to_string(q) + ")";
    case Family::pgl:
      return "PGL(" + std::to_string(n) + "," + std::to_string(q) + ")";
    case Family::sp2n2:
      return "Sp(" + std::to_string(2 * n) + ",2)" +
             (action == ActionKind::quadratic_forms_plus    ? " on plus-type forms"
              : action == ActionKind::quadratic_forms_minus ? " on minus-type forms"
                                                            : " on nonzero vectors");
    case Family::psu3:
      return "PSU(3," + std::to_string(q) + ")";
    case Family::file:
      return "file";
  }
  return "?";
}

std::uint64_t projective_point_count(unsigned n, std::uint64_t q) {
  std::uint64_t c = 0, t = 1;
  for (unsigned i = 0; i < n; ++i) {
    c += t;
    t *= q;
  }
  return c;
}

Integer psl_order(unsigned n, std::uint64_t q) {
  Integer qq = static_cast<unsigned long>(q);
  Integer prod = 1;
  for (unsigned i = 0; i < n; ++i) prod *= power(qq, n) - power(qq, i);
  Integer d = gcd(Integer(n), qq - 1);
  return prod / (d * (qq - 1));
}

Integer sp2n2_order(unsigned n) {
  Integer r = power(2, static_cast<unsigned long>(n) * n);
  for (unsigned i = 1; i <= n; ++i) r *= power(4, i) - 1;
  return r;
}

Integer psu3_order(std::uint64_t q) {
  Integer qq = static_cast<unsigned long>(q);
  Integer d = gcd(Integer(3), qq + 1);
  return qq * qq * qq * (qq * qq * qq + 1) * (qq * qq - 1) / d;
}

GeneratorSet psl_generators(unsigned n, std::uint32_t q) {
  check_linear(n, q);
  FiniteField f(q);
  ProjectiveIndex idx(n, q);
  GeneratorSet out;
  out.degree = idx.count();
  for (const auto& m : sl_generators(f, n)) out.generators.push_back(projective_action(f, idx, m, n));
  return out;
}

GeneratorSet pgl_generators(unsigned n, std::uint32_t q) {
  GeneratorSet out = psl_generators(n, q);
  FiniteField f(q);
  ProjectiveIndex idx(n, q);
  Mat d = identity_matrix(n);
  d[0] = f.generator();
  out.generators.push_back(projective_action(f, idx, d, n));
  return out;
}

SymplecticActions sp2n2_actions(unsigned n) {
  if (n < 2) throw std::invalid_argument("Sp(2n,2) needs n >= 2");
  if (n > 5) throw std::invalid_argument("Sp(2n,2) construction limited to n <= 5");
  const unsigned dim = 2 * n;
  const std::uint32_t vcount = 1u << dim;
  const std::uint32_t low = (1u << n) - 1;
  auto form_b = [&](std::uint32_t u, std::uint32_t v) {
    return popcount_parity((u & (v >> n) & low) ^ ((u >> n) & v & low));
  };
  // Q(v) for the form with basis values `qmask`.
  auto form_q = [&](std::uint32_t qmask, std::uint32_t v) {
    return popcount_parity(v & qmask) ^ popcount_parity(v & (v >> n) & low);
  };
  std::vector<std::uint32_t> plus, minus;
  std::vector<int> type(vcount);
  for (std::uint32_t qm = 0; qm < vcount; ++qm) {
    std::uint32_t zeros = 0;
    for (std::uint32_t v = 0; v < vcount; ++v) zeros += form_q(qm, v) == 0;
    bool is_plus = zeros == (vcount / 2) + (1u << (n - 1));
    (is_plus ? plus : minus).push_back(qm);
    type[qm] = is_plus ? 1 : -1;
  }
  std::vector<std::uint32_t> pos(vcount);
  for (std::uint32_t i = 0; i < plus.size(); ++i) pos[plus[i]] = i;
  for (std::uint32_t i = 0; i < minus.size(); ++i) pos[minus[i]] = i;

  std::vector<std::uint32_t> axes;
  for (unsigned i = 0; i < n; ++i) axes.push_back(1u << i);
  for (unsigned i = 0; i < n; ++i) axes.push_back(1u << (n + i));
  for (unsigned i = 0; i + 1 < n; ++i) axes.push_back((1u << i) | (1u << (i + 1)));

  SymplecticActions out;
  out.n = n;
  out.plus.degree = plus.size();
  out.minus.degree = minus.size();
  out.natural.degree = vcount - 1;
  out.combined.degree = plus.size() + minus.size() + vcount - 1;
  out.plus_range = {0, plus.size()};
  out.minus_range = {plus.size(), plus.size() + minus.size()};
  out.natural_range = {plus.size() + minus.size(), out.combined.degree};

  for (std::uint32_t a : axes) {
    auto t = [&](std::uint32_t v) { return form_b(v, a) ? v ^ a : v; };  // an involution
    std::vector<Point> ip(plus.size()), im(minus.size()), iv(vcount - 1);
    auto image_form = [&](std::uint32_t qm) {
      std::uint32_t out_mask = 0;
      for (unsigned i = 0; i < dim; ++i)
        if (form_q(qm, t(1u << i))) out_mask |= 1u << i;
      return out_mask;
    };
    for (std::uint32_t i = 0; i < plus.size(); ++i) ip[i] = static_cast<Point>(pos[image_form(plus[i])]);
    for (std::uint32_t i = 0; i < minus.size(); ++i) im[i] = static_cast<Point>(pos[image_form(minus[i])]);
    for (std::uint32_t v = 1; v < vcount; ++v) iv[v - 1] = static_cast<Point>(t(v) - 1);
    std::vector<Point> ic;
    for (auto x : ip) ic.push_back(x);
    for (auto x : im) ic.push_back(static_cast<Point>(x + out.minus_range.begin));
    for (auto x : iv) ic.push_back(static_cast<Point>(x + out.natural_range.begin));
    out.plus.generators.push_back(Permutation::from_images(std::move(ip)));
    out.minus.generators.push_back(Permutation::from_images(std::move(im)));
    out.natural.generators.push_back(Permutation::from_images(std::move(iv)));
    out.combined.generators.push_back(Permutation::from_images(std::move(ic)));
  }
  return out;
}

GeneratorSet psu3_generators(std::uint32_t q) {
  MatrixGroupSpec{Family::psu3, 3, q, ActionKind::isotropic_points}.validate();
  FiniteField f(q * q);
  auto bar = [&](FiniteField::Element x) { return f.pow(x, q); };
  auto preserves = [&](const Mat& g) {
    for (unsigned i = 0; i < 3; ++i)
      for (unsigned j = 0; j < 3; ++j) {
        FiniteField::Element s = 0;
        for (unsigned k = 0; k < 3; ++k) s = f.add(s, f.mul(g[i * 3 + k], bar(g[j * 3 + 2 - k])));
        if (s != (i + j == 2 ? 1u : 0u)) return false;
      }
    return true;
  };
  const std::uint32_t Q = q * q;
  // Unitriangular subgroups: entries (0,1), (0,2), (1,2) resp. their transposes.
  auto subgroup = [&](bool upper) {
    std::vector<Mat> elems;
    for (std::uint32_t x = 0; x < Q; ++x)
      for (std::uint32_t y = 0; y < Q; ++y)
        for (std::uint32_t z = 0; z < Q; ++z) {
          Mat m = identity_matrix(3);
          if (upper) {
            m[1] = x;
            m[2] = y;
            m[5] = z;
          } else {
            m[3] = x;
            m[6] = y;
            m[7] = z;
          }
          if (preserves(m)) elems.push_back(m);
        }
    return elems;
  };
  // Greedy generating subset: add an element whenever it is not yet generated.
  auto small_generating_set = [&](const std::vector<Mat>& elems) {
    std::vector<Mat> gens;
    std::set<Mat> closure{identity_matrix(3)};
    for (const auto& m : elems) {
      if (closure.count(m)) continue;
      gens.push_back(m);
      std::vector<Mat> queue(closure.begin(), closure.end());
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (const auto& g : gens) {
          Mat prod = mat_mul(f, queue[i], g, 3);
          if (closure.insert(prod).second) queue.push_back(prod);
        }
    }
    return gens;
  };
  std::vector<Mat> gens = small_generating_set(subgroup(true));
  for (auto& m : small_generating_set(subgroup(false))) gens.push_back(m);

  ProjectiveIndex all(3, Q);
  std::vector<std::uint64_t> isotropic;
  std::unordered_map<std::uint64_t, std::uint32_t> where;
  for (std::uint64_t a = 0; a < all.count(); ++a) {
    Vec v = all.point(a);
    FiniteField::Element h = f.add(f.add(f.mul(v[0], bar(v[2])), f.mul(v[1], bar(v[1]))), f.mul(v[2], bar(v[0])));
    if (h == 0) {
      where[a] = static_cast<std::uint32_t>(isotropic.size());
      isotropic.push_back(a);
    }
  }
  GeneratorSet out;
  out.degree = isotropic.size();
  for (const auto& g : gens) {
    std::vector<Point> img(isotropic.size());
    for (std::size_t i = 0; i < isotropic.size(); ++i)
      img[i] = static_cast<Point>(where.at(all.index(normalise(f, row_times(f, all.point(isotropic[i]), g, 3)))));
    out.generators.push_back(Permutation::from_images(std::move(img)));
  }
  return out;
}

GeneratorSet build_generators(const MatrixGroupSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::psl:
      return psl_generators(spec.n, spec.q);
    case Family::pgl:
      return pgl_generators(spec.n, spec.q);
    case Family::sp2n2: {
      auto acts = sp2n2_actions(spec.n);
      if (spec.action == ActionKind::quadratic_forms_plus) return acts.plus;
      if (spec.action == ActionKind::quadratic_forms_minus) return acts.minus;
      return acts.natural;
    }
    case Family::psu3:
      return psu3_generators(spec.q);
    case Family::file:
      break;
  }
  throw std::invalid_argument("file groups are loaded with load_group_file");
}

GeneratorSet symmetric_generators(std::size_t n) {
  GeneratorSet out;
  out.degree = n;
  if (n < 2) return out;
  std::vector<Point> cyc(n), tr(n);
  std::iota(tr.begin(), tr.end(), Point{0});
  std::swap(tr[0], tr[1]);
  for (std::size_t a = 0; a < n; ++a) cyc[a] = static_cast<Point>((a + 1) % n);
  out.generators.push_back(Permutation::from_images(tr));
  out.generators.push_back(Permutation::from_images(cyc));
  return out;
}

GeneratorSet alternating_generators(std::size_t n) {
  GeneratorSet out;
  out.degree = n;
  // 3-cycles (0,1,k) generate Alt(n).
  for (std::size_t k = 2; k < n; ++k) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    img[0] = 1;
    img[1] = static_cast<Point>(k);
    img[k] = 0;
    out.generators.push_back(Permutation::from_images(img));
  }
  return out;
}

}  // namespace ekr
