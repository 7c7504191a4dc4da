#include "ekr/module_v.hpp"

#include <stdexcept>

namespace ekr {

std::size_t integer_rank(IntMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Integer& p = m[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Integer f = m[r][c];
      for (std::size_t k = c + 1; k < cols; ++k) {
        m[r][k] = (p * m[r][k] - f * m[rank][k]);
        mpz_divexact(m[r][k].get_mpz_t(), m[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      m[r][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

ModuleV::ModuleV(const GroupTable& g, PointRange range, std::size_t max_order) : g_(g), range_(range) {
  if (g.order() > max_order) throw std::invalid_argument("module V rank is computed for |G| <= " + std::to_string(max_order));
  const std::size_t n = range.size();
  std::vector<std::vector<long>> gram(n * n, std::vector<long>(n * n, 0));
  std::vector<std::size_t> idx(n);
  for (ElementId x = 0; x < g.order(); ++x) {
    for (std::size_t a = 0; a < n; ++a) idx[a] = a * n + (g.image(x, range.begin + a) - range.begin);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) ++gram[idx[a]][idx[b]];
  }
  gram_.assign(n * n, std::vector<Integer>(n * n));
  for (std::size_t i = 0; i < n * n; ++i)
    for (std::size_t j = 0; j < n * n; ++j) gram_[i][j] = gram[i][j];
  rank_ = integer_rank(gram_);
}

bool ModuleV::contains(const std::vector<ElementId>& s) const {
  const std::size_t n = degree();
  std::vector<long> inner(n * n, 0);
  for (ElementId x : s)
    for (std::size_t a = 0; a < n; ++a) ++inner[a * n + (g_.image(x, range_.begin + a) - range_.begin)];
  IntMatrix aug = gram_;
  for (std::size_t i = 0; i < n * n; ++i) aug[i].push_back(inner[i]);
  std::vector<Integer> last(n * n + 1);
  for (std::size_t i = 0; i < n * n; ++i) last[i] = inner[i];
  last[n * n] = static_cast<unsigned long>(s.size());
  aug.push_back(std::move(last));
  return integer_rank(std::move(aug)) == rank_;
}

}  // namespace ekr
