#include "ekr/class_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace ekr {

WeightVector WeightVector::unit(const ActionStats& stats) {
  return {stats.derangement_classes, std::vector<Rational>(stats.derangement_classes.size(), Rational(1))};
}

WeightVector WeightVector::zero(const ActionStats& stats) {
  return {stats.derangement_classes, std::vector<Rational>(stats.derangement_classes.size(), Rational(0))};
}

WeightVector WeightVector::indicator(const ActionStats& stats, const std::vector<ClassId>& support) {
  WeightVector w = zero(stats);
  for (ClassId c : support) {
    auto it = std::find(w.classes.begin(), w.classes.end(), c);
    if (it == w.classes.end()) throw std::invalid_argument("weight placed on a class that is not a derangement class");
    w.values[static_cast<std::size_t>(it - w.classes.begin())] = 1;
  }
  return w;
}

WeightVector WeightVector::from_values(const ActionStats& stats, std::vector<Rational> values) {
  if (values.size() != stats.derangement_classes.size())
    throw std::invalid_argument("weight vector has " + std::to_string(values.size()) + " entries, expected " +
                                std::to_string(stats.derangement_classes.size()));
  for (const auto& v : values)
    if (v < 0) throw std::invalid_argument("weights must be nonnegative");
  return {stats.derangement_classes, std::move(values)};
}

bool WeightVector::all_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v == 0; });
}

Rational WeightVector::weight_of(ClassId c) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == c) return values[i];
  return 0;
}

const IntMatrix& ClassAlgebra::multiplication_matrix(ClassId k) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(k);
  if (it != cache_.end()) return *it->second;
  const std::size_t r = classes_.size();
  const std::size_t n = g_.degree();
  auto m = std::make_unique<IntMatrix>(r, std::vector<Integer>(r, Integer(0)));
  std::vector<std::vector<std::uint64_t>> counts(r, std::vector<std::uint64_t>(r, 0));
  std::vector<Point> buf(n);
  // x ranges over C_k, so y = x^-1 ranges over the inverse class.
  auto ys = classes_.members(classes_[k].inverse);
  for (ClassId i = 0; i < r; ++i) {
    auto z = g_.element(classes_[i].representative);
    for (ElementId y : ys) {
      auto ey = g_.element(y);
      for (std::size_t a = 0; a < n; ++a) buf[a] = z[ey[a]];
      ++counts[i][classes_.class_of(*g_.find(buf))];
    }
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) (*m)[i][j] = static_cast<unsigned long>(counts[i][j]);
  auto [pos, inserted] = cache_.emplace(k, std::move(m));
  return *pos->second;
}

CollapsedMatrix collapsed_matrix(const ClassAlgebra& algebra, const ActionStats& stats, const WeightVector& weights) {
  if (weights.classes != stats.derangement_classes || weights.values.size() != weights.classes.size())
    throw std::invalid_argument("weight vector does not match the derangement classes of this action");
  const auto& cls = algebra.classes();
  for (std::size_t i = 0; i < weights.classes.size(); ++i) {
    if (weights.values[i] < 0) throw std::invalid_argument("weights must be nonnegative");
    ClassId inv = cls[weights.classes[i]].inverse;
    if (weights.weight_of(inv) != weights.values[i])
      throw std::invalid_argument("weights must agree on class " + cls[weights.classes[i]].name + " and its inverse class " +
                                  cls[inv].name);
  }
  const std::size_t r = algebra.dimension();
  CollapsedMatrix out;
  out.scale = 1;
  for (const auto& v : weights.values) out.scale = lcm(out.scale, v.get_den());
  out.integral.assign(r, std::vector<Integer>(r, Integer(0)));
  for (std::size_t t = 0; t < weights.classes.size(); ++t) {
    if (weights.values[t] == 0) continue;
    Rational scaled = weights.values[t] * out.scale;
    Integer w = scaled.get_num();
    const IntMatrix& nk = algebra.multiplication_matrix(weights.classes[t]);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (nk[i][j] != 0) out.integral[i][j] += w * nk[i][j];
  }
  out.entries.assign(r, std::vector<Rational>(r, Rational(0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      out.entries[i][j] = Rational(out.integral[i][j], out.scale);
      out.entries[i][j].canonicalize();
    }
  return out;
}

}  // namespace ekr
