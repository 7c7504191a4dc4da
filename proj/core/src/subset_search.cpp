#include "ekr/subset_search.hpp"

#include <algorithm>
#include <stdexcept>

#include "ekr/bounds.hpp"
#include "ekr/spectrum.hpp"

namespace ekr {

std::vector<WeightUnit> inverse_pair_units(const std::vector<std::size_t>& derangement_classes,
                                           const std::function<std::size_t(std::size_t)>& inverse_of) {
  std::vector<std::size_t> sorted = derangement_classes;
  std::sort(sorted.begin(), sorted.end());
  std::vector<char> used(sorted.empty() ? 0 : sorted.back() + 1, 0);
  std::vector<WeightUnit> units;
  for (std::size_t c : sorted) {
    if (used[c]) continue;
    WeightUnit u;
    u.members.push_back(c);
    used[c] = 1;
    std::size_t inv = inverse_of(c);
    if (inv != c) {
      if (!std::binary_search(sorted.begin(), sorted.end(), inv))
        throw std::logic_error("inverse of a derangement class is not a derangement class");
      u.members.push_back(inv);
      used[inv] = 1;
    }
    units.push_back(std::move(u));
  }
  return units;
}

namespace {

// Advances `idx` to the next k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

SubsetSearchResult weight_subset_search(const std::vector<WeightUnit>& units, const Rational& target,
                                        const BoundOracle& oracle) {
  if (units.size() > 20) throw std::invalid_argument("subset search supports at most 20 weight units");
  Rational goal = target;
  goal.canonicalize();
  SubsetSearchResult best;
  bool have_best = false;
  std::size_t evaluated = 0;
  const std::size_t n = units.size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    do {
      std::vector<std::size_t> support;
      for (std::size_t i : idx) support.insert(support.end(), units[i].members.begin(), units[i].members.end());
      std::sort(support.begin(), support.end());
      ++evaluated;
      auto bound = oracle(support);
      if (!bound) continue;
      bool certified = bound->is_point() && bound->lo == goal;
      if (certified) {
        return {support, *bound, true, evaluated};
      }
      if (!have_best || bound->hi < best.bound.lo || (bound->lo < best.bound.lo && !(bound->hi > best.bound.hi))) {
        best.support = support;
        best.bound = *bound;
        have_best = true;
      }
    } while (next_combination(idx, n));
  }
  best.evaluated = evaluated;
  if (!have_best) throw std::invalid_argument("no weighting produced a usable spectrum");
  return best;
}

BoundOracle enumerated_bound_oracle(const ClassAlgebra& algebra, const ActionStats& stats) {
  return [&algebra, &stats](const std::vector<std::size_t>& support) -> std::optional<Enclosure> {
    std::vector<ClassId> ids(support.begin(), support.end());
    WeightVector w = WeightVector::indicator(stats, ids);
    Spectrum s = spectrum(algebra, stats, w);
    try {
      return weighted_ratio_bound(s);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  };
}

}  // namespace ekr
