#include "ekr/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ekr {

namespace {

std::string letters(std::size_t i) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('A' + i % 26));
    i /= 26;
  } while (i-- > 0);
  return s;
}

}  // namespace

ConjugacyClassTable::ConjugacyClassTable(const GroupTable& g) : order_(g.order()) {
  constexpr ClassId kUnset = 0xffffffffu;
  const std::size_t n = g.degree();
  std::vector<ClassId> raw(g.order(), kUnset);
  struct Raw {
    ElementId rep;
    std::uint64_t size;
  };
  std::vector<Raw> found;
  std::vector<Point> buf(n);
  std::vector<ElementId> queue;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (raw[x] != kUnset) continue;
    ClassId c = static_cast<ClassId>(found.size());
    raw[x] = c;
    queue.assign(1, x);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      auto e = g.element(queue[i]);
      for (const auto& s : g.generators()) {
        // s^-1 y s maps s(a) to s(y(a)).
        for (std::size_t a = 0; a < n; ++a) buf[s[a]] = s[e[a]];
        ElementId y = *g.find(buf);
        if (raw[y] == kUnset) {
          raw[y] = c;
          queue.push_back(y);
        }
      }
    }
    found.push_back({x, queue.size()});
  }

  std::vector<ClassId> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](ClassId a, ClassId b) {
    if (found[a].size != found[b].size) return found[a].size < found[b].size;
    return found[a].rep < found[b].rep;
  });
  std::vector<ClassId> rank(found.size());
  for (ClassId i = 0; i < perm.size(); ++i) rank[perm[i]] = i;

  label_.resize(g.order());
  for (ElementId x = 0; x < g.order(); ++x) label_[x] = rank[raw[x]];

  offset_.assign(found.size() + 1, 0);
  for (ElementId x = 0; x < g.order(); ++x) ++offset_[label_[x] + 1];
  for (std::size_t c = 0; c < found.size(); ++c) offset_[c + 1] += offset_[c];
  members_.resize(g.order());
  std::vector<std::size_t> fill(offset_.begin(), offset_.end() - 1);
  for (ElementId x = 0; x < g.order(); ++x) members_[fill[label_[x]]++] = x;

  classes_.resize(found.size());
  std::map<std::uint64_t, std::size_t> per_order;
  for (ClassId i = 0; i < perm.size(); ++i) {
    const Raw& r = found[perm[i]];
    ConjugacyClass& c = classes_[i];
    c.representative = r.rep;
    c.size = r.size;
    c.element_order = g.permutation(r.rep).order();
    c.inverse = label_[g.inverse(r.rep)];
  }
  // Names: element order followed by letters in class order.
  for (auto& c : classes_) c.name = std::to_string(c.element_order) + letters(per_order[c.element_order]++);
}

ClassId ConjugacyClassTable::by_name(const std::string& name) const {
  for (ClassId i = 0; i < classes_.size(); ++i)
    if (classes_[i].name == name) return i;
  throw std::out_of_range("no conjugacy class named " + name);
}

}  // namespace ekr
