#include "ekr/group_table.hpp"

#include <cstring>
#include <string>

#include "ekr/numeric.hpp"

namespace ekr {

namespace {
constexpr ElementId kEmpty = 0xffffffffu;
}

EnumerationLimitError::EnumerationLimitError(std::size_t cap)
    : std::runtime_error("group too large to enumerate (more than " + std::to_string(cap) +
                         " elements); supply a character-table file (--chartab) instead"),
      cap_(cap) {}

std::uint64_t GroupTable::hash(std::span<const Point> images) const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Point p : images) {
    h ^= p;
    h *= 0x100000001b3ull;
  }
  return h ^ (h >> 29);
}

void GroupTable::insert_index(ElementId id) {
  std::size_t mask = slots_.size() - 1;
  std::size_t s = hash(element(id)) & mask;
  while (slots_[s] != kEmpty) s = (s + 1) & mask;
  slots_[s] = id;
}

void GroupTable::grow_index() {
  std::size_t cap = slots_.empty() ? 1024 : slots_.size() * 2;
  slots_.assign(cap, kEmpty);
  for (ElementId id = 0; id < order_; ++id) insert_index(id);
}

std::optional<ElementId> GroupTable::find(std::span<const Point> images) const {
  if (images.size() != degree_ || slots_.empty()) return std::nullopt;
  std::size_t mask = slots_.size() - 1;
  std::size_t s = hash(images) & mask;
  while (slots_[s] != kEmpty) {
    auto e = element(slots_[s]);
    if (std::memcmp(e.data(), images.data(), degree_ * sizeof(Point)) == 0) return slots_[s];
    s = (s + 1) & mask;
  }
  return std::nullopt;
}

GroupTable GroupTable::enumerate(const GeneratorSet& gens, std::size_t cap) {
  GroupTable t;
  t.degree_ = gens.degree;
  for (const auto& g : gens.generators) {
    if (g.degree() != gens.degree) throw DataError("generator degree does not match declared degree");
    if (!g.is_identity()) t.generators_.push_back(g);
  }
  const std::size_t n = t.degree_;
  Permutation id = Permutation::identity(n);
  t.data_.assign(id.images().begin(), id.images().end());
  t.order_ = 1;
  t.grow_index();
  std::vector<Point> buf(n);
  for (std::size_t cur = 0; cur < t.order_; ++cur) {
    for (const auto& s : t.generators_) {
      const Point* e = t.data_.data() + cur * n;
      for (std::size_t a = 0; a < n; ++a) buf[a] = s[e[a]];
      if (t.find(buf)) continue;
      if (t.order_ >= cap) throw EnumerationLimitError(cap);
      t.data_.insert(t.data_.end(), buf.begin(), buf.end());
      ++t.order_;
      if (t.order_ * 2 > t.slots_.size())
        t.grow_index();
      else
        t.insert_index(static_cast<ElementId>(t.order_ - 1));
    }
  }
  t.data_.shrink_to_fit();
  t.inverse_.resize(t.order_);
  for (ElementId g = 0; g < t.order_; ++g) {
    const Point* e = t.data_.data() + static_cast<std::size_t>(g) * n;
    for (std::size_t a = 0; a < n; ++a) buf[e[a]] = static_cast<Point>(a);
    t.inverse_[g] = *t.find(buf);
  }
  return t;
}

Permutation GroupTable::permutation(ElementId id) const {
  auto e = element(id);
  return Permutation::from_images(std::vector<Point>(e.begin(), e.end()));
}

ElementId GroupTable::multiply(ElementId g, ElementId h) const {
  std::vector<Point> buf(degree_);
  auto eg = element(g);
  auto eh = element(h);
  for (std::size_t a = 0; a < degree_; ++a) buf[a] = eh[eg[a]];
  return *find(buf);
}

std::size_t GroupTable::fixed_points(ElementId id, PointRange range) const {
  auto e = element(id);
  std::size_t n = 0;
  for (std::size_t a = range.begin; a < range.end; ++a) n += e[a] == a;
  return n;
}

bool is_k_transitive(const GroupTable& g, int k) { return is_k_transitive(g, k, g.full_range()); }

bool is_k_transitive(const GroupTable& g, int k, PointRange range) {
  if (k != 1 && k != 2) throw std::invalid_argument("is_k_transitive supports k = 1 or 2");
  const std::size_t m = range.size();
  if (m < static_cast<std::size_t>(k)) return false;
  for (const auto& s : g.generators())
    for (std::size_t a = range.begin; a < range.end; ++a)
      if (!range.contains(s[a])) throw std::invalid_argument("generators do not preserve the point range");
  auto local = [&](const Permutation& s, std::size_t a) { return s[a + range.begin] - range.begin; };
  if (k == 1) {
    std::vector<bool> seen(m, false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& s : g.generators()) {
        std::size_t b = local(s, queue[i]);
        if (!seen[b]) {
          seen[b] = true;
          queue.push_back(b);
        }
      }
    return queue.size() == m;
  }
  std::vector<bool> seen(m * m, false);
  std::vector<std::size_t> queue{1};
  seen[1] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::size_t a = queue[i] / m, b = queue[i] % m;
    for (const auto& s : g.generators()) {
      std::size_t c = local(s, a) * m + local(s, b);
      if (!seen[c]) {
        seen[c] = true;
        queue.push_back(c);
      }
    }
  }
  return queue.size() == m * (m - 1);
}

std::vector<ElementId> point_stabilizer(const GroupTable& g, std::size_t alpha) { return coset_mapping(g, alpha, alpha); }

std::vector<ElementId> coset_mapping(const GroupTable& g, std::size_t alpha, std::size_t beta) {
  if (alpha >= g.degree() || beta >= g.degree()) throw std::out_of_range("point out of range");
  std::vector<ElementId> out;
  for (ElementId x = 0; x < g.order(); ++x)
    if (g.image(x, alpha) == beta) out.push_back(x);
  return out;
}

}  // namespace ekr
