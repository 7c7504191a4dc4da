#include "ekr/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "ekr/module_v.hpp"

namespace ekr {

std::string to_string(CocliqueClass c) {
  switch (c) {
    case CocliqueClass::stabiliser_coset: return "stabiliser-coset";
    case CocliqueClass::in_span_v: return "in-span-V";
    case CocliqueClass::other: return "other";
  }
  return "other";
}

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  std::size_t first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
    return SIZE_MAX;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= o.w_[k];
    return r;
  }
  void and_not(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
  }

 private:
  std::vector<std::uint64_t> w_;
};

// Maximum clique by branch and bound with a greedy colouring bound.
class CliqueEngine {
 public:
  CliqueEngine(const std::vector<Bits>& adj, std::uint64_t max_nodes, std::uint64_t& nodes)
      : adj_(adj), max_nodes_(max_nodes), nodes_(nodes) {}

  // Searches P for a clique larger than `floor` vertices (on top of `base`);
  // stops early once `stop_at` vertices are reached when stop_at > 0.
  void run(const Bits& p, std::vector<std::uint32_t> base, std::size_t floor, std::size_t stop_at) {
    cur_ = std::move(base);
    floor_ = floor;
    stop_at_ = stop_at;
    expand(p, 0);
  }

  bool aborted() const { return aborted_; }
  bool stopped() const { return stopped_; }
  const std::vector<std::uint32_t>& best() const { return best_; }
  std::size_t root_bound() const { return root_bound_; }

 private:
  void colour_sort(const Bits& p, std::vector<std::uint32_t>& order, std::vector<std::uint32_t>& colour) const {
    Bits q = p;
    std::uint32_t k = 0;
    while (q.any()) {
      ++k;
      Bits qk = q;
      while (qk.any()) {
        std::size_t v = qk.first();
        qk.reset(v);
        q.reset(v);
        qk.and_not(adj_[v]);
        order.push_back(static_cast<std::uint32_t>(v));
        colour.push_back(k);
      }
    }
  }

  void expand(Bits p, int depth) {
    if (++nodes_ > max_nodes_) {
      aborted_ = true;
      return;
    }
    std::vector<std::uint32_t> order, colour;
    colour_sort(p, order, colour);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (depth == 0) root_bound_ = cur_.size() + colour[i];
      if (cur_.size() + colour[i] <= floor_) return;
      std::uint32_t v = order[i];
      cur_.push_back(v);
      Bits np = p & adj_[v];
      if (np.any()) {
        expand(np, depth + 1);
      } else if (cur_.size() > floor_) {
        best_ = cur_;
        floor_ = cur_.size();
        if (stop_at_ && cur_.size() >= stop_at_) stopped_ = true;
      }
      cur_.pop_back();
      if (aborted_ || stopped_) return;
      p.reset(v);
    }
    if (depth == 0) root_bound_ = 0;
  }

  const std::vector<Bits>& adj_;
  std::uint64_t max_nodes_;
  std::uint64_t& nodes_;
  std::vector<std::uint32_t> cur_, best_;
  std::size_t floor_ = 0, stop_at_ = 0, root_bound_ = 0;
  bool aborted_ = false, stopped_ = false;
};

bool is_derangement(const GroupTable& g, PointRange range, ElementId x) { return g.fixed_points(x, range) == 0; }

std::uint64_t element_order(const GroupTable& g, ElementId x) {
  std::uint64_t k = 1;
  for (ElementId y = x; y != 0; y = g.multiply(y, x)) ++k;
  return k;
}

// Subgroup generated by `gens`, or nothing once it exceeds `cap` elements.
std::optional<std::vector<ElementId>> closure(const GroupTable& g, const std::vector<ElementId>& gens, std::size_t cap) {
  std::vector<ElementId> elems{0};
  std::unordered_set<ElementId> seen{0};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (ElementId s : gens) {
      ElementId z = g.multiply(elems[i], s);
      if (seen.insert(z).second) {
        elems.push_back(z);
        if (elems.size() > cap) return std::nullopt;
      }
    }
  }
  return elems;
}

}  // namespace

bool intersecting_pair(const GroupTable& g, PointRange range, ElementId x, ElementId y) {
  for (std::size_t a = range.begin; a < range.end; ++a)
    if (g.image(x, a) == g.image(y, a)) return true;
  return false;
}

bool is_intersecting(const GroupTable& g, PointRange range, const std::vector<ElementId>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!intersecting_pair(g, range, s[i], s[j])) return false;
  return true;
}

MaxCocliqueResult max_coclique_exact(const GroupTable& g, const ActionStats& stats, const SearchBudget& budget) {
  const std::size_t n = g.order();
  if (n > budget.max_order)
    throw std::invalid_argument("exact coclique search is limited to |G| <= " + std::to_string(budget.max_order));
  const PointRange range = stats.range;
  std::vector<Bits> adj(n, Bits(n));
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = x + 1; y < n; ++y)
      if (intersecting_pair(g, range, x, y)) {
        adj[x].set(y);
        adj[y].set(x);
      }
  Bits all(n);
  for (std::size_t v = 0; v < n; ++v) all.set(v);

  MaxCocliqueResult out;
  std::vector<std::uint32_t> incumbent;
  for (ElementId x : point_stabilizer(g, range.begin)) incumbent.push_back(x);

  CliqueEngine engine(adj, budget.max_nodes, out.nodes);
  engine.run(all, {}, incumbent.size(), 0);
  if (!engine.best().empty()) incumbent = engine.best();
  std::sort(incumbent.begin(), incumbent.end());
  out.witness.elements.assign(incumbent.begin(), incumbent.end());
  if (engine.aborted()) {
    out.upper_bound = std::max(incumbent.size(), engine.root_bound());
    return out;
  }
  out.complete = true;
  out.upper_bound = incumbent.size();

  // Lexicographically least set of the optimal size: fix vertices greedily
  // in id order while a completion of the optimal size still exists.
  const std::size_t omega = incumbent.size();
  std::vector<std::uint32_t> chosen;
  Bits p = all;
  for (std::size_t v = 0; v < n && chosen.size() < omega; ++v) {
    if (!p.test(v)) continue;
    Bits np = p & adj[v];
    const std::size_t need = omega - chosen.size() - 1;
    bool ok = need == 0;
    if (!ok) {
      CliqueEngine probe(adj, budget.max_nodes, out.nodes);
      probe.run(np, {}, need - 1, need);
      if (probe.aborted()) return out;  // keep the first optimum found
      ok = probe.stopped();
    }
    if (ok) {
      chosen.push_back(static_cast<std::uint32_t>(v));
      p = np;
    } else {
      p.reset(v);
    }
  }
  if (chosen.size() == omega) out.witness.elements.assign(chosen.begin(), chosen.end());
  return out;
}

CliqueSearchResult find_sharply_transitive_clique(const GroupTable& g, const ActionStats& stats, const SearchBudget& budget) {
  const PointRange range = stats.range;
  const std::size_t deg = range.size();
  CliqueSearchResult out;
  std::vector<ElementId> candidates;
  for (ElementId x = 1; x < g.order(); ++x)
    if (is_derangement(g, range, x) && deg % element_order(g, x) == 0) candidates.push_back(x);

  auto regular = [&](const std::vector<ElementId>& gens) -> bool {
    ++out.nodes;
    auto h = closure(g, gens, deg);
    if (!h || h->size() != deg) return false;
    for (ElementId x : *h)
      if (x != 0 && !is_derangement(g, range, x)) return false;
    std::sort(h->begin(), h->end());
    out.clique = *h;
    out.from_subgroup = true;
    out.complete = true;
    return true;
  };
  for (ElementId x : candidates)
    if (regular({x})) return out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (out.nodes >= budget.max_nodes) return out;
      if (regular({candidates[i], candidates[j]})) return out;
    }

  // Cliques through the identity: the other members are derangements that
  // pairwise differ by derangements.
  if (g.order() > budget.max_order) return out;
  std::vector<ElementId> ders;
  for (ElementId x = 1; x < g.order(); ++x)
    if (is_derangement(g, range, x)) ders.push_back(x);
  const std::size_t m = ders.size();
  std::vector<Bits> adj(m, Bits(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!intersecting_pair(g, range, ders[i], ders[j])) {
        adj[i].set(j);
        adj[j].set(i);
      }
  Bits all(m);
  for (std::size_t v = 0; v < m; ++v) all.set(v);
  if (deg < 2) return out;
  CliqueEngine engine(adj, budget.max_nodes, out.nodes);
  engine.run(all, {}, deg - 2, deg - 1);
  if (engine.stopped()) {
    std::vector<ElementId> c{0};
    for (auto v : engine.best()) c.push_back(ders[v]);
    std::sort(c.begin(), c.end());
    out.clique = c;
  }
  out.complete = !engine.aborted();
  return out;
}

CocliqueWitness classify_coclique(const GroupTable& g, PointRange range, std::vector<ElementId> s, const ModuleV* v) {
  if (!is_intersecting(g, range, s)) throw std::invalid_argument("set is not intersecting");
  std::sort(s.begin(), s.end());
  CocliqueWitness w;
  w.elements = s;
  if (!s.empty()) {
    for (std::size_t a = range.begin; a < range.end; ++a) {
      const std::size_t b = g.image(s[0], a);
      bool all = std::all_of(s.begin(), s.end(), [&](ElementId x) { return g.image(x, a) == b; });
      if (all && coset_mapping(g, a, b).size() == s.size()) {
        w.classification = CocliqueClass::stabiliser_coset;
        w.coset = std::make_pair(a - range.begin, b - range.begin);
        return w;
      }
    }
  }
  if (v && v->contains(s)) w.classification = CocliqueClass::in_span_v;
  return w;
}

std::size_t intersection_size(const std::vector<ElementId>& c, const std::vector<ElementId>& s) {
  std::unordered_set<ElementId> in(s.begin(), s.end());
  return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [&](ElementId x) { return in.count(x) > 0; }));
}

}  // namespace ekr
