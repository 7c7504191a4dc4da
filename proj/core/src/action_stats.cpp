#include "ekr/action_stats.hpp"

namespace ekr {

ActionStats action_stats(const GroupTable& g, const ConjugacyClassTable& classes) {
  return action_stats(g, classes, g.full_range());
}

ActionStats action_stats(const GroupTable& g, const ConjugacyClassTable& classes, PointRange range) {
  ActionStats s;
  s.range = range;
  s.degree = range.size();
  s.order = g.order();
  if (s.degree > 0 && is_k_transitive(g, 1, range)) s.transitivity = (s.degree >= 2 && is_k_transitive(g, 2, range)) ? 2 : 1;
  s.fixed_points.resize(classes.size());
  s.psi.resize(classes.size());
  for (ClassId c = 0; c < classes.size(); ++c) {
    long fix = static_cast<long>(g.fixed_points(classes[c].representative, range));
    s.fixed_points[c] = fix;
    s.psi[c] = fix - 1;
    if (fix == 0) {
      s.derangement_classes.push_back(c);
      s.derangements += classes[c].size;
    }
  }
  return s;
}

bool derangement_fraction_check(const ActionStats& stats) { return stats.order >= 2 * stats.derangements; }

}  // namespace ekr
