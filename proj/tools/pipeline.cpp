#include "pipeline.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ekr/action_stats.hpp"
#include "ekr/chartab.hpp"
#include "ekr/class_algebra.hpp"
#include "ekr/matrix_groups.hpp"
#include "ekr/module_v.hpp"
#include "ekr/psu3.hpp"
#include "ekr/subset_search.hpp"
#include "ekr/symplectic.hpp"

#ifndef EKR_VERSION
#define EKR_VERSION "0.0.0"
#endif

namespace ekr::cli {

void RunConfig::validate() const {
  int selectors = !family.empty() + !file.empty() + !chartab.empty();
  if (selectors != 1) throw std::invalid_argument("give exactly one of --family, --file, --chartab");
  if (!family.empty() && family == "sp" && action != "plus" && action != "minus")
    throw std::invalid_argument("--action must be plus or minus for --family sp");
}

Json RunConfig::echo() const {
  Json j;
  if (!family.empty()) {
    j["family"] = family;
    j["n"] = n;
    j["q"] = q;
    if (family == "sp") j["action"] = action;
  }
  if (!file.empty()) j["file"] = file;
  if (!chartab.empty()) j["chartab"] = chartab;
  j["weights"] = weights;
  j["cap"] = cap;
  j["budget"] = budget;
  j["max_order"] = max_order;
  j["clique"] = clique;
  return j;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, sep);)
    if (!tok.empty()) out.push_back(tok);
  return out;
}

struct LoadedGroup {
  std::string name;
  GeneratorSet gens;
  bool sp = false;
  int epsilon = 1;
  bool psu3 = false;
};

LoadedGroup load_group(const RunConfig& c) {
  LoadedGroup out;
  if (!c.file.empty()) {
    out.name = c.file;
    out.gens = load_group_file(c.file);
    return out;
  }
  if (c.family == "sym" || c.family == "alt") {
    out.name = (c.family == "sym" ? "S" : "A") + std::to_string(c.n);
    out.gens = c.family == "sym" ? symmetric_generators(c.n) : alternating_generators(c.n);
    return out;
  }
  MatrixGroupSpec spec;
  spec.n = c.n;
  spec.q = c.q;
  if (c.family == "psl") {
    spec.family = Family::psl;
  } else if (c.family == "pgl") {
    spec.family = Family::pgl;
  } else if (c.family == "sp") {
    spec.family = Family::sp2n2;
    spec.action = c.action == "plus" ? ActionKind::quadratic_forms_plus : ActionKind::quadratic_forms_minus;
    out.sp = true;
    out.epsilon = c.action == "plus" ? 1 : -1;
  } else if (c.family == "psu3") {
    spec.family = Family::psu3;
    spec.action = ActionKind::isotropic_points;
    out.psu3 = true;
  } else {
    throw std::invalid_argument("unknown family '" + c.family + "' (psl, pgl, sp, psu3, sym, alt)");
  }
  out.name = spec.label();
  out.gens = build_generators(spec);
  return out;
}

GroupTable enumerate_or_explain(const GeneratorSet& gens, std::size_t cap) {
  try {
    return GroupTable::enumerate(gens, cap);
  } catch (const EnumerationLimitError& e) {
    throw std::runtime_error("group order exceeds the enumeration cap of " + std::to_string(e.cap()) +
                             " elements; raise --cap, or analyze the group from a character table with --chartab");
  }
}

// Explicit weights "C1,C2" (weight 1) or "C1=a,C2=b".
std::vector<std::pair<std::string, Rational>> parse_weight_list(const std::string& spec) {
  std::vector<std::pair<std::string, Rational>> out;
  for (const auto& tok : split(spec, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) out.emplace_back(tok, Rational(1));
    else out.emplace_back(tok.substr(0, eq), parse_rational(tok.substr(eq + 1)));
  }
  if (out.empty()) throw std::invalid_argument("empty weight list");
  return out;
}

WeightVector enumerated_weights(const RunConfig& c, const LoadedGroup& lg, const GroupTable& g,
                                const ConjugacyClassTable& classes, const ActionStats& stats) {
  if (c.weights == "unit") return WeightVector::unit(stats);
  if (c.weights == "scheme") {
    if (lg.psu3) return psu3_weights(psu3_scheme(c.q), classes, stats);
    if (lg.sp) return sp_weights(g, classes, stats, c.n, lg.epsilon);
    throw std::invalid_argument("--weights scheme applies to --family psu3 and --family sp");
  }
  std::vector<Rational> values(stats.derangement_classes.size(), 0);
  for (const auto& [name, value] : parse_weight_list(c.weights)) {
    ClassId id;
    try {
      id = classes.by_name(name);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("unknown class '" + name + "'");
    }
    bool placed = false;
    for (std::size_t i = 0; i < stats.derangement_classes.size(); ++i)
      if (stats.derangement_classes[i] == id) {
        values[i] = value;
        placed = true;
      }
    if (!placed) throw std::invalid_argument("class '" + name + "' is not a derangement class");
  }
  return WeightVector::from_values(stats, values);
}

Json header(const char* command, const RunConfig& c) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["toolkit_version"] = EKR_VERSION;
  j["command"] = command;
  j["config"] = c.echo();
  return j;
}

Json action_json(const ActionStats& stats, const ConjugacyClassTable& classes) {
  Json names = Json::array();
  for (ClassId c : stats.derangement_classes) names.push_back(classes[c].name);
  return {{"degree", stats.degree},
          {"transitivity", stats.transitivity},
          {"derangements", std::to_string(stats.derangements)},
          {"derangement_fraction_ok", derangement_fraction_check(stats)},
          {"derangement_classes", names}};
}

int exit_for(const BoundReport& r) { return r.verdict == Verdict::inconclusive ? kInconclusive : kCertified; }

void emit(const Json& j, const RunConfig& c, std::ostream& out, const std::string& summary) {
  if (c.report.empty()) {
    out << dump(j);
    return;
  }
  std::ofstream f(c.report);
  if (!f) throw std::runtime_error("cannot write " + c.report);
  f << dump(j);
  out << summary << "\n";
}

int analyze_chartab(const RunConfig& c, std::ostream& out) {
  const auto t = load_chartab(c.chartab);
  Json j = header("analyze", c);
  j["group"] = {{"name", t.group}, {"order", to_string(t.order)}, {"degree", t.degree}, {"source", c.chartab}};
  Json cls = Json::array();
  for (std::size_t i = 0; i < t.classes.size(); ++i)
    cls.push_back({{"name", t.classes[i].name},
                   {"size", to_string(t.classes[i].size)},
                   {"fixed_points", t.classes[i].fixed_points},
                   {"inverse", t.classes[t.inverse_class(i)].name}});
  j["classes"] = cls;

  std::vector<Rational> weights;
  if (c.weights == "unit") {
    weights = chartab_unit_weights(t);
  } else if (c.weights == "search") {
    std::vector<std::size_t> ders = t.derangement_classes();
    auto units = inverse_pair_units(ders, [&t](std::size_t k) { return t.inverse_class(k); });
    Rational target(t.order, static_cast<unsigned long>(t.degree));
    target.canonicalize();
    auto res = weight_subset_search(units, target, chartab_bound_oracle(t));
    weights.assign(t.classes.size(), 0);
    Json support = Json::array();
    for (std::size_t k : res.support) {
      weights[k] = 1;
      support.push_back(t.classes[k].name);
    }
    j["subset_search"] = {{"units", units.size()},
                          {"evaluated", res.evaluated},
                          {"support", support},
                          {"bound", res.bound.is_point() ? Json{{"exact", to_string(res.bound.lo)}} : enclosure_json(res.bound)},
                          {"certified", res.certified}};
  } else if (c.weights == "scheme") {
    throw std::invalid_argument("--weights scheme needs an enumerated family");
  } else {
    weights.assign(t.classes.size(), 0);
    for (const auto& [name, value] : parse_weight_list(c.weights)) weights[t.class_index(name)] = value;
  }
  Json wj = Json::array();
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] != 0) wj.push_back({{"class", t.classes[i].name}, {"value", to_string(weights[i])}});
  j["weights"] = wj;

  const auto eigs = weighted_eigs_from_chartab(t, weights);
  Json ej = Json::array();
  for (const auto& e : eigs) ej.push_back({{"character", e.character}, {"degree", to_string(e.degree)}, {"value", value_json(e.value)}});
  j["eigenvalues"] = ej;
  Json sj = Json::array();
  for (const auto& s : chartab_spectrum(eigs))
    sj.push_back({{"value", value_json(s.value)}, {"multiplicity", to_string(s.multiplicity)}, {"characters", s.characters.size()}});
  j["spectrum"] = sj;
  const auto report = chartab_ekr_verdict(t, weights);
  j["report"] = bound_report_json(report);
  emit(j, c, out, t.group + ": " + to_string(report.verdict));
  return exit_for(report);
}

}  // namespace

int cmd_analyze(const RunConfig& c, std::ostream& out) {
  c.validate();
  if (!c.chartab.empty()) return analyze_chartab(c, out);

  const LoadedGroup lg = load_group(c);
  GroupTable g = enumerate_or_explain(lg.gens, c.cap);
  ConjugacyClassTable classes(g);
  ActionStats stats = action_stats(g, classes);
  if (stats.transitivity == 0) throw DataError(lg.name + " is not transitive; the bounds assume a transitive action");
  if (stats.derangement_classes.empty()) throw DataError(lg.name + " has no derangements");
  ClassAlgebra algebra(g, classes);

  Json j = header("analyze", c);
  j["group"] = {{"name", lg.name}, {"order", std::to_string(g.order())}, {"degree", g.degree()}};
  j["action"] = action_json(stats, classes);
  j["classes"] = classes_json(classes, stats);

  WeightVector w;
  if (c.weights == "search") {
    std::vector<std::size_t> ders(stats.derangement_classes.begin(), stats.derangement_classes.end());
    auto units = inverse_pair_units(ders, [&classes](std::size_t k) { return classes[static_cast<ClassId>(k)].inverse; });
    Rational target(static_cast<unsigned long>(g.order()), static_cast<unsigned long>(stats.degree));
    target.canonicalize();
    auto res = weight_subset_search(units, target, enumerated_bound_oracle(algebra, stats));
    std::vector<ClassId> support(res.support.begin(), res.support.end());
    w = WeightVector::indicator(stats, support);
    Json names = Json::array();
    for (ClassId k : support) names.push_back(classes[k].name);
    j["subset_search"] = {{"units", units.size()},
                          {"evaluated", res.evaluated},
                          {"support", names},
                          {"bound", res.bound.is_point() ? Json{{"exact", to_string(res.bound.lo)}} : enclosure_json(res.bound)},
                          {"certified", res.certified}};
  } else {
    w = enumerated_weights(c, lg, g, classes, stats);
  }
  Json wj = Json::array();
  for (std::size_t i = 0; i < w.classes.size(); ++i)
    if (w.values[i] != 0) wj.push_back({{"class", classes[w.classes[i]].name}, {"value", to_string(w.values[i])}});
  j["weights"] = wj;

  const Spectrum s = spectrum(algebra, stats, w);
  j["spectrum"] = spectrum_json(s);
  j["trace_identity"] = verify_trace_identity(s, algebra, w);

  std::optional<std::vector<ElementId>> clique;
  if (c.clique) {
    SearchBudget budget{c.budget, c.max_order};
    auto cr = find_sharply_transitive_clique(g, stats, budget);
    clique = cr.clique;
    j["clique"] = {{"found", cr.clique.has_value()}, {"from_subgroup", cr.from_subgroup}, {"complete", cr.complete}, {"nodes", cr.nodes}};
  }
  const BoundReport report = ekr_verdict(summarize(lg.name, stats, classes, s, w), clique);
  j["report"] = bound_report_json(report);
  emit(j, c, out, lg.name + ": " + to_string(report.verdict));
  return exit_for(report);
}

int cmd_brute(const RunConfig& c, std::ostream& out) {
  c.validate();
  if (!c.chartab.empty()) throw std::invalid_argument("brute needs an enumerated group (--family or --file)");
  const LoadedGroup lg = load_group(c);
  GroupTable g = enumerate_or_explain(lg.gens, c.cap);
  ConjugacyClassTable classes(g);
  ActionStats stats = action_stats(g, classes);
  const SearchBudget budget{c.budget, c.max_order};

  Json j = header("brute", c);
  j["group"] = {{"name", lg.name}, {"order", std::to_string(g.order())}, {"degree", g.degree()}};
  j["action"] = action_json(stats, classes);

  const MaxCocliqueResult mc = max_coclique_exact(g, stats, budget);
  std::unique_ptr<ModuleV> v;
  if (g.order() <= 10'000) v = std::make_unique<ModuleV>(g, stats.range);
  CocliqueWitness w = classify_coclique(g, stats.range, mc.witness.elements, v.get());
  Rational target(static_cast<unsigned long>(g.order()), static_cast<unsigned long>(stats.degree));
  target.canonicalize();
  j["coclique"] = {{"complete", mc.complete},
                   {"upper_bound", mc.upper_bound},
                   {"nodes", mc.nodes},
                   {"target", to_string(target)},
                   {"matches_target", mc.complete && Rational(static_cast<unsigned long>(w.size())) == target},
                   {"witness", witness_json(w)}};
  if (v) j["module_v"] = {{"rank", v->rank()}, {"expected", v->expected_rank()}, {"pass", v->rank() == v->expected_rank()}};

  const CliqueSearchResult cr = find_sharply_transitive_clique(g, stats, budget);
  Json cj = {{"found", cr.clique.has_value()}, {"from_subgroup", cr.from_subgroup}, {"complete", cr.complete}, {"nodes", cr.nodes}};
  if (cr.clique) {
    cj["elements"] = *cr.clique;
    const Rational bound = clique_coclique_bound(static_cast<unsigned long>(g.order()), static_cast<unsigned long>(cr.clique->size()));
    cj["clique_coclique_bound"] = to_string(bound);
    cj["tight"] = bound == target;
    // |C ∩ S x| = 1 for translates of the coclique by the first elements.
    Json checks = Json::array();
    for (ElementId x = 0; x < std::min<std::size_t>(g.order(), 8); ++x) {
      std::vector<ElementId> translate;
      for (ElementId s : w.elements) translate.push_back(g.multiply(s, x));
      checks.push_back({{"translate", x}, {"intersection", intersection_size(*cr.clique, translate)}});
    }
    cj["intersection_checks"] = checks;
  }
  j["clique"] = cj;
  emit(j, c, out, lg.name + ": maximum intersecting set " + std::to_string(w.size()) + (mc.complete ? "" : " (partial)"));
  return mc.complete ? kCertified : kInconclusive;
}

}  // namespace ekr::cli
