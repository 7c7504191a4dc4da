#include "report.hpp"

namespace ekr::cli {

Json exact_json(const Rational& v) { return to_string(v); }
Json exact_json(const Integer& v) { return to_string(v); }

Json enclosure_json(const Enclosure& e) {
  Json j;
  j["enclosure"] = Json::array({decimal_string(e.lo, kEnclosureDigits, true), decimal_string(e.hi, kEnclosureDigits, false)});
  j["digits"] = kEnclosureDigits;
  return j;
}

Json value_json(const RealAlgebraic& v) {
  if (v.is_rational()) return Json{{"exact", to_string(v.value())}};
  Json j = enclosure_json(v.refined(Rational(Integer(1), power(Integer(10), kEnclosureDigits + 2))).enclosure());
  Json poly = Json::array();
  for (const auto& c : v.defining_polynomial()) poly.push_back(to_string(c));
  j["polynomial"] = poly;
  return j;
}

Json value_json(const QuadraticSum& v) {
  if (v.is_rational()) return Json{{"exact", to_string(v.rational_part())}};
  Json j = enclosure_json(v.enclosure(128));
  j["closed_form"] = to_string(v);
  return j;
}

Json classes_json(const ConjugacyClassTable& classes, const ActionStats& stats) {
  Json out = Json::array();
  for (ClassId c = 0; c < classes.size(); ++c) {
    const auto& k = classes[c];
    out.push_back({{"name", k.name},
                   {"size", std::to_string(k.size)},
                   {"element_order", k.element_order},
                   {"fixed_points", stats.fixed_points[c]},
                   {"inverse", classes[k.inverse].name}});
  }
  return out;
}

Json spectrum_json(const Spectrum& s) {
  Json out = Json::array();
  for (const auto& e : s.entries)
    out.push_back({{"value", value_json(e.value)}, {"multiplicity", to_string(e.multiplicity)}, {"characters", e.character_count}});
  return out;
}

Json bound_report_json(const BoundReport& r) {
  Json j;
  j["target"] = exact_json(r.target);
  j["weighted"] = r.weighted;
  Json bounds = Json::array();
  for (const auto& b : r.bounds) {
    Json e;
    e["kind"] = to_string(b.kind);
    e["inputs"] = b.inputs;
    if (b.value.is_point()) e["value"] = Json{{"exact", to_string(b.value.lo)}};
    else e["value"] = enclosure_json(b.value);
    e["tight"] = b.tight;
    bounds.push_back(e);
  }
  j["bounds"] = bounds;
  j["verdict"] = to_string(r.verdict);
  if (r.d) j["d"] = exact_json(*r.d);
  if (r.tau) {
    j["tau"] = value_json(*r.tau);
    j["tau_multiplicity"] = to_string(r.tau_multiplicity);
  }
  j["surrogate"] = r.surrogate;
  if (r.clique_witness) j["clique_witness"] = *r.clique_witness;
  return j;
}

Json witness_json(const CocliqueWitness& w) {
  Json j;
  j["size"] = w.size();
  j["elements"] = w.elements;
  j["classification"] = to_string(w.classification);
  if (w.coset) j["coset"] = {{"alpha", w.coset->first}, {"beta", w.coset->second}};
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ekr::cli
