#pragma once

#include <string>

#include <json.hpp>

#include "ekr/bounds.hpp"
#include "ekr/chartab.hpp"
#include "ekr/conjugacy.hpp"
#include "ekr/search.hpp"
#include "ekr/spectrum.hpp"

namespace ekr::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr int kEnclosureDigits = 15;

Json exact_json(const Rational& v);
Json exact_json(const Integer& v);
// {"enclosure": [lo, hi], "digits": d}, endpoints rounded outward.
Json enclosure_json(const Enclosure& e);
// {"exact": "p/q"} or an enclosure plus the defining polynomial.
Json value_json(const RealAlgebraic& v);
Json value_json(const QuadraticSum& v);

Json classes_json(const ConjugacyClassTable& classes, const ActionStats& stats);
Json spectrum_json(const Spectrum& s);
Json bound_report_json(const BoundReport& r);
Json witness_json(const CocliqueWitness& w);

std::string dump(const Json& j);

}  // namespace ekr::cli
