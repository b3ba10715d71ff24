#pragma once

#include "json.hpp"
#include "rankcodes/constructions.hpp"
#include "rankcodes/criteria.hpp"
#include "rankcodes/isometry.hpp"
#include "rankcodes/search.hpp"

namespace rankcodes {

// JSON interchange formats:
//   field    {"q": int, "m": int, "modulus": [c0, ..., cm]}
//   matrix   {"field": "base"|"ext", "rows": r, "cols": c, "entries": [[..], ..]}
//   code     {"field": {..}, "n": int, "k": int, "generator": [[..], ..]}
//   isometry {"lambda": int, "A": [[..], ..], "sigma": int}
// Elements are canonical integers throughout. Parsers throw bad_input naming
// the offending key; semantic validation (primitivity, ranks, ...) is done
// by the constructors they feed.

nlohmann::json field_to_json(const Field& field);
FieldPtr field_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json code_to_json(const RankCode& code);
RankCode code_from_json(const nlohmann::json& j);

nlohmann::json isometry_to_json(const Isometry& iso);
Isometry isometry_from_json(const nlohmann::json& j);

nlohmann::json mrd_verdict_to_json(const MrdVerdict& verdict);
nlohmann::json gabidulin_verdict_to_json(const GabidulinVerdict& verdict);
nlohmann::json gamma_report_to_json(const GammaReport& report);
nlohmann::json search_report_to_json(const SearchReport& report, const FieldPtr& field);

}  // namespace rankcodes
