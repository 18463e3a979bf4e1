#pragma once

#include <json.hpp>

#include "cremona/mpoly.hpp"

namespace cremona {

using Json = nlohmann::json;

/// {"vars":["x","y"],"terms":[{"exp":[2,0],"coef":"1"},...]} with terms in
/// canonical descending grlex order and coefficients as "p/q" strings.
/// Round-trips bit-exactly.
Json poly_to_json(const MPoly& p);
MPoly poly_from_json(const Json& j);

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

/// Throws StructuralError when j has a key outside allowed.
void reject_unknown_keys(const Json& j, const std::vector<std::string>& allowed,
                         const std::string& context);

}  // namespace cremona
