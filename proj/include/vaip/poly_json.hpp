#pragma once

#include <string>

#include <json.hpp>

#include "vaip/poly.hpp"

namespace vaip {

// {"terms":[{"var":i,"coeff":m,"exp":{"const":c,"coeffs":{"<idx>":k}}}],
//  "constant":c0}
// var and coefficient keys are 1-based; terms are in canonical order.

nlohmann::json to_json(const MVPolynomial& p);

/// Throws Error when `j` does not follow the schema.
MVPolynomial from_json(const nlohmann::json& j);

/// Structural schema check. On failure, `why` (if given) names the problem.
bool matches_schema(const nlohmann::json& j, std::string* why = nullptr);

}  // namespace vaip
