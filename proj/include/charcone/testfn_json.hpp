#pragma once

// Variant-tagged JSON encoding of TestFunctionSpec:
//   {"type": "gaussian", "center": [...], "sigma": s}
//   {"type": "gauss_hermite", "center": [...], "sigma": s, "poly": [...], "wave": [...]}
//   {"type": "flat_at_zero", "base": {...}, "axis": 0, "scale": 1.0}
//   {"type": "pullback", "sign": "+" | "-", "m": 1.0, "base": {...}}
//   {"type": "x_minus_derivative", "order": k, "base": {...}}
//   {"type": "sum", "terms": [{"coef": c, "spec": {...}}, ...]}
//   {"type": "product", "coef": c, "factors": [{...}, ...]}
//   {"type": "constant", "dim": n, "value": c}
// Complex numbers are a number or [re, im].

#include <string>

#include "charcone/testfn.hpp"
#include "json.hpp"

namespace charcone {

nlohmann::json spec_to_json(const TestFunctionSpec& spec);

/// Throws FormatError naming the JSON path of the offending entry, e.g.
/// "/cauchy/u0_hat/terms/1/spec/sigma: must be > 0".
TestFunctionSpec spec_from_json(const nlohmann::json& j, const std::string& path = "");

nlohmann::json complex_to_json(cplx c);
cplx complex_from_json(const nlohmann::json& j, const std::string& path);

}  // namespace charcone
