#pragma once

#include <string>

#include "json.hpp"
#include "laplacext/coeffs.hpp"
#include "laplacext/engine.hpp"
#include "laplacext/faxen.hpp"
#include "laplacext/quadrature.hpp"
#include "laplacext/series.hpp"

// JSON wire formats. Complex numbers are two-element arrays [re, im];
// exact rationals are [num, den].

namespace laplacext::io {

using nlohmann::json;

json to_json(Complex z);
Complex complex_from_json(const json& j, const std::string& what);

json to_json(const Rational& r);
Rational rational_from_json(const json& j, const std::string& what);

// {"offset": [re, im], "step": [num, den], "coeffs": [[re, im], ...]}
json to_json(const GeneralizedSeries& s);
GeneralizedSeries series_from_json(const json& j);

// {"mu": [num, den], "nu": [num, den], "lambda": [re, im], "p_at_a": [re, im],
//  "p": [...], "q": [...], "r": [...], "varpi": x, "theta_range": [t1, t2],
//  "sheet": k, "tail_conditions_asserted": bool}
// sheet and tail_conditions_asserted are optional; r may be omitted.
json to_json(const coeffs::ExpansionSpec& spec, int sheet = 0);
coeffs::ExpansionSpec spec_from_json(const json& j, int* sheet_out = nullptr);
coeffs::ExpansionSpec load_spec_file(const std::string& path, int* sheet_out = nullptr);

// {"a": [...], "b": [...], "c": [...], "f": [[...], ...]}
// a and c start at index 1 of their families (a[0] holds a_1, c[0] holds c_1).
json to_json(const coeffs::CoefficientTable& t);

// {"nodes": [[re, im], ...], "start_singularity": [re, im],
//  "tail": {"type": "ray", "dir": [re, im]} | {"type": "finite"}}
json to_json(const quad::Contour& c);
quad::Contour contour_from_json(const json& j);
quad::Contour load_contour_file(const std::string& path);

json to_json(const engine::ExpansionEvaluation& ev);
json to_json(const faxen::FaxenResult& r);
json to_json(const quad::QuadratureResult& r);

}  // namespace laplacext::io
