#include "laplacext/io.hpp"

#include <cmath>
#include <fstream>

namespace laplacext::io {

namespace {

double finite_number(const json& j, const std::string& what) {
  if (!j.is_number()) throw SpecError(what + ": expected a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) throw SpecError(what + ": must be finite");
  return v;
}

std::vector<Complex> complex_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw SpecError(what + ": expected an array of [re, im] pairs");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(complex_from_json(j[i], what + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json complex_list_json(const std::vector<Complex>& v) {
  json out = json::array();
  for (Complex z : v) out.push_back(to_json(z));
  return out;
}

}  // namespace

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const std::string& what) {
  if (j.is_number()) {
    return Complex(finite_number(j, what), 0.0);
  }
  if (!j.is_array() || j.size() != 2) {
    throw SpecError(what + ": expected [re, im]");
  }
  return Complex(finite_number(j[0], what + ".re"), finite_number(j[1], what + ".im"));
}

json to_json(const Rational& r) {
  return json::array({r.num(), r.den()});
}

Rational rational_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer()) {
    throw SpecError(what + ": expected [num, den] with integer entries");
  }
  return Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

json to_json(const GeneralizedSeries& s) {
  json j;
  j["offset"] = to_json(s.offset().value());
  j["step"] = to_json(s.step());
  j["coeffs"] = complex_list_json(s.coeffs());
  return j;
}

GeneralizedSeries series_from_json(const json& j) {
  if (!j.is_object()) throw SpecError("series: expected an object");
  Complex off = complex_from_json(j.at("offset"), "series.offset");
  Rational step = rational_from_json(j.at("step"), "series.step");
  std::vector<Complex> coeffs = complex_list(j.at("coeffs"), "series.coeffs");
  // Snap the real part of the offset onto the step lattice when it is an
  // exact multiple (the usual case); leave the rest in the parameter slot.
  double scaled = off.real() * step.den();
  Exponent e;
  if (std::abs(scaled - std::round(scaled)) < 1e-9 && std::abs(scaled) < 9e15) {
    e.rat = Rational(static_cast<std::int64_t>(std::llround(scaled)), step.den());
    e.sym = Complex(off.real() - e.rat.value(), off.imag());
  } else {
    e.sym = off;
  }
  return GeneralizedSeries(e, step, std::move(coeffs));
}

json to_json(const coeffs::ExpansionSpec& spec, int sheet) {
  json j;
  j["mu"] = to_json(spec.mu);
  j["nu"] = to_json(spec.nu);
  j["lambda"] = to_json(spec.lambda);
  j["p_at_a"] = to_json(spec.p_at_a);
  j["p"] = complex_list_json(spec.p);
  j["q"] = complex_list_json(spec.q);
  j["r"] = complex_list_json(spec.r);
  j["varpi"] = spec.varpi;
  j["theta_range"] = json::array({spec.theta1, spec.theta2});
  j["sheet"] = sheet;
  j["tail_conditions_asserted"] = spec.tail_conditions_asserted;
  return j;
}

coeffs::ExpansionSpec spec_from_json(const json& j, int* sheet_out) try {
  if (!j.is_object()) throw SpecError("spec: expected a JSON object");
  coeffs::ExpansionSpec s;
  s.mu = rational_from_json(j.at("mu"), "spec.mu");
  s.nu = rational_from_json(j.at("nu"), "spec.nu");
  s.lambda = complex_from_json(j.at("lambda"), "spec.lambda");
  if (j.contains("p_at_a")) {
    s.p_at_a = complex_from_json(j["p_at_a"], "spec.p_at_a");
  }
  s.p = complex_list(j.at("p"), "spec.p");
  s.q = complex_list(j.at("q"), "spec.q");
  if (j.contains("r")) s.r = complex_list(j["r"], "spec.r");
  if (j.contains("varpi")) s.varpi = finite_number(j["varpi"], "spec.varpi");
  if (j.contains("theta_range")) {
    const json& tr = j["theta_range"];
    if (!tr.is_array() || tr.size() != 2) {
      throw SpecError("spec.theta_range: expected [theta1, theta2]");
    }
    s.theta1 = finite_number(tr[0], "spec.theta_range[0]");
    s.theta2 = finite_number(tr[1], "spec.theta_range[1]");
  }
  if (j.contains("tail_conditions_asserted")) {
    if (!j["tail_conditions_asserted"].is_boolean()) {
      throw SpecError("spec.tail_conditions_asserted: expected a boolean");
    }
    s.tail_conditions_asserted = j["tail_conditions_asserted"].get<bool>();
  }
  if (sheet_out) {
    *sheet_out = 0;
    if (j.contains("sheet")) {
      if (!j["sheet"].is_number_integer()) {
        throw SpecError("spec.sheet: expected an integer");
      }
      *sheet_out = j["sheet"].get<int>();
    }
  }
  s.validate();
  return s;
} catch (const json::exception& e) {
  throw SpecError(std::string("spec: ") + e.what());
}

coeffs::ExpansionSpec load_spec_file(const std::string& path, int* sheet_out) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SpecError("spec file " + path + ": " + e.what());
  }
  return spec_from_json(j, sheet_out);
}

json to_json(const coeffs::CoefficientTable& t) {
  json j;
  j["a"] = complex_list_json(t.a);
  j["b"] = complex_list_json(t.b);
  j["c"] = complex_list_json(t.c);
  json rows = json::array();
  for (const auto& row : t.f) rows.push_back(complex_list_json(row));
  j["f"] = rows;
  return j;
}

json to_json(const quad::Contour& c) {
  json j;
  j["nodes"] = complex_list_json(c.nodes);
  j["start_singularity"] = to_json(c.start_singularity);
  if (c.tail == quad::Contour::Tail::ray) {
    j["tail"] = json{{"type", "ray"}, {"dir", to_json(c.ray_dir)}};
  } else {
    j["tail"] = json{{"type", "finite"}};
  }
  return j;
}

quad::Contour contour_from_json(const json& j) try {
  if (!j.is_object()) throw SpecError("contour: expected a JSON object");
  quad::Contour c;
  c.nodes = complex_list(j.at("nodes"), "contour.nodes");
  if (c.nodes.size() < 2) throw SpecError("contour: need at least two nodes");
  for (std::size_t i = 0; i + 1 < c.nodes.size(); ++i) {
    if (c.nodes[i] == c.nodes[i + 1]) {
      throw SpecError("contour: coincident consecutive nodes");
    }
  }
  if (j.contains("start_singularity")) {
    c.start_singularity =
        complex_from_json(j["start_singularity"], "contour.start_singularity");
  }
  const json& tail = j.at("tail");
  std::string type = tail.at("type").get<std::string>();
  if (type == "ray") {
    c.tail = quad::Contour::Tail::ray;
    c.ray_dir = complex_from_json(tail.at("dir"), "contour.tail.dir");
    if (c.ray_dir == Complex{}) throw SpecError("contour: ray direction is zero");
  } else if (type == "finite") {
    c.tail = quad::Contour::Tail::finite;
  } else {
    throw SpecError("contour.tail.type: expected \"ray\" or \"finite\"");
  }
  return c;
} catch (const json::exception& e) {
  throw SpecError(std::string("contour: ") + e.what());
}

quad::Contour load_contour_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open contour file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SpecError("contour file " + path + ": " + e.what());
  }
  return contour_from_json(j);
}

json to_json(const engine::ExpansionEvaluation& ev) {
  json j;
  j["z"] = to_json(ev.z);
  j["theta"] = ev.theta;
  j["prefactor"] = to_json(ev.prefactor);
  j["terms"] = complex_list_json(ev.terms);
  j["partial_sums"] = complex_list_json(ev.partial_sums);
  j["heuristic_error"] = ev.heuristic_error;
  return j;
}

json to_json(const faxen::FaxenResult& r) {
  json j;
  j["value"] = to_json(r.value);
  j["method"] = faxen::to_string(r.method);
  j["est_error"] = r.est_error;
  return j;
}

json to_json(const quad::QuadratureResult& r) {
  json j;
  j["value"] = to_json(r.value);
  j["est_error"] = r.est_error;
  j["evaluations"] = r.evaluations;
  return j;
}

}  // namespace laplacext::io
