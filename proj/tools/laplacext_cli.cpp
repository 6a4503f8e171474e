// Command line interface: every computation of the library behind one
// executable with JSON output, suitable for scripting and golden-file tests.

#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "laplacext/engine.hpp"
#include "laplacext/faxen.hpp"
#include "laplacext/io.hpp"
#include "laplacext/quadrature.hpp"
#include "laplacext/selftest.hpp"
#include "laplacext/transition.hpp"

namespace {

using laplacext::Complex;
using laplacext::NumericsError;
using laplacext::SpecError;
using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

Complex parse_complex(const std::string& s, const std::string& what) {
  std::size_t comma = s.find(',');
  try {
    if (comma == std::string::npos) {
      return Complex(std::stod(s), 0.0);
    }
    return Complex(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
  } catch (const std::exception&) {
    throw SpecError(what + ": expected RE or RE,IM, got '" + s + "'");
  }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct BuiltinIntegrand {
  laplacext::quad::Integrand f;
  std::function<double(Complex)> envelope_log;  // -log of the modulus envelope
  Complex expected_singularity{0.0, 0.0};
};

struct QuadOptions {
  std::string integrand;
  std::string contour_path;
  double tol = 1e-10;
  std::string z = "1,0";
  std::string lambda = "1,0";
  std::string rho = "100,0";
  std::string tau = "0,0";
  std::string a = "0.75,0";
  std::string b = "1000,0";
  double alpha = 0.5;
  std::string beta = "1,0";
  std::string x = "0,0";
  int sheet = 0;
};

BuiltinIntegrand make_builtin(const QuadOptions& o) {
  std::string name = o.integrand;
  const std::string prefix = "builtin:";
  if (name.rfind(prefix, 0) != 0) {
    throw SpecError("--integrand must be builtin:<name>");
  }
  name = name.substr(prefix.size());
  BuiltinIntegrand bi;
  if (name == "exp") {
    bi.f = [](Complex, Complex u) { return std::exp(-u); };
    bi.envelope_log = [](Complex t) { return t.real(); };
  } else if (name == "watson") {
    Complex z = parse_complex(o.z, "--z");
    Complex lambda = parse_complex(o.lambda, "--lambda");
    bi.f = [=](Complex, Complex u) {
      return std::exp(-z * u + (lambda - 1.0) * std::log(u));
    };
    bi.envelope_log = [=](Complex t) { return (z * t).real(); };
    bi.expected_singularity = lambda - 1.0;
  } else if (name == "anger") {
    Complex rho = parse_complex(o.rho, "--rho");
    Complex tau = parse_complex(o.tau, "--tau");
    double theta = std::arg(rho) + 2.0 * kPi * o.sheet;
    Complex z = rho + tau * std::exp(Complex(std::log(std::abs(rho)), theta) / 3.0);
    bi.f = [=](Complex t, Complex) { return std::exp(-z * std::sinh(t) + rho * t) / kPi; };
    bi.envelope_log = [=](Complex t) { return (z * std::sinh(t) - rho * t).real(); };
  } else if (name == "chu") {
    // s-variable integrand of the confluent integral on the positive axis
    Complex a = parse_complex(o.a, "--a");
    Complex b = parse_complex(o.b, "--b");
    Complex tau = parse_complex(o.tau, "--tau");
    double theta = std::arg(b) + 2.0 * kPi * o.sheet;
    Complex z = b + tau * std::exp(Complex(std::log(std::abs(b)), theta) / 2.0);
    Complex ga = laplacext::faxen::gamma(a);
    bi.f = [=](Complex, Complex u) {
      return std::exp(-z * u + (a - 1.0) * std::log(u) +
                      (b - a - 1.0) * std::log(1.0 + u)) /
             ga;
    };
    bi.envelope_log = [=](Complex t) {
      return (z * t - (b - a - 1.0) * std::log(1.0 + t)).real();
    };
    bi.expected_singularity = a - 1.0;
  } else if (name == "chu-t") {
    // t-variable integrand of the confluent integral, for deformed contours;
    // the branch of q follows the principal logarithm, valid for |theta| <= pi
    Complex a = parse_complex(o.a, "--a");
    Complex b = parse_complex(o.b, "--b");
    Complex tau = parse_complex(o.tau, "--tau");
    double theta = std::arg(b) + 2.0 * kPi * o.sheet;
    if (std::abs(theta) > kPi + 1e-9) {
      throw SpecError("builtin:chu-t supports |theta| <= pi only");
    }
    Complex sqrtb = std::exp(Complex(std::log(std::abs(b)), theta) / 2.0);
    Complex ga = laplacext::faxen::gamma(a);
    bi.f = [=](Complex t, Complex u) {
      Complex em1 = std::exp(t) - 1.0;
      Complex p = em1 - t;  // e^t - t - 1
      Complex q = std::exp((a - 1.0) * std::log(em1) - a * t);
      Complex r = -tau * em1;
      (void)u;
      return std::exp(-b * p + sqrtb * r) * q / ga;
    };
    bi.envelope_log = [=](Complex t) {
      Complex p = std::exp(t) - t - 1.0;
      Complex r = -tau * (std::exp(t) - 1.0);
      return (b * p - sqrtb * r).real();
    };
    bi.expected_singularity = a - 1.0;
  } else if (name == "faxen") {
    Complex beta = parse_complex(o.beta, "--beta");
    Complex x = parse_complex(o.x, "--x");
    double alpha = o.alpha;
    bi.f = [=](Complex, Complex u) {
      Complex lt = std::log(u);
      return std::exp(-u + x * std::exp(alpha * lt) + (beta - 1.0) * lt);
    };
    bi.envelope_log = [=](Complex t) {
      return (t - x * std::pow(t, alpha)).real();
    };
    bi.expected_singularity = beta - 1.0;
  } else {
    throw SpecError("unknown builtin integrand: " + name);
  }
  return bi;
}

int run(int argc, char** argv) {
  CLI::App app{"asymptotic expansions of exponential contour integrals"};
  app.require_subcommand(1);

  // faxen
  auto* cmd_faxen = app.add_subcommand("faxen", "evaluate the Faxen integral");
  double fa_alpha = 0.5;
  std::string fa_beta = "1,0", fa_x = "0,0", fa_method = "auto";
  double fa_tol = 1e-10;
  cmd_faxen->add_option("--alpha", fa_alpha, "alpha in [0,1)")->required();
  cmd_faxen->add_option("--beta", fa_beta, "beta as RE,IM (Re > 0)")->required();
  cmd_faxen->add_option("--x", fa_x, "argument as RE,IM")->required();
  cmd_faxen->add_option("--method", fa_method, "auto|series|asymptotic");
  cmd_faxen->add_option("--tol", fa_tol, "series noise tolerance");

  // coeffs
  auto* cmd_coeffs = app.add_subcommand("coeffs", "coefficient tables for a spec");
  std::string co_spec;
  int co_order = 4;
  cmd_coeffs->add_option("--spec", co_spec, "spec JSON file")->required();
  cmd_coeffs->add_option("--order", co_order, "number of f rows");

  // expand
  auto* cmd_expand = app.add_subcommand("expand", "evaluate the asymptotic expansion");
  std::string ex_spec, ex_z = "10,0";
  int ex_order = 3;
  bool ex_cor2 = false;
  std::optional<int> ex_sheet;
  cmd_expand->add_option("--spec", ex_spec, "spec JSON file")->required();
  cmd_expand->add_option("--z", ex_z, "evaluation point RE,IM")->required();
  cmd_expand->add_option("--order", ex_order, "number of terms");
  cmd_expand->add_flag("--corollary2", ex_cor2, "few-transcendent rearrangement");
  int ex_sheet_val = 0;
  auto* exs = cmd_expand->add_option("--sheet", ex_sheet_val, "winding of arg z");

  // quad
  auto* cmd_quad = app.add_subcommand("quad", "contour quadrature of an integrand");
  QuadOptions qo;
  cmd_quad->add_option("--integrand", qo.integrand, "builtin:<name>")->required();
  cmd_quad->add_option("--contour", qo.contour_path, "contour JSON file")->required();
  cmd_quad->add_option("--tol", qo.tol, "tolerance");
  cmd_quad->add_option("--z", qo.z, "watson: decay rate RE,IM");
  cmd_quad->add_option("--lambda", qo.lambda, "watson: endpoint exponent");
  cmd_quad->add_option("--rho", qo.rho, "anger: large parameter RE,IM");
  cmd_quad->add_option("--tau", qo.tau, "anger/chu: transition offset RE,IM");
  cmd_quad->add_option("--a", qo.a, "chu: first parameter RE,IM");
  cmd_quad->add_option("--b", qo.b, "chu: large parameter RE,IM");
  cmd_quad->add_option("--alpha", qo.alpha, "faxen: alpha");
  cmd_quad->add_option("--beta", qo.beta, "faxen: beta RE,IM");
  cmd_quad->add_option("--x", qo.x, "faxen: argument RE,IM");
  cmd_quad->add_option("--sheet", qo.sheet, "winding of the large parameter");

  // example
  auto* cmd_example = app.add_subcommand("example", "worked transition-region examples");
  std::string which;
  cmd_example->add_option("name", which, "chu or anger")->required();
  std::string ei_a = "0.75,0", ei_tau = "0.5,0", ei_big;
  int ei_order = 2, ei_sheet = 0;
  bool ei_verify = false;
  std::string ei_grid;
  cmd_example->add_option("--a", ei_a, "chu: parameter a RE,IM");
  cmd_example->add_option("--tau", ei_tau, "transition offset RE,IM");
  cmd_example->add_option("--big", ei_big, "large parameter RE,IM");
  cmd_example->add_option("--rho", ei_big, "alias for --big (anger)");
  cmd_example->add_option("--b", ei_big, "alias for --big (chu)");
  cmd_example->add_option("--order", ei_order,
                          "highest coefficient index m (terms m = 0..order)");
  cmd_example->add_option("--sheet", ei_sheet, "winding of the large parameter");
  cmd_example->add_flag("--verify", ei_verify, "compare against direct quadrature");
  cmd_example->add_option("--grid", ei_grid, "comma list of real tau values");

  // selftest
  auto* cmd_selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  bool st_quick = false;
  cmd_selftest->add_flag("--quick", st_quick, "trimmed sample counts (~60 s budget)");

  CLI11_PARSE(app, argc, argv);

  if (cmd_faxen->parsed()) {
    laplacext::faxen::FaxenQuery q{fa_alpha, parse_complex(fa_beta, "--beta"),
                                   parse_complex(fa_x, "--x")};
    laplacext::faxen::FaxenResult r;
    if (fa_method == "auto") {
      r = laplacext::faxen::fi(q, fa_tol);
    } else if (fa_method == "series") {
      r = laplacext::faxen::fi_forced(q, laplacext::faxen::FiMethod::series);
    } else if (fa_method == "asymptotic") {
      r = laplacext::faxen::fi_forced(q,
                                      laplacext::faxen::FiMethod::asymptotic_positive);
    } else {
      throw SpecError("--method must be auto, series or asymptotic");
    }
    emit(laplacext::io::to_json(r));
    return 0;
  }

  if (cmd_coeffs->parsed()) {
    int sheet = 0;
    auto spec = laplacext::io::load_spec_file(co_spec, &sheet);
    double theta = 0.5 * (spec.theta1 + spec.theta2);
    auto branch = laplacext::coeffs::select_branch(spec, theta);
    auto table = laplacext::coeffs::compute_f(spec, branch, co_order);
    emit(laplacext::io::to_json(table));
    return 0;
  }

  if (cmd_expand->parsed()) {
    int sheet = 0;
    auto spec = laplacext::io::load_spec_file(ex_spec, &sheet);
    if (exs->count() > 0) sheet = ex_sheet_val;
    Complex z = parse_complex(ex_z, "--z");
    laplacext::engine::ExpansionEvaluation ev =
        ex_cor2 ? laplacext::engine::evaluate_corollary2(spec, z, ex_order, sheet)
                : laplacext::engine::evaluate(spec, z, ex_order, sheet);
    emit(laplacext::io::to_json(ev));
    return 0;
  }

  if (cmd_quad->parsed()) {
    BuiltinIntegrand bi = make_builtin(qo);
    auto contour = laplacext::io::load_contour_file(qo.contour_path);
    laplacext::quad::DecayWitness witness;
    if (contour.tail == laplacext::quad::Contour::Tail::ray) {
      Complex last = contour.nodes.back();
      Complex dir = contour.ray_dir / std::abs(contour.ray_dir);
      auto env = bi.envelope_log;
      witness = [last, dir, env](double s) { return env(last + dir * s); };
    }
    auto r = laplacext::quad::integrate_contour(bi.f, contour, qo.tol, witness);
    emit(laplacext::io::to_json(r));
    return 0;
  }

  if (cmd_example->parsed()) {
    if (which != "chu" && which != "anger") {
      throw SpecError("example name must be chu or anger");
    }
    if (ei_big.empty()) throw SpecError("--big (or --rho/--b) is required");
    const int terms = ei_order + 1;
    std::vector<Complex> taus;
    if (ei_grid.empty()) {
      taus.push_back(parse_complex(ei_tau, "--tau"));
    } else {
      std::size_t pos = 0;
      while (pos < ei_grid.size()) {
        std::size_t next = ei_grid.find(',', pos);
        if (next == std::string::npos) next = ei_grid.size();
        taus.push_back(Complex(std::stod(ei_grid.substr(pos, next - pos)), 0.0));
        pos = next + 1;
      }
    }
    json out = json::array();
    for (Complex tau : taus) {
      json one;
      one["tau"] = laplacext::io::to_json(tau);
      one["order"] = ei_order;
      if (std::abs(tau) > 2.0) {
        one["warning"] =
            "large |tau|: the expansion remains valid when Re(tau big^{1/mu}) >= 0, "
            "but no quantitative error control is available in that regime";
      }
      if (which == "chu") {
        laplacext::transition::ConfluentSpec cs;
        cs.a = parse_complex(ei_a, "--a");
        cs.tau = tau;
        cs.b = parse_complex(ei_big, "--big");
        cs.sheet = ei_sheet;
        one["value"] = laplacext::io::to_json(
            laplacext::transition::confluent_eval(cs, terms));
        if (ei_verify) {
          auto rep = laplacext::transition::confluent_verify(cs, terms);
          one["verify"] = {{"quadrature", laplacext::io::to_json(rep.quadrature)},
                           {"rel_error", rep.rel_error},
                           {"fitted_order", rep.fitted_order}};
        }
      } else {
        laplacext::transition::AngerWeberSpec as;
        as.tau = tau;
        as.rho = parse_complex(ei_big, "--big");
        as.sheet = ei_sheet;
        one["value"] = laplacext::io::to_json(
            laplacext::transition::anger_weber_eval(as, terms));
        if (ei_verify) {
          auto rep = laplacext::transition::anger_weber_verify(as, terms);
          one["verify"] = {{"quadrature", laplacext::io::to_json(rep.quadrature)},
                           {"rel_error", rep.rel_error},
                           {"fitted_order", rep.fitted_order}};
        }
      }
      out.push_back(one);
    }
    emit(out.size() == 1 ? out[0] : out);
    return 0;
  }

  if (cmd_selftest->parsed()) {
    auto results = laplacext::selftest::run_all(st_quick);
    int failures = laplacext::selftest::report(results, std::cout);
    return failures == 0 ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const SpecError& e) {
    json err = {{"error", {{"type", "validation"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 2;
  } catch (const NumericsError& e) {
    json err = {{"error", {{"type", "numerical"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err = {{"error", {{"type", "internal"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
}
