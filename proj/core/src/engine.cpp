#include "laplacext/engine.hpp"

#include <cmath>

#include "laplacext/faxen.hpp"

namespace laplacext::engine {

namespace {

constexpr double kPi = 3.14159265358979323846;

double derive_theta(const coeffs::ExpansionSpec& spec, Complex z, int sheet) {
  if (z == Complex{}) throw SpecError("evaluate: z must be nonzero");
  double theta = std::arg(z) + 2.0 * kPi * sheet;
  if (theta < spec.theta1 - 1e-12 || theta > spec.theta2 + 1e-12) {
    throw SpecError("evaluate: arg z (with sheet) outside the admissible theta range");
  }
  return theta;
}

Complex z_pow(Complex z, double theta, Complex exponent) {
  return std::exp(exponent * Complex(std::log(std::abs(z)), theta));
}

Complex faxen_x(const coeffs::ExpansionSpec& spec, const coeffs::BranchContext& branch) {
  Complex r0 = spec.r.empty() ? Complex{} : spec.r[0];
  return r0 / branch.p0_pow(spec, Complex((spec.nu / spec.mu).value(), 0.0));
}

}  // namespace

TermBundle assemble_term(const coeffs::CoefficientTable& table,
                         const coeffs::ExpansionSpec& spec,
                         const coeffs::BranchContext& branch, int n) {
  if (n < 0 || n >= static_cast<int>(table.f.size())) {
    throw SpecError("assemble_term: f table does not reach this order");
  }
  const double muv = spec.mu.value();
  const double nuv = spec.nu.value();
  const Complex x = faxen_x(spec, branch);
  Complex acc{};
  for (int m = 0; m <= n; ++m) {
    faxen::FaxenQuery q;
    q.alpha = nuv / muv;
    q.beta = (static_cast<double>(n) + spec.lambda + m * nuv) / muv;
    q.x = x;
    acc += table.f[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] *
           faxen::fi(q).value;
  }
  return {acc, (static_cast<double>(n) + spec.lambda) / muv};
}

ExpansionEvaluation evaluate(const coeffs::ExpansionSpec& spec, Complex z, int N,
                             int sheet) {
  if (N < 1) throw SpecError("evaluate: N must be at least 1");
  spec.validate();
  if (!spec.tail_conditions_asserted) {
    throw SpecError("evaluate: the spec does not assert the tail conditions");
  }
  const double theta = derive_theta(spec, z, sheet);
  coeffs::BranchContext branch = coeffs::select_branch(spec, theta);
  coeffs::CoefficientTable table = coeffs::compute_f(spec, branch, N + 1);

  ExpansionEvaluation ev;
  ev.z = z;
  ev.theta = theta;
  ev.prefactor = std::exp(-z * spec.p_at_a);
  ev.terms.reserve(static_cast<std::size_t>(N));
  Complex running{};
  for (int n = 0; n < N; ++n) {
    TermBundle tb = assemble_term(table, spec, branch, n);
    Complex term = tb.coefficient * z_pow(z, theta, -tb.exponent);
    ev.terms.push_back(term);
    running += term;
    ev.partial_sums.push_back(ev.prefactor * running);
  }
  TermBundle omitted = assemble_term(table, spec, branch, N);
  ev.heuristic_error =
      std::abs(omitted.coefficient * z_pow(z, theta, -omitted.exponent));
  return ev;
}

ExpansionEvaluation evaluate_corollary2(const coeffs::ExpansionSpec& spec, Complex z,
                                        int M, int sheet, int max_power_index) {
  if (M < 1) throw SpecError("evaluate_corollary2: M must be at least 1");
  spec.validate();
  if (!spec.mu.is_integer() || spec.mu < Rational(2) || spec.nu != Rational(1)) {
    throw SpecError("evaluate_corollary2: needs integer mu >= 2 and nu = 1");
  }
  if (!spec.tail_conditions_asserted) {
    throw SpecError("evaluate_corollary2: the spec does not assert the tail conditions");
  }
  const int mu = static_cast<int>(spec.mu.num());
  const double theta = derive_theta(spec, z, sheet);
  coeffs::BranchContext branch = coeffs::select_branch(spec, theta);

  const int half_max = mu / 2;  // ceil((mu-1)/2)
  const int frows = half_max + M + 1;
  coeffs::CoefficientTable table = coeffs::compute_f(spec, branch, frows);
  coeffs::GPolyTable g =
      coeffs::g_poly_table(mu, spec.lambda, 2 * half_max + 2 * M + 2);
  const Complex x = faxen_x(spec, branch);
  auto ft = coeffs::rearrange_corollary2(table, g, x, M + 1);

  // Fi^{(n)}(1/mu, lambda/mu; x) = Fi(1/mu, (lambda+n)/mu; x)
  std::vector<Complex> fi_n(static_cast<std::size_t>(mu));
  for (int n = 0; n < mu; ++n) {
    faxen::FaxenQuery q;
    q.alpha = 1.0 / mu;
    q.beta = (spec.lambda + static_cast<double>(n)) / static_cast<double>(mu);
    q.x = x;
    fi_n[static_cast<std::size_t>(n)] = faxen::fi(q).value;
  }

  ExpansionEvaluation ev;
  ev.z = z;
  ev.theta = theta;
  ev.prefactor = std::exp(-z * spec.p_at_a);
  Complex running{};
  for (int m = 0; m < M; ++m) {
    Complex group{};
    for (int n = 0; n < mu; ++n) {
      const int half = (n + 1) / 2;
      if (max_power_index >= 0 && half + m > max_power_index) continue;
      Complex zp = z_pow(z, theta,
                         -(Complex(static_cast<double>(half + m), 0.0) + spec.lambda) /
                             static_cast<double>(mu));
      group += fi_n[static_cast<std::size_t>(n)] *
               ft[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] * zp;
    }
    ev.terms.push_back(group);
    running += group;
    ev.partial_sums.push_back(ev.prefactor * running);
  }
  // first omitted m-group
  Complex omitted{};
  for (int n = 0; n < mu; ++n) {
    const int half = (n + 1) / 2;
    if (max_power_index >= 0 && half + M > max_power_index) continue;
    Complex zp = z_pow(z, theta,
                       -(Complex(static_cast<double>(half + M), 0.0) + spec.lambda) /
                           static_cast<double>(mu));
    omitted += fi_n[static_cast<std::size_t>(n)] *
               ft[static_cast<std::size_t>(n)][static_cast<std::size_t>(M)] * zp;
  }
  ev.heuristic_error = std::abs(omitted);
  return ev;
}

}  // namespace laplacext::engine
