#include "laplacext/transition.hpp"

#include <cmath>

#include "laplacext/engine.hpp"
#include "laplacext/faxen.hpp"
#include "laplacext/quadrature.hpp"

namespace laplacext::transition {

namespace {

constexpr double kPi = 3.14159265358979323846;

GeneralizedSeries monomial_u(int order) {
  std::vector<Complex> c(static_cast<std::size_t>(order), Complex{});
  c[0] = Complex(1.0, 0.0);
  return GeneralizedSeries(Exponent(Rational(1)), Rational(1), std::move(c));
}

// (e^u - 1)/u as an analytic series with constant term 1.
GeneralizedSeries expm1_over_u(int order) {
  GeneralizedSeries e = exp_series(monomial_u(order + 1));
  std::vector<Complex> c(e.coeffs().begin() + 1, e.coeffs().end());
  return GeneralizedSeries(Exponent(Rational(0)), Rational(1), std::move(c));
}

double wrap_theta(Complex big, int sheet, double delta, const char* who) {
  if (big == Complex{}) throw SpecError(std::string(who) + ": large parameter is zero");
  double theta = std::arg(big) + 2.0 * kPi * sheet;
  if (std::abs(theta) > 2.0 * kPi - delta) {
    throw SpecError(std::string(who) + ": |theta| exceeds 2 pi - delta");
  }
  return theta;
}

Complex pow_theta(Complex big, double theta, Complex e) {
  return std::exp(e * Complex(std::log(std::abs(big)), theta));
}

// fhat_{n,m} of the even-parity rearrangement: fhat_{n,m} = ftilde_{n, ceil(n/2)+2m}.
std::vector<std::vector<Complex>> anger_weber_fhat(Complex tau, int terms) {
  const int cols = 2 * terms + 2;   // ftilde columns needed
  const int frows = 1 + cols + 1;   // ceil(n/2) max is 1
  coeffs::ExpansionSpec spec = anger_weber_series(tau, frows + 2);
  coeffs::BranchContext br = coeffs::select_branch(spec, 0.0);
  auto table = coeffs::compute_f(spec, br, frows);
  auto g = coeffs::g_poly_table(3, spec.lambda, 2 * (1 + 2 * (cols - 1)) + 2);
  Complex x = spec.r[0] / br.p0_pow(spec, Complex(1.0 / 3.0, 0.0));
  auto ft = coeffs::rearrange_corollary2(table, g, x, cols);
  std::vector<std::vector<Complex>> fhat(3, std::vector<Complex>(
                                                static_cast<std::size_t>(terms) + 1));
  for (int n = 0; n < 3; ++n) {
    const int half = (n + 1) / 2;
    for (int m = 0; m <= terms; ++m) {
      int col = half + 2 * m;
      fhat[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] =
          (col < cols) ? ft[static_cast<std::size_t>(n)][static_cast<std::size_t>(col)]
                       : Complex{};
    }
  }
  return fhat;
}

}  // namespace

coeffs::ExpansionSpec confluent_series(Complex a, Complex tau, int N, double theta) {
  if (N > 40) throw SpecError("confluent_series: N capped at 40");
  if (!(a.real() > 0.0)) throw SpecError("confluent_series: Re(a) must be positive");
  coeffs::ExpansionSpec s;
  s.mu = Rational(2);
  s.nu = Rational(1);
  s.lambda = a;
  s.p_at_a = Complex{};
  s.varpi = -theta / 2.0;  // slope of the descent path at the origin
  s.theta1 = s.theta2 = theta;

  const int L = N + 2;
  // p = e^u - u - 1, leading exponent 2
  GeneralizedSeries e = exp_series(monomial_u(L + 2));
  std::vector<Complex> pc(e.coeffs().begin() + 2, e.coeffs().end());
  s.p.assign(pc.begin(), pc.begin() + std::min<std::size_t>(pc.size(), N));

  // q = u^{a-1} [ E(u)^{a-1} e^{-a u} ], E = (e^u - 1)/u
  GeneralizedSeries E = expm1_over_u(L);
  GeneralizedSeries Epow = fractional_pow(E, Exponent(Rational(-1), a), 0.0);
  GeneralizedSeries eau = exp_series(scale(monomial_u(L), -a));
  GeneralizedSeries qs = mul(Epow, eau);
  s.q.assign(qs.coeffs().begin(),
             qs.coeffs().begin() + std::min<std::size_t>(qs.order(), N));

  // r = tau (1 - e^u) = -tau u E(u)
  GeneralizedSeries rs = scale(E, -tau);
  s.r.assign(rs.coeffs().begin(),
             rs.coeffs().begin() + std::min<std::size_t>(rs.order(), N));
  return s;
}

coeffs::ExpansionSpec anger_weber_series(Complex tau, int N, double theta) {
  if (N > 40) throw SpecError("anger_weber_series: N capped at 40");
  coeffs::ExpansionSpec s;
  s.mu = Rational(3);
  s.nu = Rational(1);
  s.lambda = {1.0, 0.0};
  s.p_at_a = Complex{};
  s.varpi = -theta / 3.0;
  s.theta1 = s.theta2 = theta;

  const int L = N + 4;
  // sinh u = (e^u - e^{-u}) / 2
  GeneralizedSeries u = monomial_u(L);
  GeneralizedSeries sh =
      scale(add(exp_series(u), scale(exp_series(scale(u, {-1.0, 0.0})), {-1.0, 0.0})),
            {0.5, 0.0});
  // p = sinh u - u: drop the vanishing constant and linear entries
  GeneralizedSeries p = sub(sh, u);
  GeneralizedSeries pt = p.trimmed();
  if (pt.offset().rat != Rational(3)) {
    throw NumericsError("anger_weber_series: unexpected leading exponent of p");
  }
  s.p.assign(pt.coeffs().begin(),
             pt.coeffs().begin() + std::min<std::size_t>(pt.order(), N));

  s.q.assign(static_cast<std::size_t>(N), Complex{});
  s.q[0] = Complex(1.0, 0.0);

  // r = -tau sinh u, leading exponent 1
  GeneralizedSeries rt = scale(sh, -tau).trimmed();
  if (rt.offset().rat != Rational(1)) {
    throw NumericsError("anger_weber_series: unexpected leading exponent of r");
  }
  s.r.assign(rt.coeffs().begin(),
             rt.coeffs().begin() + std::min<std::size_t>(rt.order(), N));
  return s;
}

ConfluentCoeffs confluent_coeff_values(Complex a, Complex tau, int terms) {
  if (terms < 1) throw SpecError("confluent_coeff_values: terms must be positive");
  const int frows = 1 + terms + 1;
  coeffs::ExpansionSpec spec = confluent_series(a, tau, frows + 4);
  coeffs::BranchContext br = coeffs::select_branch(spec, 0.0);
  auto table = coeffs::compute_f(spec, br, frows);
  auto g = coeffs::g_poly_table(2, a, 2 + 2 * terms + 2);
  Complex x = spec.r[0] / br.p0_pow(spec, Complex(0.5, 0.0));
  auto ft = coeffs::rearrange_corollary2(table, g, x, terms);

  ConfluentCoeffs out;
  out.C.resize(static_cast<std::size_t>(terms));
  out.D.resize(static_cast<std::size_t>(terms));
  Complex c_scale = std::exp((1.0 - a / 2.0) * std::log(2.0));
  Complex d_scale = std::exp((1.0 - (a + 1.0) / 2.0) * std::log(2.0)) * a;
  for (int m = 0; m < terms; ++m) {
    out.C[static_cast<std::size_t>(m)] = c_scale * ft[0][static_cast<std::size_t>(m)];
    out.D[static_cast<std::size_t>(m)] = d_scale * ft[1][static_cast<std::size_t>(m)];
  }
  return out;
}

AngerWeberCoeffs anger_weber_coeff_values(Complex tau, int terms) {
  if (terms < 1) throw SpecError("anger_weber_coeff_values: terms must be positive");
  auto fhat = anger_weber_fhat(tau, terms);
  AngerWeberCoeffs out;
  out.U.resize(static_cast<std::size_t>(terms));
  out.V.resize(static_cast<std::size_t>(terms));
  out.W.resize(static_cast<std::size_t>(terms));
  const Complex cu = std::pow(2.0, -1.0 / 3) * std::pow(3.0, 2.0 / 3);
  const Complex cv = std::pow(2.0, -2.0 / 3) * std::pow(3.0, 1.0 / 3);
  for (int m = 0; m < terms; ++m) {
    Complex prev = (m == 0) ? Complex{} : fhat[2][static_cast<std::size_t>(m - 1)];
    out.U[static_cast<std::size_t>(m)] = cu * fhat[0][static_cast<std::size_t>(m)] -
                                         tau * prev;
    out.V[static_cast<std::size_t>(m)] = cv * fhat[1][static_cast<std::size_t>(m)];
    out.W[static_cast<std::size_t>(m)] = fhat[2][static_cast<std::size_t>(m)];
  }
  return out;
}

Complex confluent_eval(const ConfluentSpec& s, int terms) {
  const double theta = wrap_theta(s.b, s.sheet, s.delta, "confluent_eval");
  ConfluentCoeffs cd = confluent_coeff_values(s.a, s.tau, terms);
  Complex um = faxen::parabolic_cylinder_u(s.a - 0.5, s.tau);
  Complex up = faxen::parabolic_cylinder_u(s.a + 0.5, s.tau);
  Complex egauss = std::exp(s.tau * s.tau / 4.0);
  Complex line1{}, line2{};
  for (int m = terms - 1; m >= 0; --m) {
    Complex zm = pow_theta(s.b, theta, Complex(-0.5 * m, 0.0));
    line1 += cd.C[static_cast<std::size_t>(m)] * zm;
    line2 += cd.D[static_cast<std::size_t>(m)] * zm;
  }
  Complex b_a2 = pow_theta(s.b, theta, -s.a / 2.0);
  Complex b_a12 = pow_theta(s.b, theta, -(s.a + 1.0) / 2.0);
  return b_a2 * egauss * um * line1 + b_a12 * egauss * up * line2;
}

Complex anger_weber_eval(const AngerWeberSpec& s, int terms) {
  const double theta = wrap_theta(s.rho, s.sheet, s.delta, "anger_weber_eval");
  AngerWeberCoeffs uvw = anger_weber_coeff_values(s.tau, terms);
  const Complex y = -std::pow(2.0, 1.0 / 3) * s.tau;
  Complex hi = faxen::scorer_hi(y);
  Complex hip = faxen::scorer_hi_prime(y);
  Complex su{}, sv{}, sw{};
  for (int m = terms - 1; m >= 0; --m) {
    Complex zm = pow_theta(s.rho, theta, Complex(-2.0 * m / 3.0, 0.0));
    su += uvw.U[static_cast<std::size_t>(m)] * zm;
    sv += uvw.V[static_cast<std::size_t>(m)] * zm;
    sw += uvw.W[static_cast<std::size_t>(m)] * zm;
  }
  Complex r13 = pow_theta(s.rho, theta, Complex(-1.0 / 3.0, 0.0));
  Complex r1 = pow_theta(s.rho, theta, Complex(-1.0, 0.0));
  return std::pow(2.0, 1.0 / 3) * r13 * hi * su +
         std::pow(2.0, 2.0 / 3) * r1 * hip * sv + r1 / kPi * sw;
}

Complex confluent_by_quadrature(const ConfluentSpec& s, double tol) {
  const double theta = wrap_theta(s.b, s.sheet, s.delta, "confluent_by_quadrature");
  if (std::abs(theta) >= 0.5 * kPi) {
    throw SpecError(
        "confluent_by_quadrature: the real-axis integral needs |theta| < pi/2");
  }
  Complex sqrt_b = pow_theta(s.b, theta, {0.5, 0.0});
  if (!(std::sqrt(std::abs(s.b)) > std::abs(s.tau) / std::cos(theta))) {
    throw SpecError("confluent_by_quadrature: |b|^{1/2} <= |tau| sec(theta)");
  }
  const Complex z = s.b + s.tau * sqrt_b;
  const Complex a = s.a;
  const Complex bb = s.b;
  quad::Integrand f = [=](Complex, Complex u) {
    return std::exp(-z * u + (a - 1.0) * std::log(u) +
                    (bb - a - 1.0) * std::log(1.0 + u));
  };
  quad::Contour c;
  c.nodes = {Complex(0.0, 0.0), Complex(1.0, 0.0)};
  c.tail = quad::Contour::Tail::ray;
  c.ray_dir = {1.0, 0.0};
  quad::DecayWitness w = [=](double arc) {
    Complex u(1.0 + arc, 0.0);
    return (z * u - (bb - a - 1.0) * std::log(1.0 + u)).real();
  };
  auto r = quad::integrate_contour(f, c, tol, w);
  return r.value / faxen::gamma(a);
}

Complex anger_weber_by_quadrature(const AngerWeberSpec& s, double tol) {
  const double theta = wrap_theta(s.rho, s.sheet, s.delta, "anger_weber_by_quadrature");
  if (std::abs(theta) >= 0.5 * kPi) {
    throw SpecError(
        "anger_weber_by_quadrature: the real-axis integral needs |theta| < pi/2");
  }
  if (!(std::pow(std::abs(s.rho), 2.0 / 3.0) > std::abs(s.tau) / std::cos(theta))) {
    throw SpecError("anger_weber_by_quadrature: |rho|^{2/3} <= |tau| sec(theta)");
  }
  const Complex rho = s.rho;
  const Complex z = rho + s.tau * pow_theta(rho, theta, Complex(1.0 / 3.0, 0.0));
  quad::Integrand f = [=](Complex, Complex u) {
    return std::exp(-z * std::sinh(u) + rho * u) / kPi;
  };
  quad::Contour c;
  c.nodes = {Complex(0.0, 0.0), Complex(1.0, 0.0)};
  c.tail = quad::Contour::Tail::ray;
  c.ray_dir = {1.0, 0.0};
  quad::DecayWitness w = [=](double arc) {
    Complex u(1.0 + arc, 0.0);
    return (z * std::sinh(u) - rho * u).real();
  };
  auto r = quad::integrate_contour(f, c, tol, w);
  return r.value;
}

namespace {

double fit_order(double err1, double err2, double big1, double big2) {
  if (err1 <= 0.0 || err2 <= 0.0) return 0.0;
  return (std::log(err2) - std::log(err1)) / (std::log(big2) - std::log(big1));
}

}  // namespace

VerifyReport confluent_verify(const ConfluentSpec& s, int terms) {
  VerifyReport rep;
  rep.expansion = confluent_eval(s, terms);
  rep.quadrature = confluent_by_quadrature(s);
  rep.rel_error = std::abs(rep.expansion - rep.quadrature) / std::abs(rep.quadrature);
  ConfluentSpec s4 = s;
  s4.b *= 4.0;
  Complex e4 = confluent_eval(s4, terms);
  Complex q4 = confluent_by_quadrature(s4);
  rep.fitted_order = fit_order(std::abs(rep.expansion - rep.quadrature),
                               std::abs(e4 - q4), std::abs(s.b), std::abs(s4.b));
  return rep;
}

VerifyReport anger_weber_verify(const AngerWeberSpec& s, int terms) {
  VerifyReport rep;
  rep.expansion = anger_weber_eval(s, terms);
  rep.quadrature = anger_weber_by_quadrature(s);
  rep.rel_error = std::abs(rep.expansion - rep.quadrature) / std::abs(rep.quadrature);
  AngerWeberSpec s4 = s;
  s4.rho *= 4.0;
  Complex e4 = anger_weber_eval(s4, terms);
  Complex q4 = anger_weber_by_quadrature(s4);
  rep.fitted_order = fit_order(std::abs(rep.expansion - rep.quadrature),
                               std::abs(e4 - q4), std::abs(s.rho), std::abs(s4.rho));
  return rep;
}

namespace published {

Complex C(int m, Complex tau, Complex a) {
  Complex t2 = tau * tau, t3 = t2 * tau, t4 = t2 * t2, t5 = t4 * tau, t7 = t5 * t2;
  Complex a2 = a * a, a3 = a2 * a, a4 = a3 * a;
  switch (m) {
    case 0: return {1.0, 0.0};
    case 1: return -(a / 3.0) * tau;
    case 2:
      return (a / 18.0) * t4 - ((2.0 * a2 + a) / 12.0) * t2 +
             (8.0 * a3 + 21.0 * a2 + 10.0 * a) / 36.0;
    case 3:
      return -(a / 162.0) * t7 + ((2.0 * a2 - 3.0 * a) / 108.0) * t5 -
             ((10.0 * a3 - 45.0 * a2 - 31.0 * a) / 1620.0) * t3 -
             ((40.0 * a4 + 135.0 * a3 + 188.0 * a2 + 90.0 * a) / 1620.0) * tau;
    default: throw SpecError("published::C: only m <= 3 is tabulated");
  }
}

Complex D(int m, Complex tau, Complex a) {
  Complex t2 = tau * tau, t3 = t2 * tau, t4 = t2 * t2, t5 = t4 * tau, t6 = t4 * t2,
          t8 = t4 * t4;
  Complex a2 = a * a, a3 = a2 * a, a4 = a3 * a, a5 = a4 * a;
  switch (m) {
    case 0: return (a / 3.0) * t2 - (2.0 * a2 + 2.0 * a) / 3.0;
    case 1:
      return -(a / 18.0) * t5 + ((4.0 * a2 + a) / 36.0) * t3 -
             ((2.0 * a2 + a) / 12.0) * tau;
    case 2:
      return (a / 162.0) * t8 - ((4.0 * a2 - 11.0 * a) / 324.0) * t6 -
             ((5.0 * a3 + 10.0 * a2 + a) / 270.0) * t4 +
             ((100.0 * a4 + 255.0 * a3 + 227.0 * a2 + 69.0 * a) / 1620.0) * t2 -
             (40.0 * a5 + 235.0 * a4 + 443.0 * a3 + 317.0 * a2 + 69.0 * a) / 810.0;
    default: throw SpecError("published::D: only m <= 2 is tabulated");
  }
}

Complex U(int m, Complex tau) {
  Complex t2 = tau * tau, t3 = t2 * tau, t5 = t3 * t2, t6 = t5 * tau;
  switch (m) {
    case 0: return {1.0, 0.0};
    case 1: return -tau / 5.0;
    case 2: return -(9.0 / 100.0) * t5 + (3.0 / 35.0) * t2;
    case 3:
      return (957.0 / 7000.0) * t6 - (173.0 / 3150.0) * t3 - Complex(1.0 / 225.0, 0.0);
    default: throw SpecError("published::U: only m <= 3 is tabulated");
  }
}

Complex V(int m, Complex tau) {
  Complex t2 = tau * tau, t3 = t2 * tau, t4 = t2 * t2, t7 = t4 * t3;
  switch (m) {
    case 0: return (3.0 / 10.0) * t2;
    case 1: return -(17.0 / 70.0) * t3 + Complex(1.0 / 70.0, 0.0);
    case 2:
      return -(9.0 / 1000.0) * t7 + (611.0 / 3150.0) * t4 - (37.0 / 3150.0) * tau;
    default: throw SpecError("published::V: only m <= 2 is tabulated");
  }
}

Complex W(int m, Complex tau) {
  Complex t2 = tau * tau, t4 = t2 * t2, t5 = t4 * tau;
  switch (m) {
    case 0: return {-0.1, 0.0};
    case 1: return (9.0 / 100.0) * t4 + (47.0 / 700.0) * tau;
    case 2: return -(447.0 / 3500.0) * t5 - (23.0 / 600.0) * t2;
    default: throw SpecError("published::W: only m <= 2 is tabulated");
  }
}

}  // namespace published

}  // namespace laplacext::transition
