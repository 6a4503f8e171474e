#pragma once

#include <complex>
#include <vector>

#include "laplacext/coeffs.hpp"

namespace laplacext::transition {

using laplacext::Complex;

// U(a, b, b + tau b^{1/2}) for large |b|: the confluent hypergeometric
// function in its transition region. theta = Arg(b) + 2 pi sheet must stay
// within |theta| <= 2 pi - delta.
struct ConfluentSpec {
  Complex a{0.75, 0.0};  // Re > 0
  Complex tau{0.0, 0.0};
  Complex b{1e4, 0.0};
  int sheet = 0;
  double delta = 1e-3;
};

// A_{-rho}(rho + tau rho^{1/3}) for large |rho|: the associated Anger-Weber
// function in its transition region.
struct AngerWeberSpec {
  Complex rho{1e4, 0.0};
  Complex tau{0.0, 0.0};
  int sheet = 0;
  double delta = 1e-3;
};

// Local series data at t = 0 of the integral representations:
//   confluent:  p = e^t - t - 1, q = (e^t - 1)^{a-1} e^{-a t}, r = tau (1 - e^t)
//   Anger-Weber: p = sinh t - t, q = 1, r = -tau sinh t
// Built by series composition (exp, binomial), with N coefficients per
// function. mu, nu, lambda and the angle data are filled in.
coeffs::ExpansionSpec confluent_series(Complex a, Complex tau, int N, double theta = 0.0);
coeffs::ExpansionSpec anger_weber_series(Complex tau, int N, double theta = 0.0);

// Coefficient polynomials of the rearranged expansions, evaluated by the
// generic pipeline at one parameter point. Element m of each list is the
// m-th coefficient (C_m, D_m, U_m, V_m, W_m).
struct ConfluentCoeffs {
  std::vector<Complex> C;
  std::vector<Complex> D;
};
ConfluentCoeffs confluent_coeff_values(Complex a, Complex tau, int terms);

struct AngerWeberCoeffs {
  std::vector<Complex> U;
  std::vector<Complex> V;
  std::vector<Complex> W;
};
AngerWeberCoeffs anger_weber_coeff_values(Complex tau, int terms);

// Partial sums of the parabolic-cylinder form (confluent) and the
// Scorer-function form (Anger-Weber); m runs through 0 .. terms-1.
Complex confluent_eval(const ConfluentSpec& s, int terms);
Complex anger_weber_eval(const AngerWeberSpec& s, int terms);

// Direct quadrature of the defining integrals (|theta| < pi/2 only):
//   U(a,b,z) = (1/Gamma(a)) int_0^inf e^{-z s} s^{a-1} (1+s)^{b-a-1} ds,
//   A_{-rho}(z) = (1/pi) int_0^inf e^{-z sinh t + rho t} dt.
Complex confluent_by_quadrature(const ConfluentSpec& s, double tol = 1e-12);
Complex anger_weber_by_quadrature(const AngerWeberSpec& s, double tol = 1e-12);

struct VerifyReport {
  Complex expansion;
  Complex quadrature;
  double rel_error = 0.0;
  double fitted_order = 0.0;  // decay exponent of the error in the large parameter
};

// Evaluates both routes, and fits the error decay between |big| and 4 |big|.
VerifyReport confluent_verify(const ConfluentSpec& s, int terms);
VerifyReport anger_weber_verify(const AngerWeberSpec& s, int terms);

// Published coefficient polynomials from the literature; regression anchors
// used by the self test.
namespace published {
Complex C(int m, Complex tau, Complex a);
Complex D(int m, Complex tau, Complex a);
Complex U(int m, Complex tau);
Complex V(int m, Complex tau);
Complex W(int m, Complex tau);
}  // namespace published

}  // namespace laplacext::transition
