#pragma once

#include <complex>
#include <string>

#include "laplacext/errors.hpp"

namespace laplacext::faxen {

using Complex = std::complex<double>;

// Complex gamma function. Lanczos rational approximation with embedded
// coefficients, reflection for Re z < 1/2. Relative error well under 1e-13
// for |z| <= 50 away from the poles.
Complex gamma(Complex z);

// Same backend at extended precision; used internally where the Faxen series
// cancels heavily.
std::complex<long double> gamma_ld(std::complex<long double> z);

enum class FiMethod { series, asymptotic_positive, asymptotic_negative };

std::string to_string(FiMethod m);

struct FaxenQuery {
  double alpha = 0.0;   // in [0, 1)
  Complex beta;         // Re > 0
  Complex x;
};

struct FaxenResult {
  Complex value;
  FiMethod method = FiMethod::series;
  double est_error = 0.0;  // absolute
};

// Fi(alpha, beta; x) = int_0^inf exp(-t + x t^alpha) t^(beta-1) dt.
// Power series sum_n Gamma(alpha n + beta) x^n / n! for moderate |x|
// (summed in extended precision with compensated accumulation); leading-order
// asymptotic forms beyond the switchover, flagged through `method` with a
// heuristic est_error. When the series noise estimate exceeds tol at
// moderate |x| (heavy cancellation), the asymptotic form takes over and the
// method flag says so.
FaxenResult fi(const FaxenQuery& q, double tol = 1e-10);

// Force one evaluation method regardless of |x| (the CLI's --method flag).
FaxenResult fi_forced(const FaxenQuery& q, FiMethod method);

// d^n/dx^n Fi(alpha, beta; x) = Fi(alpha, beta + n alpha; x).
Complex fi_derivative(const FaxenQuery& q, int n);

// Parabolic cylinder function U(a, x), Maclaurin even/odd pair with gamma
// prefactors; asymptotic form for large positive real x where the pair
// cancels. Intended range |a|, |x| <= 20.
Complex parabolic_cylinder_u(Complex a, Complex x);

// Scorer function Hi(x): Taylor series, with the negative-axis asymptotic
// series past the cancellation limit. Intended range |x| <= 20.
Complex scorer_hi(Complex x);

// Hi'(x), through the Faxen connection Hi'(y) = Fi(1/3, 2/3; 3^{1/3} y)/(3^{1/3} pi).
Complex scorer_hi_prime(Complex x);

// Series/asymptotic switchover for fi (|x| threshold).
inline constexpr double kFiSeriesLimit = 25.0;

}  // namespace laplacext::faxen
