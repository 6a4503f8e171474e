#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "laplacext/errors.hpp"
#include "laplacext/faxen.hpp"

namespace laplacext::quad {

using Complex = std::complex<double>;

// Piecewise-linear path in the complex plane, optionally continuing from the
// last node as a ray to infinity. The start node may carry an algebraic
// singularity (t - a)^(lambda - 1); its exponent is recorded here so loaders
// and builtins can validate, the singular factor itself lives in the
// integrand.
struct Contour {
  std::vector<Complex> nodes;
  Complex start_singularity{0.0, 0.0};  // the exponent lambda - 1
  enum class Tail { finite, ray } tail = Tail::finite;
  Complex ray_dir{1.0, 0.0};
};

struct QuadratureResult {
  Complex value{0.0, 0.0};
  double est_error = 0.0;
  long evaluations = 0;
};

// Integrand f(t, u) where u = t - nodes.front() is carried separately so the
// endpoint singularity can be evaluated without cancellation; u is exact even
// when t rounds to the start node.
using Integrand = std::function<Complex(Complex t, Complex u)>;

// Minus the log of the integrand envelope along the tail, up to a constant,
// as a function of arc length s >= 0 from the last node: the point probed is
// nodes.back() + normalize(ray_dir) * s. The ray is cut where the witness
// certifies the remainder negligible at the working tolerance. Required
// whenever the contour has a ray tail.
using DecayWitness = std::function<double(double)>;

// Tanh-sinh (double exponential) quadrature over the contour. Handles an
// algebraic singularity t^(Re lambda - 1), Re lambda > 0, at the start node
// without any user substitution.
QuadratureResult integrate_contour(const Integrand& f, const Contour& path, double tol,
                                   const DecayWitness& decay = {});

// Direct evaluation of Fi(alpha, beta; x) as an integral along arg t =
// ray_angle, |ray_angle| < pi/2. Independent of faxen::fi.
QuadratureResult faxen_by_quadrature(const faxen::FaxenQuery& q, double ray_angle,
                                     double tol = 1e-12);

// |int_zeta^inf exp(-t + x t^alpha) t^(beta-1) dt| divided by
// |exp(-zeta + x zeta^alpha) zeta^(beta-1)|, the tail-to-first-term ratio.
// Integration along the straight line t = zeta + |zeta| s.
double tail_bound_check(double alpha, Complex beta, Complex x, Complex zeta,
                        double tol = 1e-10);

}  // namespace laplacext::quad
