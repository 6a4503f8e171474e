#pragma once

#include <complex>
#include <vector>

#include "laplacext/series.hpp"

namespace laplacext::coeffs {

using laplacext::Complex;

// Validated local data of the integral
//
//   I(z) = int exp(-z p(t) + z^(nu/mu) r(t)) q(t) dt
//
// near the critical endpoint a:
//   p(t) = p(a) + sum p_n (t-a)^(n+mu),  q(t) = sum q_n (t-a)^(n+lambda-1),
//   r(t) = sum r_n (t-a)^(n+nu),
// with p_0 != 0, mu > nu >= 0, Re(lambda) > 0. varpi is the slope angle of
// the integration path at a; admissible arg z lies in [theta1, theta2] with
// theta2 - theta1 < pi. The global decay/domination conditions along the
// tail of the path are analytic statements about the whole contour and are
// asserted by the caller via tail_conditions_asserted, not checked here.
struct ExpansionSpec {
  Rational mu{1};
  Rational nu{0};
  Complex lambda{1.0, 0.0};
  Complex p_at_a{0.0, 0.0};
  std::vector<Complex> p;
  std::vector<Complex> q;
  std::vector<Complex> r;
  double varpi = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  bool tail_conditions_asserted = true;

  void validate() const;
};

// The chosen branch of arg p_0: the representative varpi0 of Arg(p_0) + 2 pi Z
// with |varpi0 + theta + mu varpi| <= pi/2. Every fractional power of p_0
// (and of the variables w, v derived from it) uses this argument.
struct BranchContext {
  double varpi0 = 0.0;
  double theta = 0.0;
  double varpi = 0.0;

  // p_0^e = exp(e (log|p_0| + i varpi0))
  Complex p0_pow(const ExpansionSpec& spec, Complex e) const;
};

// Chooses varpi0. The admissible representative must be the same across the
// whole theta range; anything else means the angle data contradict the path
// decay condition and is an error.
BranchContext select_branch(const ExpansionSpec& spec, double theta);

// Computed coefficient families. Index conventions: a[k] is a_{k+1} of the
// inverse map t - a = sum a_n w^n; b[n] is b_n; c[k] is c_{k+1} (the c
// sequence starts at index 1); f[n][m] is triangular, 0 <= m <= n.
struct CoefficientTable {
  std::vector<Complex> a;
  std::vector<Complex> b;
  std::vector<Complex> c;
  std::vector<std::vector<Complex>> f;
};

// b_0 .. b_{N-1} of q(t)/p'(t) = sum b_n v^{(n+lambda)/mu - 1}.
std::vector<Complex> compute_b(const ExpansionSpec& spec, const BranchContext& branch,
                               int N);

// c_1 .. c_N of r(t) - (r_0/p_0^{nu/mu}) v^{nu/mu} = sum_{n>=1} c_n v^{(n+nu)/mu};
// returned vector has size N, element k holding c_{k+1}.
std::vector<Complex> compute_c(const ExpansionSpec& spec, const BranchContext& branch,
                               int N);

// Partial ordinary Bell polynomial B_{n,m}(c_1, ..., c_{n-m+1}); the input
// vector holds c_1 at index 0.
Complex bell_partial_ordinary(const std::vector<Complex>& c, int n, int m);

// Full table through f_{N-1, m}.
CoefficientTable compute_f(const ExpansionSpec& spec, const BranchContext& branch, int N);

// Polynomials g_{j,n}(x) expressing the j-th derivative of
// w(x) = Fi(1/mu, lambda/mu; x) in terms of derivatives of order < mu,
// via the ODE mu w^(mu) = x w' + lambda w.
struct GPolyTable {
  int mu = 2;
  Complex lambda{1.0, 0.0};
  // poly[j][n]: ascending coefficients in x; empty means the zero polynomial
  std::vector<std::vector<std::vector<Complex>>> poly;

  Complex eval(int j, int n, Complex x) const;
  int max_j() const { return static_cast<int>(poly.size()) - 1; }
};

GPolyTable g_poly_table(int mu, Complex lambda, int J);

// Rearranged coefficients of the few-transcendent form:
//   ftilde_{n,m} = sum_{j=m}^{ceil(n/2)+2m} g_{ceil(n/2)+j, n}(x) f_{ceil(n/2)+m, j-m}
// for 0 <= n <= mu-1, 0 <= m < M. Requires integer mu >= 2 and nu = 1.
std::vector<std::vector<Complex>> rearrange_corollary2(const CoefficientTable& table,
                                                       const GPolyTable& g, Complex x,
                                                       int M);

}  // namespace laplacext::coeffs
