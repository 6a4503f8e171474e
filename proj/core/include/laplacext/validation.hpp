#pragma once

// Independent cross-check oracles used by the self test and the unit tests:
// the b_n and c_n coefficient families evaluated as residues by a
// trapezoidal rule on a circle |t - a| = radius, with the branch of
// (p(t) - p(a))^s tracked continuously around the circle. Deliberately
// independent of the series pipeline (no reversion, no composition): it sums
// the defining local expansions pointwise and integrates. Not used by any
// production path.

#include <cmath>
#include <complex>
#include <vector>

#include "laplacext/coeffs.hpp"

namespace laplacext::validation {

using laplacext::Complex;
using laplacext::coeffs::BranchContext;
using laplacext::coeffs::ExpansionSpec;

namespace detail {

inline constexpr double kPi = 3.14159265358979323846;

struct CircleData {
  std::vector<Complex> s;        // t - a at each node
  std::vector<double> alpha;     // arg(t - a), increasing from varpi
  std::vector<Complex> V;        // p(t) - p(a)
  std::vector<double> argV;      // continuously tracked arg V
  double log_r;
};

inline CircleData walk_circle(const ExpansionSpec& spec, const BranchContext& br,
                              double radius, int K) {
  CircleData d;
  d.log_r = std::log(radius);
  d.s.resize(K);
  d.alpha.resize(K);
  d.V.resize(K);
  d.argV.resize(K);
  const double muv = spec.mu.value();
  for (int j = 0; j < K; ++j) {
    double a = br.varpi + 2.0 * kPi * j / K;
    Complex s = std::polar(radius, a);
    // V = sum_k p_k s^{k+mu} = s^mu * sum_k p_k s^k
    Complex poly{};
    Complex sk(1.0, 0.0);
    for (Complex pk : spec.p) {
      poly += pk * sk;
      sk *= s;
    }
    Complex smu = std::exp(Complex(muv * d.log_r, muv * a));
    Complex V = smu * poly;
    d.s[j] = s;
    d.alpha[j] = a;
    d.V[j] = V;
    if (j == 0) {
      // anchor arg V near varpi0 + mu varpi
      double target = br.varpi0 + muv * br.varpi;
      double arg = std::arg(V);
      while (arg < target - kPi) arg += 2.0 * kPi;
      while (arg > target + kPi) arg -= 2.0 * kPi;
      d.argV[0] = arg;
    } else {
      d.argV[j] = d.argV[j - 1] + std::arg(V / d.V[j - 1]);
    }
  }
  return d;
}

inline Complex horner_on_circle(const std::vector<Complex>& coeffs, Complex s) {
  Complex acc{};
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * s + coeffs[i];
  return acc;
}

}  // namespace detail

// b_n = (1/mu) Res_{t=a} [ q(t) (p(t)-p(a))^{-(n+lambda)/mu} ], n < N.
inline std::vector<Complex> residue_b(const ExpansionSpec& spec, const BranchContext& br,
                                      int N, double radius = 0.45, int K = 512) {
  detail::CircleData d = detail::walk_circle(spec, br, radius, K);
  const double muv = spec.mu.value();
  std::vector<Complex> out(N);
  for (int n = 0; n < N; ++n) {
    Complex e = -(static_cast<double>(n) + spec.lambda) / muv;
    Complex acc{};
    for (int j = 0; j < K; ++j) {
      Complex q = std::exp((spec.lambda - 1.0) * Complex(d.log_r, d.alpha[j])) *
                  detail::horner_on_circle(spec.q, d.s[j]);
      Complex Vpow = std::exp(e * Complex(std::log(std::abs(d.V[j])), d.argV[j]));
      acc += q * Vpow * d.s[j];
    }
    out[n] = acc / (muv * static_cast<double>(K));
  }
  return out;
}

// c_n = (1/mu) Res_{t=a} [ p'(t) r(t) (p(t)-p(a))^{-(n+nu)/mu - 1} ],
// 1 <= n <= N; element k of the result holds c_{k+1}.
inline std::vector<Complex> residue_c(const ExpansionSpec& spec, const BranchContext& br,
                                      int N, double radius = 0.45, int K = 512) {
  detail::CircleData d = detail::walk_circle(spec, br, radius, K);
  const double muv = spec.mu.value();
  const double nuv = spec.nu.value();
  std::vector<Complex> out(N);
  for (int n = 1; n <= N; ++n) {
    Complex e = -((static_cast<double>(n) + nuv) / muv + 1.0);
    Complex acc{};
    for (int j = 0; j < K; ++j) {
      // p'(t) = s^{mu-1} sum_k (k+mu) p_k s^k
      Complex dpoly{};
      Complex sk(1.0, 0.0);
      for (std::size_t k = 0; k < spec.p.size(); ++k) {
        dpoly += (static_cast<double>(k) + muv) * spec.p[k] * sk;
        sk *= d.s[j];
      }
      Complex pprime =
          std::exp(Complex(muv - 1.0, 0.0) * Complex(d.log_r, d.alpha[j])) * dpoly;
      Complex r = std::exp(Complex(nuv, 0.0) * Complex(d.log_r, d.alpha[j])) *
                  detail::horner_on_circle(spec.r, d.s[j]);
      Complex Vpow = std::exp(e * Complex(std::log(std::abs(d.V[j])), d.argV[j]));
      acc += pprime * r * Vpow * d.s[j];
    }
    out[n - 1] = acc / (muv * static_cast<double>(K));
  }
  return out;
}

}  // namespace laplacext::validation
