#include "laplacext/selftest.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "laplacext/engine.hpp"
#include "laplacext/faxen.hpp"
#include "laplacext/quadrature.hpp"
#include "laplacext/transition.hpp"
#include "laplacext/validation.hpp"

namespace laplacext::selftest {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Clock = std::chrono::steady_clock;

struct Harness {
  CriterionResult res;
  Clock::time_point t0 = Clock::now();
  std::ostringstream detail;
  bool ok = true;

  Harness(int id, std::string name) {
    res.id = id;
    res.name = std::move(name);
  }
  void require(bool cond, const std::string& msg) {
    if (!cond) {
      ok = false;
      if (!detail.str().empty()) detail << "; ";
      detail << msg;
    }
  }
  CriterionResult finish(const std::string& pass_note = "") {
    res.passed = ok;
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    res.detail = ok ? pass_note : detail.str();
    return res;
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

coeffs::ExpansionSpec random_spec(std::mt19937& rng, int mu, int len = 12) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  coeffs::ExpansionSpec s;
  s.mu = Rational(mu);
  s.nu = Rational(1);
  s.lambda = {0.6 + std::abs(u(rng)) * 1.5, 0.4 * u(rng)};
  s.p.resize(len);
  s.q.resize(len);
  s.r.resize(len);
  double mag = 0.5 + 1.5 * std::abs(u(rng));
  double phase = 2.5 * u(rng);
  s.p[0] = std::polar(mag, phase);
  for (int i = 1; i < len; ++i) s.p[i] = 0.35 * Complex(u(rng), u(rng));
  for (int i = 0; i < len; ++i) s.q[i] = Complex(u(rng), u(rng));
  for (int i = 0; i < len; ++i) s.r[i] = Complex(u(rng), u(rng));
  if (std::abs(s.q[0]) < 0.2) s.q[0] += Complex(0.5, 0.3);
  if (std::abs(s.r[0]) < 0.2) s.r[0] += Complex(0.4, -0.5);
  s.varpi = -phase / mu;
  return s;
}

// 1. confluent coefficient tables at 8 rational (a, tau) samples
CriterionResult criterion1(bool) {
  Harness h(1, "confluent coefficient tables C_0..C_3, D_0..D_2");
  const std::pair<double, double> samples[8] = {
      {0.5, -1.5}, {2.0 / 3, -1.0}, {1.0, -0.5}, {1.25, -0.25},
      {1.5, 0.25}, {2.0, 0.5},      {7.0 / 3, 1.0}, {3.0, 1.5}};
  double worst = 0.0;
  for (auto [av, tv] : samples) {
    Complex a(av, 0.0), tau(tv, 0.0);
    auto got = transition::confluent_coeff_values(a, tau, 4);
    for (int m = 0; m <= 3; ++m) {
      Complex e = transition::published::C(m, tau, a);
      worst = std::max(worst, std::abs(got.C[m] - e) / std::max(1.0, std::abs(e)));
    }
    for (int m = 0; m <= 2; ++m) {
      Complex e = transition::published::D(m, tau, a);
      worst = std::max(worst, std::abs(got.D[m] - e) / std::max(1.0, std::abs(e)));
    }
  }
  h.require(worst <= 1e-9, "worst relative deviation " + fmt(worst) + " > 1e-9");
  return h.finish("worst relative deviation " + fmt(worst));
}

// 2. Anger-Weber coefficient tables at 8 tau samples
CriterionResult criterion2(bool) {
  Harness h(2, "Anger-Weber coefficient tables U_0..U_3, V_0..V_2, W_0..W_2");
  const double samples[8] = {-1.5, -1.0, -2.0 / 3, -0.25, 0.25, 0.5, 1.0, 1.5};
  double worst = 0.0;
  for (double tv : samples) {
    Complex tau(tv, 0.0);
    auto got = transition::anger_weber_coeff_values(tau, 4);
    for (int m = 0; m <= 3; ++m) {
      Complex e = transition::published::U(m, tau);
      worst = std::max(worst, std::abs(got.U[m] - e) / std::max(1.0, std::abs(e)));
    }
    for (int m = 0; m <= 2; ++m) {
      Complex ev = transition::published::V(m, tau);
      Complex ew = transition::published::W(m, tau);
      worst = std::max(worst, std::abs(got.V[m] - ev) / std::max(1.0, std::abs(ev)));
      worst = std::max(worst, std::abs(got.W[m] - ew) / std::max(1.0, std::abs(ew)));
    }
  }
  h.require(worst <= 1e-9, "worst relative deviation " + fmt(worst) + " > 1e-9");
  return h.finish("worst relative deviation " + fmt(worst));
}

// 3. Anger-Weber convergence slopes against the remainder order
CriterionResult criterion3(bool) {
  Harness h(3, "Anger-Weber error decay fits slope -(N+1)/3 within 0.3");
  const double tau = 0.5;
  const double rhos[3] = {1e2, 1e3, 1e4};
  double quadv[3];
  for (int i = 0; i < 3; ++i) {
    transition::AngerWeberSpec as;
    as.tau = {tau, 0.0};
    as.rho = {rhos[i], 0.0};
    quadv[i] = transition::anger_weber_by_quadrature(as, 1e-13).real();
  }
  std::ostringstream note;
  for (int N : {1, 3, 5}) {
    auto spec = transition::anger_weber_series({tau, 0.0}, N + 8);
    double lz[3], le[3];
    for (int i = 0; i < 3; ++i) {
      auto ev = engine::evaluate(spec, {rhos[i], 0.0}, N);
      double err = std::abs(ev.partial_sums.back().real() / kPi - quadv[i]);
      lz[i] = std::log(rhos[i]);
      le[i] = std::log(err);
    }
    double mx = (lz[0] + lz[1] + lz[2]) / 3, my = (le[0] + le[1] + le[2]) / 3;
    double num = 0, den = 0;
    for (int i = 0; i < 3; ++i) {
      num += (lz[i] - mx) * (le[i] - my);
      den += (lz[i] - mx) * (lz[i] - mx);
    }
    double slope = num / den;
    double stated = -(N + 1.0) / 3.0;
    note << "N=" << N << " slope " << fmt(slope) << " (stated " << fmt(stated)
         << ", parity-corrected " << fmt(stated - 1.0 / 3.0) << ") ";
    h.require(std::abs(slope - stated) <= 0.3,
              "N=" + std::to_string(N) + ": measured slope " + fmt(slope) +
                  " misses stated " + fmt(stated) + " by " +
                  fmt(std::abs(slope - stated)) +
                  " (odd-index terms vanish, so the true remainder is one power of "
                  "rho^{1/3} steeper than the generic rate)");
  }
  return h.finish(note.str());
}

// 4. confluent expansion against quadrature with b^{-3/2} scaling
CriterionResult criterion4(bool) {
  Harness h(4, "confluent expansion vs quadrature at b = 1e3, 1e4");
  transition::ConfluentSpec cs;
  cs.a = {0.75, 0.0};
  cs.tau = {0.5, 0.0};
  double err[2];
  double bvals[2] = {1e3, 1e4};
  double limits[2] = {1e-5, 1e-6};
  for (int i = 0; i < 2; ++i) {
    cs.b = {bvals[i], 0.0};
    Complex expn = transition::confluent_eval(cs, 3);  // terms m = 0..2
    Complex quadv = transition::confluent_by_quadrature(cs);
    err[i] = std::abs(expn - quadv) / std::abs(quadv);
    h.require(err[i] <= limits[i], "relative error " + fmt(err[i]) + " at b = " +
                                       fmt(bvals[i]) + " exceeds " + fmt(limits[i]));
  }
  double ratio = err[0] / err[1];
  double expect = std::pow(10.0, 1.5);
  h.require(ratio >= expect / 3.0 && ratio <= expect * 3.0,
            "error ratio " + fmt(ratio) + " deviates from b^{-3/2} scaling " +
                fmt(expect) + " by more than 3x");
  return h.finish("errors " + fmt(err[0]) + ", " + fmt(err[1]) + ", ratio " +
                  fmt(ratio));
}

// 5. Faxen reduction identities
CriterionResult criterion5(bool) {
  Harness h(5, "Faxen reductions to parabolic cylinder and Scorer functions");
  double worst52 = 0.0, worst54 = 0.0, worst65 = 0.0;
  for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
    for (double beta : {0.75, 1.0}) {
      Complex lhs = faxen::fi({0.5, {beta, 0.0}, {x, 0.0}}).value;
      Complex rhs = std::pow(2.0, 1.0 - beta) * faxen::gamma({2.0 * beta, 0.0}) *
                    std::exp(Complex(x * x / 8.0, 0.0)) *
                    faxen::parabolic_cylinder_u({2.0 * beta - 0.5, 0.0},
                                                {-x / std::sqrt(2.0), 0.0});
      worst52 = std::max(worst52, std::abs(lhs - rhs) / std::abs(lhs));
    }
    Complex lhs = faxen::fi({1.0 / 3, {1.0 / 3, 0.0}, {x, 0.0}}).value;
    Complex rhs = std::pow(3.0, 2.0 / 3) * kPi *
                  faxen::scorer_hi({x * std::pow(3.0, -1.0 / 3), 0.0});
    worst54 = std::max(worst54, std::abs(lhs - rhs) / std::abs(lhs));
  }
  for (int i = 0; i < 9; ++i) {
    double y = -2.0 + 0.5 * i;
    double c13 = std::pow(3.0, 1.0 / 3);
    Complex hipp = faxen::fi({1.0 / 3, {1.0, 0.0}, {c13 * y, 0.0}}).value / kPi;
    Complex resid = hipp - y * faxen::scorer_hi({y, 0.0}) - 1.0 / kPi;
    worst65 = std::max(worst65, std::abs(resid));
  }
  h.require(worst52 <= 1e-8, "parabolic-cylinder identity off by " + fmt(worst52));
  h.require(worst54 <= 1e-8, "Scorer identity off by " + fmt(worst54));
  h.require(worst65 <= 1e-7, "inhomogeneous Airy residual " + fmt(worst65));
  return h.finish("worst deviations " + fmt(worst52) + ", " + fmt(worst54) + ", " +
                  fmt(worst65));
}

// 6. r = 0 leading term equals the classic Laplace/Watson form
CriterionResult criterion6(bool quick) {
  Harness h(6, "classic leading term for r = 0");
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int cases = quick ? 8 : 20;
  double worst = 0.0;
  for (int trial = 0; trial < cases; ++trial) {
    coeffs::ExpansionSpec s;
    int mu = 1 + trial % 3;
    s.mu = Rational(mu);
    s.nu = Rational(mu > 1 ? 1 : 0);
    s.lambda = {0.5 + std::abs(u(rng)), 0.5 * u(rng)};
    s.p.resize(6);
    s.q.resize(6);
    double phase = 2.8 * u(rng);
    s.p[0] = std::polar(0.5 + 1.5 * std::abs(u(rng)), phase);
    for (int i = 1; i < 6; ++i) s.p[i] = 0.3 * Complex(u(rng), u(rng));
    for (int i = 0; i < 6; ++i) s.q[i] = Complex(u(rng), u(rng));
    if (std::abs(s.q[0]) < 0.2) s.q[0] = Complex(1.1, -0.4);
    s.varpi = -phase / mu;
    s.p_at_a = Complex(u(rng), u(rng));
    double th = 0.3 * u(rng);
    s.theta1 = th - 0.1;
    s.theta2 = th + 0.1;
    Complex z = std::polar(5.0 + 20.0 * std::abs(u(rng)), th);

    auto ev = engine::evaluate(s, z, 1);
    coeffs::BranchContext br = coeffs::select_branch(s, th);
    Complex expect = s.q[0] / s.mu.value() * faxen::gamma(s.lambda / s.mu.value()) *
                     std::exp(-z * s.p_at_a) *
                     std::exp(-(s.lambda / s.mu.value()) *
                              Complex(std::log(std::abs(s.p[0]) * std::abs(z)),
                                      br.varpi0 + ev.theta));
    worst = std::max(worst,
                     std::abs(ev.partial_sums[0] - expect) / std::abs(expect));
  }
  h.require(worst <= 1e-12, "worst relative deviation " + fmt(worst) + " > 1e-12");
  return h.finish("worst relative deviation " + fmt(worst));
}

// 7. series pipeline vs residue quadrature for b_n, c_n
CriterionResult criterion7(bool quick) {
  Harness h(7, "dual-path coefficient computation (series vs residues)");
  std::mt19937 rng(777);
  const int cases = quick ? 8 : 20;
  double worst = 0.0;
  for (int trial = 0; trial < cases; ++trial) {
    coeffs::ExpansionSpec s = random_spec(rng, 2 + trial % 2);
    coeffs::BranchContext br = coeffs::select_branch(s, 0.0);
    auto b = coeffs::compute_b(s, br, 9);
    auto c = coeffs::compute_c(s, br, 8);
    auto ob = validation::residue_b(s, br, 9);
    auto oc = validation::residue_c(s, br, 8);
    double bscale = 0.0, cscale = 0.0;
    for (auto v : b) bscale = std::max(bscale, std::abs(v));
    for (auto v : c) cscale = std::max(cscale, std::abs(v));
    for (int n = 0; n < 9; ++n) {
      worst = std::max(worst, std::abs(b[n] - ob[n]) / bscale);
    }
    for (int n = 0; n < 8; ++n) {
      worst = std::max(worst, std::abs(c[n] - oc[n]) / cscale);
    }
  }
  h.require(worst <= 1e-9, "worst relative deviation " + fmt(worst) + " > 1e-9");
  return h.finish("worst relative deviation " + fmt(worst));
}

// 8. tail integrals stay comparable to their first term
CriterionResult criterion8(bool) {
  Harness h(8, "tail-to-first-term ratios bounded over the zeta grid");
  double worst = 0.0;
  for (double alpha : {1.0 / 3, 0.5}) {
    for (double mag : {10.0, 30.0, 100.0}) {
      for (double ang : {0.0, kPi / 3, -kPi / 3, 0.95 * kPi / 2, -0.95 * kPi / 2}) {
        Complex zeta = std::polar(mag, ang);
        double ratio =
            quad::tail_bound_check(alpha, {1.0 / 3, 0.0}, {1.0, 0.0}, zeta);
        worst = std::max(worst, ratio);
      }
    }
  }
  h.require(worst <= 10.0, "largest ratio " + fmt(worst) + " > 10");
  return h.finish("largest ratio " + fmt(worst));
}

// 9. rearranged form against the plain expansion at matched truncation
CriterionResult criterion9(bool quick) {
  Harness h(9, "few-transcendent form consistent with the plain expansion");
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int cases = quick ? 5 : 10;
  double worst = 0.0;
  for (int trial = 0; trial < cases; ++trial) {
    int mu = (trial % 2) ? 2 : 3;
    coeffs::ExpansionSpec s = random_spec(rng, mu);
    Complex z = std::polar(15.0 + 30.0 * std::abs(u(rng)), 0.0);
    const int kmax = 4;
    auto plain = engine::evaluate(s, z, kmax + 1);
    auto cor = engine::evaluate_corollary2(s, z, kmax + 1, 0, kmax);
    worst = std::max(worst, std::abs(plain.partial_sums.back() -
                                     cor.partial_sums.back()) /
                                std::abs(plain.partial_sums.back()));
  }
  h.require(worst <= 1e-10, "worst relative deviation " + fmt(worst) + " > 1e-10");
  return h.finish("worst relative deviation " + fmt(worst));
}

}  // namespace

std::vector<CriterionResult> run_all(bool quick) {
  std::vector<CriterionResult> out;
  out.push_back(criterion1(quick));
  out.push_back(criterion2(quick));
  out.push_back(criterion3(quick));
  out.push_back(criterion4(quick));
  out.push_back(criterion5(quick));
  out.push_back(criterion6(quick));
  out.push_back(criterion7(quick));
  out.push_back(criterion8(quick));
  out.push_back(criterion9(quick));
  return out;
}

int report(const std::vector<CriterionResult>& results, std::ostream& os) {
  int failures = 0;
  for (const auto& r : results) {
    os << (r.passed ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.name
       << " (" << r.detail << ") [" << fmt(r.seconds) << " s]\n";
    if (!r.passed) ++failures;
  }
  return failures;
}

}  // namespace laplacext::selftest
