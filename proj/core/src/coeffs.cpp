#include "laplacext/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace laplacext::coeffs {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Shared series machinery of the coefficient computations: the conformal map
// w = (p(t) - p(a))^(1/mu), its inverse t - a = sum a_n w^n, and the inverse
// re-read as a series in v = w^mu.
struct Pipeline {
  GeneralizedSeries inverse_w;  // t - a in powers of w
  GeneralizedSeries gv;         // t - a in powers of v^(1/mu)
  double inner_arg;             // branch argument of the leading coefficient a_1
};

Pipeline build_pipeline(const ExpansionSpec& spec, const BranchContext& branch) {
  GeneralizedSeries p_shifted(Exponent(spec.mu), Rational(1), spec.p);
  // w(t-a): leading coefficient p_0^(1/mu) on the chosen branch
  GeneralizedSeries w =
      fractional_pow(p_shifted, Rational(1) / spec.mu, branch.varpi0);
  GeneralizedSeries inv = reversion(w);
  Pipeline pl;
  pl.inverse_w = inv;
  pl.gv = stretch(inv, Rational(1) / spec.mu);
  pl.inner_arg = -branch.varpi0 / spec.mu.value();
  return pl;
}

std::vector<Complex> b_series_coeffs(const ExpansionSpec& spec, const Pipeline& pl,
                                     int N) {
  // q(t)/p'(t) dt/dv = q(t(v)) g'(v) = g^(lambda-1) Q(g) g'
  GeneralizedSeries Q(Exponent(Rational(0)), Rational(1), spec.q);
  GeneralizedSeries lead =
      fractional_pow(pl.gv, Exponent(Rational(-1), spec.lambda), pl.inner_arg);
  GeneralizedSeries composed = compose(Q, pl.gv, pl.inner_arg);
  GeneralizedSeries bser = mul(mul(lead, composed), derivative(pl.gv));
  if (bser.offset().rat != Rational(-1)) {
    throw NumericsError("internal: unexpected offset in the b series");
  }
  if (static_cast<int>(bser.order()) < N) {
    std::ostringstream os;
    os << "insufficient input coefficients: need p_0..p_" << (N - 1) << " and q_0..q_"
       << (N - 1) << " for " << N << " b coefficients (got p:" << spec.p.size()
       << ", q:" << spec.q.size() << ")";
    throw SpecError(os.str());
  }
  std::vector<Complex> b(bser.coeffs().begin(), bser.coeffs().begin() + N);
  return b;
}

std::vector<Complex> c_series_coeffs(const ExpansionSpec& spec, const Pipeline& pl,
                                     int N) {
  if (spec.r.empty()) return std::vector<Complex>(static_cast<std::size_t>(N), Complex{});
  GeneralizedSeries R(Exponent(Rational(0)), Rational(1), spec.r);
  GeneralizedSeries lead = fractional_pow(pl.gv, Exponent(spec.nu), pl.inner_arg);
  GeneralizedSeries rser = mul(lead, compose(R, pl.gv, pl.inner_arg));
  if (rser.offset().rat != spec.nu / spec.mu) {
    throw NumericsError("internal: unexpected offset in the c series");
  }
  if (static_cast<int>(rser.order()) < N + 1) {
    std::ostringstream os;
    os << "insufficient input coefficients: need p_0..p_" << N << " and r_0..r_" << N
       << " for c_1..c_" << N << " (got p:" << spec.p.size() << ", r:" << spec.r.size()
       << ")";
    throw SpecError(os.str());
  }
  std::vector<Complex> c(rser.coeffs().begin() + 1, rser.coeffs().begin() + N + 1);
  return c;
}

}  // namespace

void ExpansionSpec::validate() const {
  if (p.empty() || p[0] == Complex{}) throw SpecError("spec: p_0 must be nonzero");
  if (!(Rational(0) < mu)) throw SpecError("spec: mu must be positive");
  if (nu < Rational(0) || !(nu < mu)) throw SpecError("spec: need mu > nu >= 0");
  if (!(lambda.real() > 0.0)) throw SpecError("spec: Re(lambda) must be positive");
  if (!(theta2 - theta1 >= 0.0) || !(theta2 - theta1 < kPi)) {
    throw SpecError("spec: theta range must satisfy 0 <= theta2 - theta1 < pi");
  }
  auto finite = [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  for (const auto* seq : {&p, &q, &r}) {
    for (Complex v : *seq) {
      if (!finite(v)) throw SpecError("spec: coefficients must be finite");
    }
  }
  if (!finite(lambda) || !finite(p_at_a) || !std::isfinite(varpi)) {
    throw SpecError("spec: parameters must be finite");
  }
}

Complex BranchContext::p0_pow(const ExpansionSpec& spec, Complex e) const {
  const Complex p0 = spec.p[0];
  return std::exp(e * Complex(std::log(std::abs(p0)), varpi0));
}

BranchContext select_branch(const ExpansionSpec& spec, double theta) {
  spec.validate();
  if (!(theta >= spec.theta1 - 1e-12 && theta <= spec.theta2 + 1e-12)) {
    throw SpecError("select_branch: theta outside the admissible range");
  }
  const double base = std::arg(spec.p[0]);
  const double muv = spec.mu.value();
  auto feasible_at = [&](double w0, double th) {
    return std::abs(w0 + th + muv * spec.varpi) <= 0.5 * kPi + 1e-12;
  };
  double best = 0.0;
  bool found = false;
  for (int k = -8; k <= 8; ++k) {
    double w0 = base + 2.0 * kPi * k;
    if (!feasible_at(w0, theta)) continue;
    // theta-uniformity across the declared range
    if (!feasible_at(w0, spec.theta1) || !feasible_at(w0, spec.theta2)) continue;
    if (!found || std::abs(w0) < std::abs(best) - 1e-12 ||
        (std::abs(std::abs(w0) - std::abs(best)) <= 1e-12 && w0 < best)) {
      best = w0;
      found = true;
    }
  }
  if (!found) {
    throw SpecError(
        "select_branch: no branch of arg p_0 satisfies the half-plane condition over "
        "the whole theta range; the contour/angle data contradict the decay condition");
  }
  return BranchContext{best, theta, spec.varpi};
}

std::vector<Complex> compute_b(const ExpansionSpec& spec, const BranchContext& branch,
                               int N) {
  if (N <= 0) return {};
  spec.validate();
  Pipeline pl = build_pipeline(spec, branch);
  return b_series_coeffs(spec, pl, N);
}

std::vector<Complex> compute_c(const ExpansionSpec& spec, const BranchContext& branch,
                               int N) {
  if (N <= 0) return {};
  spec.validate();
  Pipeline pl = build_pipeline(spec, branch);
  return c_series_coeffs(spec, pl, N);
}

Complex bell_partial_ordinary(const std::vector<Complex>& c, int n, int m) {
  if (n < 0 || m < 0 || m > n) throw SpecError("bell: need 0 <= m <= n");
  if (n == 0) return Complex(1.0, 0.0);
  if (m == 0) return Complex(0.0, 0.0);
  // entries of c beyond the supplied length count as zero
  auto cv = [&](int k) {
    return k <= static_cast<int>(c.size()) ? c[static_cast<std::size_t>(k - 1)] : Complex{};
  };
  std::vector<std::vector<Complex>> B(static_cast<std::size_t>(n) + 1,
                                      std::vector<Complex>(static_cast<std::size_t>(m) + 1,
                                                           Complex{}));
  B[0][0] = Complex(1.0, 0.0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= std::min(i, m); ++j) {
      Complex acc{};
      for (int k = 1; k <= i - j + 1; ++k) {
        acc += cv(k) * B[static_cast<std::size_t>(i - k)][static_cast<std::size_t>(j - 1)];
      }
      B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
    }
  }
  return B[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

CoefficientTable compute_f(const ExpansionSpec& spec, const BranchContext& branch,
                           int N) {
  if (N <= 0) throw SpecError("compute_f: N must be positive");
  spec.validate();
  Pipeline pl = build_pipeline(spec, branch);
  CoefficientTable t;
  t.a = pl.inverse_w.coeffs();
  t.b = b_series_coeffs(spec, pl, N);
  t.c = (N >= 2 || !spec.r.empty())
            ? c_series_coeffs(spec, pl, std::max(0, N - 1))
            : std::vector<Complex>{};

  // factorials
  std::vector<double> fact(static_cast<std::size_t>(N) + 1, 1.0);
  for (int i = 1; i <= N; ++i) fact[i] = fact[i - 1] * i;

  // Bell table over the c sequence
  std::vector<std::vector<Complex>> B(static_cast<std::size_t>(N),
                                      std::vector<Complex>(static_cast<std::size_t>(N),
                                                           Complex{}));
  B[0][0] = Complex(1.0, 0.0);
  for (int i = 1; i < N; ++i) {
    for (int j = 1; j <= i; ++j) {
      Complex acc{};
      for (int k = 1; k <= i - j + 1; ++k) {
        acc += t.c[static_cast<std::size_t>(k - 1)] *
               B[static_cast<std::size_t>(i - k)][static_cast<std::size_t>(j - 1)];
      }
      B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
    }
  }

  t.f.resize(static_cast<std::size_t>(N));
  for (int n = 0; n < N; ++n) {
    t.f[n].resize(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
      Complex acc{};
      for (int j = m; j <= n; ++j) {
        acc += t.b[static_cast<std::size_t>(n - j)] *
               B[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)];
      }
      t.f[n][m] = acc / fact[static_cast<std::size_t>(m)];
    }
  }
  return t;
}

Complex GPolyTable::eval(int j, int n, Complex x) const {
  if (j < 0 || j >= static_cast<int>(poly.size()) || n < 0 || n >= mu) {
    throw SpecError("g_poly: index out of range");
  }
  const auto& p = poly[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)];
  Complex acc{};
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

GPolyTable g_poly_table(int mu, Complex lambda, int J) {
  if (mu < 2) throw SpecError("g_poly_table: mu must be an integer >= 2");
  if (J < 0) throw SpecError("g_poly_table: J must be nonnegative");
  GPolyTable t;
  t.mu = mu;
  t.lambda = lambda;
  t.poly.assign(static_cast<std::size_t>(J) + 1,
                std::vector<std::vector<Complex>>(static_cast<std::size_t>(mu)));

  auto deriv = [](const std::vector<Complex>& p) {
    std::vector<Complex> d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<double>(i));
    return d;
  };
  auto padd = [](std::vector<Complex> a, const std::vector<Complex>& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
  };
  auto shift_x = [](const std::vector<Complex>& p) {  // multiply by x
    if (p.empty()) return p;
    std::vector<Complex> s(p.size() + 1, Complex{});
    for (std::size_t i = 0; i < p.size(); ++i) s[i + 1] = p[i];
    return s;
  };
  auto scale_poly = [](std::vector<Complex> p, Complex c) {
    for (auto& v : p) v *= c;
    return p;
  };

  const Complex inv_mu = Complex(1.0, 0.0) / static_cast<double>(mu);
  for (int j = 0; j <= J && j < mu; ++j) {
    t.poly[j][static_cast<std::size_t>(j)] = {Complex(1.0, 0.0)};
  }
  if (J >= mu) {
    t.poly[mu][0] = {lambda * inv_mu};
    if (mu >= 2) t.poly[mu][1] = {Complex{}, inv_mu};
  }
  for (int j = mu; j < J; ++j) {
    const auto& row = t.poly[static_cast<std::size_t>(j)];
    auto& next = t.poly[static_cast<std::size_t>(j) + 1];
    next[0] = padd(deriv(row[0]), scale_poly(row[static_cast<std::size_t>(mu - 1)],
                                             lambda * inv_mu));
    next[1] = padd(padd(row[0], deriv(row[1])),
                   scale_poly(shift_x(row[static_cast<std::size_t>(mu - 1)]), inv_mu));
    for (int n = 2; n < mu; ++n) {
      next[static_cast<std::size_t>(n)] =
          padd(row[static_cast<std::size_t>(n - 1)], deriv(row[static_cast<std::size_t>(n)]));
    }
  }
  return t;
}

std::vector<std::vector<Complex>> rearrange_corollary2(const CoefficientTable& table,
                                                       const GPolyTable& g, Complex x,
                                                       int M) {
  const int mu = g.mu;
  if (M <= 0) throw SpecError("rearrange_corollary2: M must be positive");
  std::vector<std::vector<Complex>> ft(static_cast<std::size_t>(mu));
  for (int n = 0; n < mu; ++n) {
    const int half = (n + 1) / 2;  // ceil(n/2)
    ft[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(M));
    for (int m = 0; m < M; ++m) {
      const int frow = half + m;
      if (frow >= static_cast<int>(table.f.size())) {
        throw SpecError("rearrange_corollary2: insufficient f order for requested M");
      }
      if (half + (half + 2 * m) > g.max_j()) {
        throw SpecError("rearrange_corollary2: insufficient g order for requested M");
      }
      Complex acc{};
      for (int j = m; j <= half + 2 * m; ++j) {
        const int col = j - m;
        if (col > frow) break;  // f is triangular; higher g terms hit zeros
        acc += g.eval(half + j, n, x) * table.f[static_cast<std::size_t>(frow)]
                                               [static_cast<std::size_t>(col)];
      }
      ft[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] = acc;
    }
  }
  return ft;
}

}  // namespace laplacext::coeffs
