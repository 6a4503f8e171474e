#include "laplacext/series.hpp"

#include <cmath>
#include <random>

#include "doctest.h"

using namespace laplacext;

namespace {

GeneralizedSeries make(Rational offset_rat, Rational step, std::vector<Complex> c,
                       Complex sym = {0.0, 0.0}) {
  return GeneralizedSeries(Exponent(offset_rat, sym), step, std::move(c));
}

GeneralizedSeries random_series(std::mt19937& rng, std::size_t n, Rational offset,
                                Rational step, double amp = 1.0) {
  std::uniform_real_distribution<double> u(-amp, amp);
  std::vector<Complex> c(n);
  for (auto& x : c) x = Complex(u(rng), u(rng));
  return GeneralizedSeries(Exponent(offset), step, std::move(c));
}

}  // namespace

TEST_CASE("rational arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(Rational::gcd(a, b) == Rational(1, 6));
  CHECK(Rational::gcd(Rational(2), Rational(3)) == Rational(1));
  CHECK(Rational(1, 6).divides(Rational(1, 2)));
  CHECK(Rational(1, 6).quotient(Rational(1, 2)) == 3);
  CHECK(Rational(-4, 6) == Rational(-2, 3));
  CHECK(Rational(2, -4) == Rational(-1, 2));
}

TEST_CASE("add: linearity and cancellation") {
  auto s1 = make(0, 1, {{1, 0}, {1, 0}});
  auto s2 = make(0, 1, {{2, 0}, {1, 0}});
  auto sum = add(s1, s2);
  CHECK(sum[0] == Complex(3, 0));
  CHECK(sum[1] == Complex(2, 0));

  // u^{1/2}(1+u) + u^{1/2}(-1+u) = 2 u^{3/2}
  auto a = make(Rational(1, 2), 1, {{1, 0}, {1, 0}});
  auto b = make(Rational(1, 2), 1, {{-1, 0}, {1, 0}});
  auto c = add(a, b);
  CHECK(c.offset().rat == Rational(1, 2));
  CHECK(c[0] == Complex(0, 0));
  CHECK(c[1] == Complex(2, 0));
  auto t = c.trimmed();
  CHECK(t.offset().rat == Rational(3, 2));
  CHECK(t[0] == Complex(2, 0));
}

TEST_CASE("add: p(t)-p(0) for p = e^t - t - 1 against finite differences") {
  // p - p0 u^2 with p0 = 1/2 leaves u^3/6 + u^4/24 + ...
  // Expected coefficients from central finite differences of f(t) = e^t - t - 1.
  auto fd_maclaurin = [](int order) {
    // 9-point central differences on a Chebyshev-ish small stencil via
    // Richardson: numerically differentiate (d/dt)^order f at 0 through
    // polynomial fitting on samples +-k h.
    const double h = 0.02;
    const int m = 6;  // samples -m..m
    // Solve Vandermonde least squares for Taylor coefficients up to degree 8.
    const int deg = 9;
    std::vector<std::vector<double>> A(2 * m + 1, std::vector<double>(deg + 1));
    std::vector<double> y(2 * m + 1);
    for (int i = -m; i <= m; ++i) {
      double t = i * h;
      y[i + m] = std::exp(t) - t - 1.0;
      double p = 1.0;
      for (int j = 0; j <= deg; ++j) {
        A[i + m][j] = p;
        p *= t;
      }
    }
    // normal equations (small, well scaled for this h)
    std::vector<std::vector<double>> ata(deg + 1, std::vector<double>(deg + 1, 0.0));
    std::vector<double> aty(deg + 1, 0.0);
    for (std::size_t r = 0; r < A.size(); ++r) {
      for (int i = 0; i <= deg; ++i) {
        aty[i] += A[r][i] * y[r];
        for (int j = 0; j <= deg; ++j) ata[i][j] += A[r][i] * A[r][j];
      }
    }
    // Gaussian elimination
    for (int col = 0; col <= deg; ++col) {
      int piv = col;
      for (int r = col + 1; r <= deg; ++r)
        if (std::abs(ata[r][col]) > std::abs(ata[piv][col])) piv = r;
      std::swap(ata[col], ata[piv]);
      std::swap(aty[col], aty[piv]);
      for (int r = col + 1; r <= deg; ++r) {
        double f = ata[r][col] / ata[col][col];
        for (int cc = col; cc <= deg; ++cc) ata[r][cc] -= f * ata[col][cc];
        aty[r] -= f * aty[col];
      }
    }
    std::vector<double> x(deg + 1);
    for (int r = deg; r >= 0; --r) {
      double s = aty[r];
      for (int cc = r + 1; cc <= deg; ++cc) s -= ata[r][cc] * x[cc];
      x[r] = s / ata[r][r];
    }
    return x[order];
  };

  std::vector<Complex> pc = {{0.5, 0}, {1.0 / 6, 0}, {1.0 / 24, 0}, {1.0 / 120, 0}};
  auto p = make(2, 1, pc);  // p - p(0) = u^2/2 + u^3/6 + ...
  auto neg_lead = make(2, 1, {{-0.5, 0}});
  // -p0 u^2 has guaranteed order u^3 only, so the sum keeps one coefficient;
  // extend the subtrahend's order to keep more.
  auto neg_lead_long = make(2, 1, {{-0.5, 0}, {0, 0}, {0, 0}, {0, 0}});
  auto diff = add(p, neg_lead_long);
  auto lead = diff.trimmed();
  CHECK(lead.offset().rat == Rational(3));
  CHECK(lead[0].real() == doctest::Approx(fd_maclaurin(3)).epsilon(1e-6));
  CHECK(lead[1].real() == doctest::Approx(fd_maclaurin(4)).epsilon(1e-6));
  CHECK(lead[0].real() == doctest::Approx(1.0 / 6).epsilon(1e-12));
  CHECK(lead[1].real() == doctest::Approx(1.0 / 24).epsilon(1e-12));

  // short subtrahend: order contract shrinks to the shorter guarantee
  auto short_diff = add(p, neg_lead);
  CHECK(short_diff.order() == 1);
}

TEST_CASE("mul: basic products") {
  auto a = make(0, 1, {{1, 0}, {1, 0}});
  auto b = make(0, 1, {{1, 0}, {-1, 0}});
  auto p = mul(a, b);
  CHECK(p[0] == Complex(1, 0));
  CHECK(p[1] == Complex(0, 0));
  // order two: u^2 coefficient is beyond the guaranteed order of 2-term inputs

  // u^{1/2} * u^{1/2} = u
  auto h = make(Rational(1, 2), 1, {{1, 0}});
  auto hh = mul(h, h);
  CHECK(hh.offset().rat == Rational(1));
  CHECK(hh[0] == Complex(1, 0));

  // (1 + u + u^2/2)(1 - u + u^2/2) = 1 + 0 u + 0 u^2 (e^u e^-u)
  auto e1 = make(0, 1, {{1, 0}, {1, 0}, {0.5, 0}});
  auto e2 = make(0, 1, {{1, 0}, {-1, 0}, {0.5, 0}});
  auto ee = mul(e1, e2);
  REQUIRE(ee.order() == 3);
  CHECK(ee[0] == Complex(1, 0));
  CHECK(std::abs(ee[1]) == 0.0);
  CHECK(std::abs(ee[2]) == 0.0);
}

TEST_CASE("order-0 series absorbs operations") {
  auto z = GeneralizedSeries::zero(Exponent(Rational(0)), Rational(1));
  auto a = make(0, 1, {{1, 0}, {2, 0}});
  CHECK(add(z, a).order() == 0);
  CHECK(mul(z, a).order() == 0);
}

TEST_CASE("fractional_pow: square roots and branch conventions") {
  // (u^2)^{1/2} with arg 0 -> u
  auto u2 = make(2, 1, {{1, 0}});
  auto r = fractional_pow(u2, Rational(1, 2), 0.0);
  CHECK(r.offset().rat == Rational(1));
  CHECK(r[0] == Complex(1, 0));

  // (u^2/2 + u^3/6)^{1/2} = 2^{-1/2} u (1 + u/6 - u^2/72 + ...)
  auto p = make(2, 1, {{0.5, 0}, {1.0 / 6, 0}, {0, 0}, {0, 0}});
  auto w = fractional_pow(p, Rational(1, 2));
  CHECK(w.offset().rat == Rational(1));
  CHECK(w[0].real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK((w[1] / w[0]).real() == doctest::Approx(1.0 / 6).epsilon(1e-13));
  CHECK((w[2] / w[0]).real() == doctest::Approx(-1.0 / 72).epsilon(1e-13));
  auto sq = mul(w, w);
  CHECK(max_coeff_distance(sq, p) < 1e-14);

  // p0^{1/mu} convention: leading coefficient of (u^3/6)^{1/3} is 6^{-1/3}
  auto aw = make(3, 1, {{1.0 / 6, 0}});
  auto croot = fractional_pow(aw, Rational(1, 3), 0.0);
  CHECK(croot[0].real() == doctest::Approx(std::pow(6.0, -1.0 / 3)).epsilon(1e-14));
  CHECK(croot[0].imag() == 0.0);

  // non-principal branch: arg(c0) chosen as -2pi instead of 0
  auto alt = fractional_pow(u2, Rational(1, 2), -2 * M_PI);
  CHECK(alt[0].real() == doctest::Approx(-1.0).epsilon(1e-12));

  CHECK_THROWS_AS(fractional_pow(GeneralizedSeries::zero(Exponent(Rational(0)), 1),
                                 Rational(1, 2)),
                  SpecError);
}

TEST_CASE("exp_series basics") {
  // exp of an empty (identically zero) positive-offset series is 1
  auto z = make(1, 1, {{0, 0}, {0, 0}});
  auto ez = exp_series(z);
  CHECK(ez[0] == Complex(1, 0));
  for (std::size_t i = 1; i < ez.order(); ++i) CHECK(std::abs(ez[i]) == 0.0);

  // exp(u) to order 4
  auto u = make(1, 1, {{1, 0}, {0, 0}, {0, 0}});
  auto eu = exp_series(u);
  REQUIRE(eu.order() == 4);
  CHECK(eu[0].real() == doctest::Approx(1.0));
  CHECK(eu[1].real() == doctest::Approx(1.0));
  CHECK(eu[2].real() == doctest::Approx(0.5));
  CHECK(eu[3].real() == doctest::Approx(1.0 / 6).epsilon(1e-14));

  CHECK_THROWS_AS(exp_series(make(0, 1, {{1, 0}})), SpecError);
}

TEST_CASE("reversion: identity, u+u^2, and the a2 formula") {
  auto id = make(1, 1, {{1, 0}, {0, 0}, {0, 0}});
  auto rid = reversion(id);
  CHECK(rid[0] == Complex(1, 0));
  CHECK(std::abs(rid[1]) == 0.0);
  CHECK(std::abs(rid[2]) == 0.0);

  // reversion(u + u^2) = u - u^2 + 2u^3 - 5u^4 + ...
  auto w = make(1, 1, {{1, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}});
  auto t = reversion(w);
  CHECK(t[0].real() == doctest::Approx(1.0));
  CHECK(t[1].real() == doctest::Approx(-1.0));
  CHECK(t[2].real() == doctest::Approx(2.0));
  CHECK(t[3].real() == doctest::Approx(-5.0));
  CHECK(t[4].real() == doctest::Approx(14.0));

  // confluent example: w = (p - p(0))^{1/2}, a1 = sqrt(2), a2 = -1/3
  auto p = make(2, 1, {{0.5, 0}, {1.0 / 6, 0}, {1.0 / 24, 0}});
  auto ws = fractional_pow(p, Rational(1, 2), 0.0);
  auto a = reversion(ws);
  CHECK(a[0].real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(a[1].real() == doctest::Approx(-1.0 / 3).epsilon(1e-13));

  CHECK_THROWS_AS(reversion(make(1, 1, {{0, 0}, {1, 0}})), SpecError);
}

TEST_CASE("compose: polynomial case and inverse property") {
  // compose(u^2, u + u^2) = u^2 + 2u^3 + u^4
  auto outer = make(2, 1, {{1, 0}, {0, 0}, {0, 0}});
  auto inner = make(1, 1, {{1, 0}, {1, 0}, {0, 0}});
  auto c = compose(outer, inner);
  CHECK(c.offset().rat == Rational(2));
  CHECK(c[0].real() == doctest::Approx(1.0));
  CHECK(c[1].real() == doctest::Approx(2.0));
  CHECK(c[2].real() == doctest::Approx(1.0));

  // compose(reversion(f), f) = identity
  std::mt19937 rng(42);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = random_series(rng, 8, Rational(1), Rational(1));
    while (std::abs(f[0]) < 0.3) f = random_series(rng, 8, Rational(1), Rational(1));
    auto finv = reversion(f);
    for (const auto& idc : {compose(finv, f), compose(f, finv)}) {
      CHECK(idc.offset().rat == Rational(1));
      CHECK(std::abs(idc[0] - Complex(1, 0)) < 1e-11);
      for (std::size_t i = 1; i < idc.order(); ++i) {
        CHECK(std::abs(idc[i]) < 1e-10 * (1.0 + std::abs(idc[0])));
      }
    }
  }
}

TEST_CASE("algebra properties on random series") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_series(rng, 6, Rational(0), Rational(1, 2));
    auto b = random_series(rng, 9, Rational(1, 2), Rational(1, 2));
    auto c = random_series(rng, 7, Rational(1), Rational(1, 4));

    CHECK(max_coeff_distance(add(a, b), add(b, a)) == 0.0);
    CHECK(max_coeff_distance(mul(a, b), mul(b, a)) < 1e-15);
    CHECK(max_coeff_distance(add(add(a, b), c), add(a, add(b, c))) < 1e-15);
    CHECK(max_coeff_distance(mul(mul(a, b), c), mul(a, mul(b, c))) < 1e-14);

    // identities
    auto one = GeneralizedSeries::constant({1, 0}, Rational(1, 4), 40);
    CHECK(max_coeff_distance(mul(a, one), a) == 0.0);
  }
}

TEST_CASE("fractional_pow round trip at alpha = nu/mu") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> c(6);
    for (auto& x : c) x = Complex(u(rng), u(rng));
    c[0] = Complex(0.5 + 1.5 * std::abs(u(rng)), u(rng));  // |p0| in [0.5, 2]
    auto p = make(2, 1, c);
    Rational alpha(1, 2);
    auto w = fractional_pow(p, alpha);
    auto back = fractional_pow(w, Rational(2));
    double scalemax = 0.0;
    for (auto& x : p.coeffs()) scalemax = std::max(scalemax, std::abs(x));
    CHECK(max_coeff_distance(back, p) <= 1e-12 * scalemax);

    // nu/mu = 1/3 through its inverse as well
    auto w3 = fractional_pow(p, Rational(1, 3));
    auto back3 = fractional_pow(w3, Rational(3));
    CHECK(max_coeff_distance(back3, p) <= 1e-12 * scalemax);
  }
}

TEST_CASE("exp(log) round trip for series with unit constant term") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Complex> c(7);
    c[0] = Complex(1.0, 0.0);
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = Complex(u(rng), u(rng));
    auto s = make(0, 1, c);
    auto ls = log_series(s);
    // drop the (zero) constant before exponentiating
    std::vector<Complex> lc = ls.coeffs();
    CHECK(std::abs(lc[0]) < 1e-15);
    lc.erase(lc.begin());
    auto lpos = make(1, 1, lc);
    auto back = exp_series(lpos);
    CHECK(max_coeff_distance(back, s) < 1e-12);
  }
}

TEST_CASE("stretch and derivative") {
  // d/du (u^{3/2}) = (3/2) u^{1/2}
  auto s = make(Rational(3, 2), 1, {{1, 0}});
  auto d = derivative(s);
  CHECK(d.offset().rat == Rational(1, 2));
  CHECK(d[0].real() == doctest::Approx(1.5));

  // u = v^{1/3}: u^2 + u^3 becomes v^{2/3} + v
  auto t = make(2, 1, {{1, 0}, {1, 0}});
  auto st = stretch(t, Rational(1, 3));
  CHECK(st.offset().rat == Rational(2, 3));
  CHECK(st.step() == Rational(1, 3));
}

TEST_CASE("incompatible lattices are rejected") {
  auto a = make(Rational(1, 3), Rational(1), {{1, 0}});
  auto b = make(Rational(1, 2), Rational(1), {{1, 0}});
  CHECK_THROWS_AS(add(a, b), SpecError);

  auto c = make(Rational(0), Rational(1), {{1, 0}}, Complex(0.7, 0.1));
  CHECK_THROWS_AS(add(a, c), SpecError);
}
