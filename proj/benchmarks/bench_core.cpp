#include <benchmark/benchmark.h>

#include <complex>
#include <random>

#include "laplacext/coeffs.hpp"
#include "laplacext/engine.hpp"
#include "laplacext/faxen.hpp"
#include "laplacext/quadrature.hpp"
#include "laplacext/series.hpp"
#include "laplacext/transition.hpp"

using namespace laplacext;

namespace {

GeneralizedSeries random_series(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> c(n);
  for (auto& x : c) x = Complex(u(rng), u(rng));
  if (std::abs(c[0]) < 0.3) c[0] += Complex(1.0, 0.0);
  return GeneralizedSeries(Exponent(Rational(1)), Rational(1), std::move(c));
}

void BM_SeriesMul(benchmark::State& state) {
  std::mt19937 rng(1);
  auto a = random_series(rng, static_cast<std::size_t>(state.range(0)));
  auto b = random_series(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(a, b));
  }
}
BENCHMARK(BM_SeriesMul)->Arg(8)->Arg(16)->Arg(32);

void BM_Reversion(benchmark::State& state) {
  std::mt19937 rng(2);
  auto w = random_series(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reversion(w));
  }
}
BENCHMARK(BM_Reversion)->Arg(8)->Arg(16)->Arg(32);

void BM_FaxenSeries(benchmark::State& state) {
  faxen::FaxenQuery q{1.0 / 3, {1.0 / 3, 0.0},
                      {static_cast<double>(state.range(0)), 0.0}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(faxen::fi(q));
  }
}
BENCHMARK(BM_FaxenSeries)->Arg(1)->Arg(-4)->Arg(12);

void BM_TanhSinhWatson(benchmark::State& state) {
  const Complex z(2.0, 1.0);
  const Complex lambda(0.75, 0.0);
  quad::Integrand f = [=](Complex, Complex u) {
    return std::exp(-z * u + (lambda - 1.0) * std::log(u));
  };
  quad::Contour c;
  c.nodes = {Complex(0.0, 0.0), Complex(1.0, 0.0)};
  c.tail = quad::Contour::Tail::ray;
  c.ray_dir = {1.0, 0.0};
  quad::DecayWitness w = [=](double s) { return (z * Complex(1.0 + s, 0.0)).real(); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(quad::integrate_contour(f, c, 1e-10, w));
  }
}
BENCHMARK(BM_TanhSinhWatson);

void BM_CoefficientTable(benchmark::State& state) {
  auto spec = transition::anger_weber_series({0.5, 0.0}, 12);
  auto br = coeffs::select_branch(spec, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coeffs::compute_f(spec, br, 8));
  }
}
BENCHMARK(BM_CoefficientTable);

void BM_EvaluateExpansion(benchmark::State& state) {
  auto spec = transition::anger_weber_series({0.5, 0.0}, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine::evaluate(spec, {1e4, 0.0}, 5));
  }
}
BENCHMARK(BM_EvaluateExpansion);

}  // namespace

BENCHMARK_MAIN();
