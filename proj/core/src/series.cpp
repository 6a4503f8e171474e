#include "laplacext/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace laplacext {

namespace {

constexpr Complex kZero{0.0, 0.0};

// Common refined step of two lattices.
Rational common_step(const Rational& a, const Rational& b) { return Rational::gcd(a, b); }

}  // namespace

bool sym_equal(Complex a, Complex b) {
  if (a == b) return true;
  double scale = 1.0 + std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= 1e-12 * scale;
}

Exponent exponent_mul(const Exponent& a, const Exponent& b) {
  if (b.sym_zero()) {
    return Exponent(a.rat * b.rat, a.sym * b.rat.value());
  }
  if (a.sym_zero()) {
    return Exponent(a.rat * b.rat, b.sym * a.rat.value());
  }
  throw SpecError("exponent_mul: both factors carry parameter parts");
}

GeneralizedSeries::GeneralizedSeries(Exponent offset, Rational step, std::vector<Complex> coeffs)
    : offset_(offset), step_(step), coeffs_(std::move(coeffs)) {
  if (!(Rational(0) < step_)) throw SpecError("series step must be positive");
}

std::optional<std::size_t> GeneralizedSeries::leading_index() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != kZero) return i;
  }
  return std::nullopt;
}

Complex GeneralizedSeries::coeff_at(const Exponent& e) const {
  if (!sym_equal(e.sym, offset_.sym)) return kZero;
  Rational d = e.rat - offset_.rat;
  if (!step_.divides(d)) return kZero;
  std::int64_t idx = step_.quotient(d);
  if (idx < 0) return kZero;
  if (idx >= static_cast<std::int64_t>(coeffs_.size())) {
    throw SpecError("coeff_at: exponent at or beyond the guaranteed order");
  }
  return coeffs_[static_cast<std::size_t>(idx)];
}

GeneralizedSeries GeneralizedSeries::refined(const Rational& new_step) const {
  if (new_step == step_) return *this;
  if (!new_step.divides(step_)) {
    throw SpecError("refined: new step does not divide the current step");
  }
  std::int64_t f = new_step.quotient(step_);
  std::vector<Complex> c(coeffs_.size() * static_cast<std::size_t>(f), kZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    c[i * static_cast<std::size_t>(f)] = coeffs_[i];
  }
  return GeneralizedSeries(offset_, new_step, std::move(c));
}

GeneralizedSeries GeneralizedSeries::trimmed() const {
  auto lead = leading_index();
  if (!lead || *lead == 0) return *this;
  Exponent off = offset_;
  off.rat = off.rat + Rational(static_cast<std::int64_t>(*lead)) * step_;
  std::vector<Complex> c(coeffs_.begin() + static_cast<std::ptrdiff_t>(*lead), coeffs_.end());
  return GeneralizedSeries(off, step_, std::move(c));
}

GeneralizedSeries GeneralizedSeries::truncated(std::size_t n) const {
  if (n >= coeffs_.size()) return *this;
  std::vector<Complex> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n));
  return GeneralizedSeries(offset_, step_, std::move(c));
}

GeneralizedSeries GeneralizedSeries::constant(Complex c, Rational step, std::size_t order) {
  std::vector<Complex> v(order, kZero);
  if (order > 0) v[0] = c;
  return GeneralizedSeries(Exponent(Rational(0)), step, std::move(v));
}

GeneralizedSeries GeneralizedSeries::zero(Exponent offset, Rational step) {
  return GeneralizedSeries(offset, step, {});
}

GeneralizedSeries add(const GeneralizedSeries& a, const GeneralizedSeries& b) {
  if (!sym_equal(a.offset().sym, b.offset().sym)) {
    throw SpecError("add: offsets carry different parameter parts");
  }
  Rational s = common_step(a.step(), b.step());
  Rational diff = a.offset().rat - b.offset().rat;
  if (!s.divides(diff)) {
    throw SpecError("add: offsets not congruent modulo the common step");
  }
  // Lattice positions relative to the smaller offset.
  Exponent off = a.offset();
  off.rat = std::min(a.offset().rat, b.offset().rat);

  std::int64_t ka = s.quotient(a.offset().rat - off.rat);
  std::int64_t kb = s.quotient(b.offset().rat - off.rat);
  std::int64_t pa = s.quotient(a.step());
  std::int64_t pb = s.quotient(b.step());
  std::int64_t na = static_cast<std::int64_t>(a.order());
  std::int64_t nb = static_cast<std::int64_t>(b.order());
  std::int64_t count = std::min(ka + na * pa, kb + nb * pb);
  if (count < 0) count = 0;

  std::vector<Complex> c(static_cast<std::size_t>(count), kZero);
  for (std::int64_t i = 0; i < na; ++i) {
    std::int64_t j = ka + i * pa;
    if (j < count) c[static_cast<std::size_t>(j)] += a.coeffs()[static_cast<std::size_t>(i)];
  }
  for (std::int64_t i = 0; i < nb; ++i) {
    std::int64_t j = kb + i * pb;
    if (j < count) c[static_cast<std::size_t>(j)] += b.coeffs()[static_cast<std::size_t>(i)];
  }
  return GeneralizedSeries(off, s, std::move(c));
}

GeneralizedSeries sub(const GeneralizedSeries& a, const GeneralizedSeries& b) {
  return add(a, scale(b, Complex(-1.0, 0.0)));
}

GeneralizedSeries scale(const GeneralizedSeries& a, Complex c) {
  std::vector<Complex> v = a.coeffs();
  for (auto& x : v) x *= c;
  return GeneralizedSeries(a.offset(), a.step(), std::move(v));
}

GeneralizedSeries mul(const GeneralizedSeries& a, const GeneralizedSeries& b) {
  Rational s = common_step(a.step(), b.step());
  std::int64_t pa = s.quotient(a.step());
  std::int64_t pb = s.quotient(b.step());
  std::int64_t na = static_cast<std::int64_t>(a.order()) * pa;
  std::int64_t nb = static_cast<std::int64_t>(b.order()) * pb;
  std::int64_t count = std::min(na, nb);
  if (count < 0) count = 0;

  Exponent off = a.offset() + b.offset();
  std::vector<Complex> c(static_cast<std::size_t>(count), kZero);
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(a.order()); ++i) {
    Complex ai = a.coeffs()[static_cast<std::size_t>(i)];
    if (ai == kZero) continue;
    std::int64_t base = i * pa;
    if (base >= count) break;
    std::int64_t jmax = std::min(static_cast<std::int64_t>(b.order()),
                                 (count - 1 - base) / pb + 1);
    for (std::int64_t j = 0; j < jmax; ++j) {
      std::int64_t k = base + j * pb;
      if (k >= count) break;
      c[static_cast<std::size_t>(k)] += ai * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return GeneralizedSeries(off, s, std::move(c));
}

namespace {

// (1 + x)^alpha for a series x with zero constant term, truncated to the
// order of x. alpha enters only through its complex value.
GeneralizedSeries binomial_series(const GeneralizedSeries& x, Complex alpha) {
  std::size_t n = x.order();
  GeneralizedSeries result = GeneralizedSeries::constant(Complex(1.0, 0.0), x.step(), n);
  if (n == 0) return result;
  GeneralizedSeries power = GeneralizedSeries::constant(Complex(1.0, 0.0), x.step(), n);
  Complex coeff(1.0, 0.0);
  for (std::size_t k = 1; k < n; ++k) {
    coeff *= (alpha - Complex(static_cast<double>(k) - 1.0, 0.0)) / static_cast<double>(k);
    power = mul(power, x);
    result = add(result, scale(power, coeff));
    if (coeff == kZero) break;  // integer alpha: binomial terminates
  }
  return result;
}

}  // namespace

GeneralizedSeries fractional_pow(const GeneralizedSeries& a, const Exponent& alpha,
                                 std::optional<double> leading_arg) {
  auto lead = a.leading_index();
  if (!lead) throw SpecError("fractional_pow: zero leading coefficient");
  GeneralizedSeries at = a.trimmed();
  Complex c0 = at.coeffs()[0];

  bool integer_alpha = alpha.sym_zero() && alpha.rat.is_integer();
  double arg0;
  if (leading_arg) {
    arg0 = *leading_arg;
    Complex dir = c0 / std::abs(c0);
    if (std::abs(std::exp(Complex(0.0, arg0)) - dir) > 1e-6) {
      throw SpecError("fractional_pow: branch argument inconsistent with leading coefficient");
    }
  } else {
    arg0 = std::arg(c0);
  }
  (void)integer_alpha;

  // x = a / (c0 u^gamma) - 1, zero constant term on the same lattice.
  std::vector<Complex> xc(at.order(), kZero);
  for (std::size_t i = 1; i < at.order(); ++i) xc[i] = at.coeffs()[i] / c0;
  GeneralizedSeries x(Exponent(Rational(0)), at.step(), std::move(xc));

  Complex av = alpha.value();
  GeneralizedSeries bin = binomial_series(x, av);

  Complex c0a = std::exp(av * Complex(std::log(std::abs(c0)), 0.0) + av * Complex(0.0, arg0));
  Exponent off = exponent_mul(alpha, at.offset());
  std::vector<Complex> out = bin.coeffs();
  for (auto& v : out) v *= c0a;
  return GeneralizedSeries(off, at.step(), std::move(out));
}

GeneralizedSeries fractional_pow(const GeneralizedSeries& a, const Rational& alpha,
                                 std::optional<double> leading_arg) {
  return fractional_pow(a, Exponent(alpha), leading_arg);
}

GeneralizedSeries exp_series(const GeneralizedSeries& a) {
  auto lead = a.leading_index();
  if (!lead) {
    // exp(0 + O(u^B)) = 1 + O(u^B)
    Rational b = a.bound_rat();
    if (!a.offset().sym_zero() || !(Rational(0) < b)) {
      throw SpecError("exp_series: nonpositive leading exponent");
    }
    Rational s = Rational::gcd(a.step(), b);
    std::int64_t count = s.quotient(b);
    std::vector<Complex> c(static_cast<std::size_t>(count), kZero);
    if (count > 0) c[0] = Complex(1.0, 0.0);
    return GeneralizedSeries(Exponent(Rational(0)), s, std::move(c));
  }
  GeneralizedSeries at = a.trimmed();
  if (!at.offset().sym_zero() || !(Rational(0) < at.offset().rat)) {
    throw SpecError("exp_series: leading exponent must be rational and positive");
  }
  Rational gamma = at.offset().rat;
  Rational bound = at.bound_rat();
  Rational s = Rational::gcd(gamma, at.step());
  std::int64_t count = s.quotient(bound);

  // Re-grid the input to the result lattice with offset 0 and full count.
  GeneralizedSeries fine = at.refined(s);
  std::int64_t shift = s.quotient(fine.offset().rat);
  std::vector<Complex> regrid(static_cast<std::size_t>(count), kZero);
  for (std::size_t i = 0; i < fine.order(); ++i) {
    std::int64_t j = shift + static_cast<std::int64_t>(i);
    if (j < count) regrid[static_cast<std::size_t>(j)] = fine.coeffs()[i];
  }
  GeneralizedSeries a0(Exponent(Rational(0)), s, std::move(regrid));

  GeneralizedSeries result =
      GeneralizedSeries::constant(Complex(1.0, 0.0), s, static_cast<std::size_t>(count));
  GeneralizedSeries term = result;
  std::int64_t kmax =
      static_cast<std::int64_t>(std::ceil(bound.value() / gamma.value())) + 1;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    term = scale(mul(term, a0), Complex(1.0 / static_cast<double>(k), 0.0));
    result = add(result, term);
  }
  return result;
}

GeneralizedSeries log_series(const GeneralizedSeries& a, std::optional<double> leading_arg) {
  if (a.order() == 0 || a.coeffs()[0] == kZero || !a.offset().sym_zero() ||
      !a.offset().rat.is_zero()) {
    throw SpecError("log_series: series must start with a nonzero constant term");
  }
  Complex c0 = a.coeffs()[0];
  double arg0 = leading_arg ? *leading_arg : std::arg(c0);
  std::size_t n = a.order();
  std::vector<Complex> xc(n, kZero);
  for (std::size_t i = 1; i < n; ++i) xc[i] = a.coeffs()[i] / c0;
  GeneralizedSeries x(Exponent(Rational(0)), a.step(), std::move(xc));

  GeneralizedSeries result = GeneralizedSeries::constant(
      Complex(std::log(std::abs(c0)), 0.0) + Complex(0.0, arg0), a.step(), n);
  GeneralizedSeries power = GeneralizedSeries::constant(Complex(1.0, 0.0), a.step(), n);
  for (std::size_t k = 1; k < n; ++k) {
    power = mul(power, x);
    double sign = (k % 2 == 1) ? 1.0 : -1.0;
    result = add(result, scale(power, Complex(sign / static_cast<double>(k), 0.0)));
  }
  return result;
}

GeneralizedSeries reversion(const GeneralizedSeries& w) {
  if (!w.offset().sym_zero() || w.offset().rat != Rational(1) || w.step() != Rational(1)) {
    throw SpecError("reversion: series must have offset 1 and step 1");
  }
  std::size_t n = w.order();
  if (n == 0) return w;
  Complex w1 = w.coeffs()[0];
  if (w1 == kZero) throw SpecError("reversion: zero linear coefficient");

  // powers[k][j] = coefficient of u^{j+1} in w^{k+1}, truncated at u^n.
  std::vector<std::vector<Complex>> powers(n, std::vector<Complex>(n, kZero));
  for (std::size_t j = 0; j < n; ++j) powers[0][j] = w.coeffs()[j];
  for (std::size_t k = 1; k < n; ++k) {
    // w^{k+1} = w^k * w; entry i holds the coefficient of u^{i+k+1}
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc(0.0, 0.0);
      // (w^k)_p * w_q with (p+k) + (q+1) = i + k + 1 -> p + q = i
      for (std::size_t p = 0; p <= i; ++p) {
        acc += powers[k - 1][p] * w.coeffs()[i - p];
      }
      powers[k][i] = acc;
    }
  }
  auto coeff_of_power = [&](std::size_t k, std::size_t m) -> Complex {
    // coefficient of u^m in w^k (1-based k, m)
    if (m < k) return kZero;
    return powers[k - 1][m - k];
  };

  std::vector<Complex> a(n, kZero);
  a[0] = Complex(1.0, 0.0) / w1;
  Complex w1n = a[0];
  for (std::size_t m = 2; m <= n; ++m) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = 1; k < m; ++k) {
      acc += a[k - 1] * coeff_of_power(k, m);
    }
    w1n /= w1;  // 1 / w1^m
    a[m - 1] = -acc * w1n;
  }
  return GeneralizedSeries(Exponent(Rational(1)), Rational(1), std::move(a));
}

GeneralizedSeries compose(const GeneralizedSeries& outer, const GeneralizedSeries& inner,
                          std::optional<double> inner_leading_arg) {
  GeneralizedSeries in = inner.trimmed();
  if (in.order() == 0) throw SpecError("compose: inner series is zero");
  if (!in.offset().sym_zero() || !(Rational(0) < in.offset().rat)) {
    throw SpecError("compose: inner series needs a positive rational leading exponent");
  }
  Rational gi = in.offset().rat;
  Rational si = in.step();
  Rational so = outer.step();
  std::int64_t no = static_cast<std::int64_t>(outer.order());
  std::int64_t ni = static_cast<std::int64_t>(in.order());

  // Guaranteed bound: outer tail composed, and inner truncation through the
  // lowest outer term.
  double off_real = outer.offset().value().real();
  double b_outer = (off_real + (so * Rational(no)).value()) * gi.value();
  double b_inner = off_real * gi.value() + (si * Rational(ni)).value();
  double bound = std::min(b_outer, b_inner);

  GeneralizedSeries ipow_off = fractional_pow(in, outer.offset(), inner_leading_arg);
  GeneralizedSeries istep = fractional_pow(in, Exponent(so), inner_leading_arg);

  GeneralizedSeries acc = ipow_off;
  std::optional<GeneralizedSeries> result;
  for (std::int64_t k = 0; k < no; ++k) {
    Complex ok = outer.coeffs()[static_cast<std::size_t>(k)];
    if (ok != kZero) {
      GeneralizedSeries termk = scale(acc, ok);
      result = result ? add(*result, termk) : termk;
    }
    if (k + 1 < no) acc = mul(acc, istep);
  }
  if (!result) {
    // all outer coefficients vanished: a zero series, still good to `bound`
    Rational s = Rational::gcd(si, so * gi);
    Exponent off = exponent_mul(outer.offset(), Exponent(gi));
    double lead0 = off.value().real();
    std::int64_t count0 =
        static_cast<std::int64_t>(std::floor((bound - lead0) / s.value() + 1e-9));
    if (count0 < 0) count0 = 0;
    return GeneralizedSeries(off, s,
                             std::vector<Complex>(static_cast<std::size_t>(count0)));
  }

  // Trim the count to the guaranteed bound.
  double lead = result->offset().value().real();
  double sv = result->step().value();
  std::int64_t count = static_cast<std::int64_t>(std::floor((bound - lead) / sv + 1e-9));
  if (count < 0) count = 0;
  if (count < static_cast<std::int64_t>(result->order())) {
    return result->truncated(static_cast<std::size_t>(count));
  }
  return *result;
}

GeneralizedSeries derivative(const GeneralizedSeries& a) {
  std::vector<Complex> c(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    Exponent e = a.offset();
    e.rat = e.rat + Rational(static_cast<std::int64_t>(i)) * a.step();
    c[i] = a.coeffs()[i] * e.value();
  }
  Exponent off = a.offset();
  off.rat = off.rat - Rational(1);
  return GeneralizedSeries(off, a.step(), std::move(c));
}

GeneralizedSeries stretch(const GeneralizedSeries& a, const Rational& factor) {
  if (!(Rational(0) < factor)) throw SpecError("stretch: factor must be positive");
  Exponent off = exponent_mul(a.offset(), Exponent(factor));
  return GeneralizedSeries(off, a.step() * factor, a.coeffs());
}

double max_coeff_distance(const GeneralizedSeries& a, const GeneralizedSeries& b) {
  if (!sym_equal(a.offset().sym, b.offset().sym)) {
    return std::numeric_limits<double>::infinity();
  }
  Rational s = common_step(a.step(), b.step());
  Rational diff = a.offset().rat - b.offset().rat;
  if (!s.divides(diff)) return std::numeric_limits<double>::infinity();
  GeneralizedSeries ra = a.refined(s);
  GeneralizedSeries rb = b.refined(s);
  // b-grid index of the exponent at a-grid index i is i + shift
  std::int64_t shift = s.quotient(a.offset().rat - b.offset().rat);
  std::int64_t na = static_cast<std::int64_t>(ra.order());
  std::int64_t nb = static_cast<std::int64_t>(rb.order());
  double worst = 0.0;
  for (std::int64_t ia = std::min<std::int64_t>(0, -shift); ia < na; ++ia) {
    std::int64_t ib = ia + shift;
    if (ib >= nb) break;  // beyond b's guaranteed order
    Complex va = (ia >= 0 && ia < na) ? ra.coeffs()[static_cast<std::size_t>(ia)] : kZero;
    Complex vb = (ib >= 0) ? rb.coeffs()[static_cast<std::size_t>(ib)] : kZero;
    worst = std::max(worst, std::abs(va - vb));
  }
  return worst;
}

}  // namespace laplacext
