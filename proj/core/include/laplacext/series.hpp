#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "laplacext/rational.hpp"

namespace laplacext {

using Complex = std::complex<double>;

// Exponent of a series term, kept as an exact rational part plus a
// parameter-carrying complex part (the "lambda" of an expansion enters
// here). Lattice congruence tests use the rational part exactly; the
// complex parts of two compatible series must agree.
struct Exponent {
  Rational rat{0};
  Complex sym{0.0, 0.0};

  Exponent() = default;
  Exponent(Rational r) : rat(r) {}
  Exponent(Rational r, Complex s) : rat(r), sym(s) {}

  Complex value() const { return Complex(rat.value(), 0.0) + sym; }
  bool sym_zero() const { return sym == Complex(0.0, 0.0); }

  friend Exponent operator+(const Exponent& a, const Exponent& b) {
    return Exponent(a.rat + b.rat, a.sym + b.sym);
  }
  friend Exponent operator-(const Exponent& a, const Exponent& b) {
    return Exponent(a.rat - b.rat, a.sym - b.sym);
  }
  friend Exponent operator-(const Exponent& a) { return Exponent(-a.rat, -a.sym); }
};

bool sym_equal(Complex a, Complex b);

// Product of two exponents. Exact only when at least one factor has no
// parameter part; both nonzero would need symbolic algebra and is rejected.
Exponent exponent_mul(const Exponent& a, const Exponent& b);

// Truncated generalized power series
//
//   sum_{n=0}^{N-1} c_n u^{offset + n step}  +  O(u^{offset + N step}),
//
// with complex coefficients, complex offset and exact rational step > 0.
// The truncation order N (the number of stored coefficients) is part of the
// value: every operation propagates the order that its result is actually
// good to. A series of order 0 is legal and annihilates whatever it meets.
class GeneralizedSeries {
 public:
  GeneralizedSeries() : offset_(Rational(0)), step_(1) {}
  GeneralizedSeries(Exponent offset, Rational step, std::vector<Complex> coeffs);

  const Exponent& offset() const { return offset_; }
  const Rational& step() const { return step_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  std::size_t order() const { return coeffs_.size(); }
  Complex operator[](std::size_t n) const { return coeffs_.at(n); }

  // Exponent of the guaranteed O(.) truncation bound, rational part only.
  Rational bound_rat() const {
    return offset_.rat + Rational(static_cast<std::int64_t>(coeffs_.size())) * step_;
  }

  // Index of the first exactly nonzero coefficient, if any.
  std::optional<std::size_t> leading_index() const;

  // Coefficient at exponent e; zero when e lies below or between lattice
  // points, error when e is at or above the truncation bound.
  Complex coeff_at(const Exponent& e) const;

  // Same series on a finer lattice (new_step must divide step). Lossless
  // and idempotent.
  GeneralizedSeries refined(const Rational& new_step) const;

  // Drop leading exact zeros, bumping the offset. Lossless.
  GeneralizedSeries trimmed() const;

  // Keep at most n coefficients.
  GeneralizedSeries truncated(std::size_t n) const;

  static GeneralizedSeries constant(Complex c, Rational step = Rational(1),
                                    std::size_t order = 1);
  static GeneralizedSeries zero(Exponent offset, Rational step);

 private:
  Exponent offset_;
  Rational step_;
  std::vector<Complex> coeffs_;
};

GeneralizedSeries add(const GeneralizedSeries& a, const GeneralizedSeries& b);
GeneralizedSeries sub(const GeneralizedSeries& a, const GeneralizedSeries& b);
GeneralizedSeries scale(const GeneralizedSeries& a, Complex c);
GeneralizedSeries mul(const GeneralizedSeries& a, const GeneralizedSeries& b);

// a^alpha. The leading coefficient c0 must be nonzero; its argument is an
// input (arg(c0) is only defined mod 2pi, and which branch is meant depends
// on context). When leading_arg is not given the principal argument is used.
// Integer alpha never consults the branch.
GeneralizedSeries fractional_pow(const GeneralizedSeries& a, const Exponent& alpha,
                                 std::optional<double> leading_arg = std::nullopt);
GeneralizedSeries fractional_pow(const GeneralizedSeries& a, const Rational& alpha,
                                 std::optional<double> leading_arg = std::nullopt);

// exp of a series with no constant term (rational leading exponent > 0).
GeneralizedSeries exp_series(const GeneralizedSeries& a);

// log of a series with constant term c0 != 0 at exponent zero. The branch of
// log(c0) is principal unless an argument is supplied.
GeneralizedSeries log_series(const GeneralizedSeries& a,
                             std::optional<double> leading_arg = std::nullopt);

// Compositional inverse of w = w1 u + w2 u^2 + ... (offset 1, step 1,
// w1 != 0): returns t with t(w(u)) = u to the common truncation order.
GeneralizedSeries reversion(const GeneralizedSeries& w);

// outer(inner(v)). inner must have positive rational leading exponent;
// fractional powers of inner use inner_leading_arg for the branch.
GeneralizedSeries compose(const GeneralizedSeries& outer, const GeneralizedSeries& inner,
                          std::optional<double> inner_leading_arg = std::nullopt);

// Termwise d/du.
GeneralizedSeries derivative(const GeneralizedSeries& a);

// Substitute u = v^factor (factor > 0): exponents scale, coefficients do not.
GeneralizedSeries stretch(const GeneralizedSeries& a, const Rational& factor);

// Largest absolute coefficient difference on the aligned lattice; infinity
// for incompatible lattices. Test helper.
double max_coeff_distance(const GeneralizedSeries& a, const GeneralizedSeries& b);

}  // namespace laplacext
