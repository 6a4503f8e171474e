#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "laplacext/errors.hpp"

namespace laplacext {

// Exact rational number on 64-bit integers. Used for series exponent
// lattices (offsets and steps), where floating point drift would break
// lattice congruence tests. Always stored normalized with den > 0.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw SpecError("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  // Largest rational dividing both a and b: gcd(a, b) on the common
  // denominator lattice. gcd(1/2, 1/3) = 1/6, gcd(2, 3) = 1.
  static Rational gcd(const Rational& a, const Rational& b) {
    std::int64_t n = std::gcd(a.num_ * b.den_, b.num_ * a.den_);
    return Rational(n, a.den_ * b.den_);
  }

  // b / a when the quotient is an exact integer, otherwise nullopt-like -1.
  // Callers test divides() first.
  bool divides(const Rational& b) const {
    if (num_ == 0) return b.num_ == 0;
    std::int64_t n = b.num_ * den_;
    std::int64_t d = b.den_ * num_;
    return n % d == 0;
  }
  std::int64_t quotient(const Rational& b) const {
    return (b.num_ * den_) / (b.den_ * num_);
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void normalize() {
    if (den_ == 0) throw SpecError("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace laplacext
