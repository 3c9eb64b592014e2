#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "tubelift/rational.hpp"

namespace tubelift {

/// Exact element a + b*sqrt(p) of Q(sqrt(p)) for a fixed non-square p > 1.
/// Every p-local quantity of the lift (Satake power sums, local Laurent
/// coefficients, X = p^{k-1/2}) lives here.
class QuadSurd {
 public:
  QuadSurd() = default;
  explicit QuadSurd(std::int64_t radicand, Rational rational_part = 0, Rational surd_part = 0);

  static QuadSurd sqrt_of(std::int64_t radicand) { return QuadSurd(radicand, 0, 1); }
  /// p^{e/2} for any integer e.
  static QuadSurd half_power(std::int64_t radicand, long twice_exponent);

  std::int64_t radicand() const { return radicand_; }
  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadSurd conjugate() const { return QuadSurd(radicand_, a_, -b_); }
  /// a^2 - p b^2
  Rational norm() const { return a_ * a_ - Rational(radicand_) * b_ * b_; }
  QuadSurd inverse() const;

  QuadSurd& operator+=(const QuadSurd& o);
  QuadSurd& operator-=(const QuadSurd& o);
  QuadSurd& operator*=(const QuadSurd& o);
  QuadSurd& operator/=(const QuadSurd& o) { return *this *= o.inverse(); }
  QuadSurd& operator*=(const Rational& q);

  friend QuadSurd operator+(QuadSurd x, const QuadSurd& y) { return x += y; }
  friend QuadSurd operator-(QuadSurd x, const QuadSurd& y) { return x -= y; }
  friend QuadSurd operator*(QuadSurd x, const QuadSurd& y) { return x *= y; }
  friend QuadSurd operator/(QuadSurd x, const QuadSurd& y) { return x /= y; }
  friend QuadSurd operator*(QuadSurd x, const Rational& q) { return x *= q; }
  friend QuadSurd operator*(const Rational& q, QuadSurd x) { return x *= q; }
  QuadSurd operator-() const { return QuadSurd(radicand_, -a_, -b_); }

  friend bool operator==(const QuadSurd& x, const QuadSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.radicand_ == y.radicand_);
  }

  std::string to_string() const;

 private:
  void check_same_field(const QuadSurd& o) const;

  std::int64_t radicand_ = 2;
  Rational a_ = 0;
  Rational b_ = 0;
};

std::ostream& operator<<(std::ostream& os, const QuadSurd& x);

}  // namespace tubelift
