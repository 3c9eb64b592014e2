#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tubelift/rational.hpp"

namespace tubelift {

/// Truncated q-expansion sum_{n=0}^{N} c(n) q^n with exact rational
/// coefficients. Binary operations truncate to the shorter operand; reading
/// past the truncation throws instead of returning an implicit zero.
class QSeries {
 public:
  QSeries() = default;
  QSeries(int weight, std::size_t truncation);
  QSeries(int weight, std::vector<Rational> coeffs);

  static QSeries zero(int weight, std::size_t truncation) { return QSeries(weight, truncation); }
  static QSeries one(std::size_t truncation);

  int weight() const { return weight_; }
  std::size_t truncation() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  const Rational& operator[](std::size_t n) const;
  Rational& operator[](std::size_t n);

  bool is_zero() const;
  /// Same coefficients up to the shorter truncation (weights ignored).
  bool agrees_with(const QSeries& other) const;

  QSeries truncated(std::size_t truncation) const;
  QSeries with_weight(int weight) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Rational& c);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
  /// Cauchy product; weights add.
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.weight_ == b.weight_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int weight_ = 0;
  std::vector<Rational> coeffs_;
};

namespace detail {
/// c(n) = sum_{i+j=n} a(i) b(j) for n <= truncation, over integers.
std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b, std::size_t truncation);
}  // namespace detail

}  // namespace tubelift
