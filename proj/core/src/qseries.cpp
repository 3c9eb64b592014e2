#include "tubelift/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tubelift/errors.hpp"
#include "tubelift/parallel.hpp"

namespace tubelift {

QSeries::QSeries(int weight, std::size_t truncation) : weight_(weight), coeffs_(truncation + 1, Rational(0)) {}

QSeries::QSeries(int weight, std::vector<Rational> coeffs) : weight_(weight), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("QSeries: at least the constant term is required");
}

QSeries QSeries::one(std::size_t truncation) {
  QSeries s(0, truncation);
  s.coeffs_[0] = 1;
  return s;
}

const Rational& QSeries::operator[](std::size_t n) const {
  if (n >= coeffs_.size())
    throw TruncationError("QSeries: coefficient " + std::to_string(n) + " beyond truncation " +
                          std::to_string(truncation()));
  return coeffs_[n];
}

Rational& QSeries::operator[](std::size_t n) {
  if (n >= coeffs_.size())
    throw TruncationError("QSeries: coefficient " + std::to_string(n) + " beyond truncation " +
                          std::to_string(truncation()));
  return coeffs_[n];
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool QSeries::agrees_with(const QSeries& other) const {
  const std::size_t n = std::min(coeffs_.size(), other.coeffs_.size());
  return std::equal(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n), other.coeffs_.begin());
}

QSeries QSeries::truncated(std::size_t truncation) const {
  if (truncation > this->truncation())
    throw TruncationError("QSeries: cannot extend truncation " + std::to_string(this->truncation()) + " to " +
                          std::to_string(truncation));
  return QSeries(weight_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(truncation + 1)));
}

QSeries QSeries::with_weight(int weight) const {
  QSeries out = *this;
  out.weight_ = weight;
  return out;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

namespace {

// Clears denominators: values = ints / scale.
Integer integer_image(std::span<const Rational> values, std::vector<Integer>& ints) {
  Integer scale = 1;
  for (const auto& v : values) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den().get_mpz_t());
  ints.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) ints[i] = values[i].get_num() * (scale / values[i].get_den());
  return scale;
}

}  // namespace

QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::size_t trunc = std::min(a.truncation(), b.truncation());
  std::vector<Integer> ai, bi;
  const Integer sa = integer_image(a.coefficients(), ai);
  const Integer sb = integer_image(b.coefficients(), bi);
  std::vector<Integer> prod = detail::convolve(ai, bi, trunc);
  const Integer scale = sa * sb;
  std::vector<Rational> coeffs(trunc + 1);
  for (std::size_t n = 0; n <= trunc; ++n) {
    coeffs[n] = Rational(prod[n], scale);
    coeffs[n].canonicalize();
  }
  return QSeries(a.weight() + b.weight(), std::move(coeffs));
}

namespace detail {

std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b, std::size_t truncation) {
  std::vector<Integer> out(truncation + 1, Integer(0));
  const std::size_t na = std::min(a.size(), truncation + 1);
  const std::size_t nb = std::min(b.size(), truncation + 1);
  // Skip zero runs: sparse inputs (theta-like series) are common.
  std::vector<std::size_t> support_a;
  for (std::size_t i = 0; i < na; ++i)
    if (a[i] != 0) support_a.push_back(i);
  parallel::for_each_index(truncation + 1, [&](std::size_t n) {
    Integer acc = 0;
    for (std::size_t i : support_a) {
      if (i > n) break;
      const std::size_t j = n - i;
      if (j < nb) mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    out[n] = std::move(acc);
  });
  return out;
}

}  // namespace detail
}  // namespace tubelift
