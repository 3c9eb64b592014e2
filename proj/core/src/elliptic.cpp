#include "tubelift/elliptic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tubelift/arithmetic.hpp"
#include "tubelift/errors.hpp"

namespace tubelift::elliptic {

namespace {

QSeries from_integers(int weight, std::vector<Integer> ints) {
  std::vector<Rational> coeffs;
  coeffs.reserve(ints.size());
  for (auto& v : ints) coeffs.emplace_back(std::move(v));
  return QSeries(weight, std::move(coeffs));
}

void require_prime(std::int64_t p) {
  if (!arith::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

}  // namespace

QSeries eisenstein_series(int weight, std::size_t truncation) {
  if (weight < 4 || weight % 2 != 0)
    throw std::invalid_argument("eisenstein_series: weight must be even and at least 4, got " + std::to_string(weight));
  std::vector<Integer> sigma(truncation + 1, Integer(0));
  for (std::size_t d = 1; d <= truncation; ++d) {
    const Integer dp = ipow(static_cast<long>(d), static_cast<unsigned long>(weight - 1));
    for (std::size_t n = d; n <= truncation; n += d) sigma[n] += dp;
  }
  const Rational factor = -Rational(2 * weight) / arith::bernoulli(static_cast<unsigned>(weight));
  std::vector<Rational> coeffs(truncation + 1);
  coeffs[0] = 1;
  for (std::size_t n = 1; n <= truncation; ++n) coeffs[n] = factor * Rational(sigma[n]);
  return QSeries(weight, std::move(coeffs));
}

QSeries delta_series(std::size_t truncation) {
  // prod (1-q^n)^3 = sum_{j>=0} (-1)^j (2j+1) q^{j(j+1)/2}
  std::vector<Integer> eta3(truncation + 1, Integer(0));
  for (std::size_t j = 0; j * (j + 1) / 2 <= truncation; ++j)
    eta3[j * (j + 1) / 2] = (j % 2 == 0 ? 1 : -1) * static_cast<long>(2 * j + 1);
  auto p6 = detail::convolve(eta3, eta3, truncation);
  auto p12 = detail::convolve(p6, p6, truncation);
  auto p24 = detail::convolve(p12, p12, truncation);
  std::vector<Integer> delta(truncation + 1, Integer(0));
  for (std::size_t n = 1; n <= truncation; ++n) delta[n] = p24[n - 1];
  return from_integers(12, std::move(delta));
}

int modular_space_dimension(int weight) {
  if (weight < 0 || weight % 2 != 0) return 0;
  if (weight == 2) return 0;
  return weight / 12 + (weight % 12 == 2 ? 0 : 1);
}

int cusp_space_dimension(int weight) {
  if (weight < 12 || weight % 2 != 0) return 0;
  return modular_space_dimension(weight) - 1;
}

std::vector<QSeries> cusp_space_basis(int weight, std::size_t truncation) {
  if (weight % 2 != 0) throw std::invalid_argument("cusp_space_basis: odd weight " + std::to_string(weight));
  const int dim = cusp_space_dimension(weight);
  std::vector<QSeries> basis;
  if (dim == 0) return basis;
  if (truncation < static_cast<std::size_t>(dim))
    throw TruncationError("cusp_space_basis: truncation " + std::to_string(truncation) + " below dimension " +
                          std::to_string(dim));
  const QSeries e4 = eisenstein_series(4, truncation);
  const QSeries e6 = eisenstein_series(6, truncation);
  const QSeries delta = delta_series(truncation);
  QSeries delta_power = delta;
  for (int c = 1; c <= dim; ++c) {
    // weight - 12c = 4a + 6b with b in {0, 1}
    const int rest = weight - 12 * c;
    const int b = (rest % 4 == 0) ? 0 : 1;
    const int a = (rest - 6 * b) / 4;
    QSeries g = delta_power;
    for (int i = 0; i < a; ++i) g = g * e4;
    if (b == 1) g = g * e6;
    basis.push_back(g.with_weight(weight));
    if (c < dim) delta_power = delta_power * delta;
  }
  // Rows are upper triangular with unit pivot at q^{c}; clear above pivots.
  for (int i = dim - 1; i >= 0; --i) {
    for (int j = 0; j < i; ++j) {
      const Rational c = basis[j][static_cast<std::size_t>(i + 1)];
      if (c != 0) basis[j] -= basis[i] * c;
    }
  }
  return basis;
}

QSeries hecke_tp(const QSeries& f, std::int64_t p, std::optional<std::size_t> output_truncation) {
  require_prime(p);
  const std::size_t up = static_cast<std::size_t>(p);
  const std::size_t max_out = f.truncation() / up;
  const std::size_t out_trunc = output_truncation.value_or(max_out);
  if (out_trunc > max_out)
    throw TruncationError("hecke_tp: truncation " + std::to_string(f.truncation()) + " is below " + std::to_string(p) +
                          " * " + std::to_string(out_trunc));
  const Rational pw = Rational(ipow(p, static_cast<unsigned long>(f.weight() - 1)));
  QSeries out(f.weight(), out_trunc);
  for (std::size_t n = 0; n <= out_trunc; ++n) {
    Rational b = f[up * n];
    if (n % up == 0) b += pw * f[n / up];
    out[n] = b;
  }
  return out;
}

Eigenform::Eigenform(int k_half, QSeries series) : k_half_(k_half), series_(std::move(series)) {
  for (auto p : arith::primes_up_to(static_cast<std::int64_t>(series_.truncation()))) ap_cache_.emplace(p, series_[static_cast<std::size_t>(p)]);
}

Eigenform Eigenform::from_series(const QSeries& series, int k_half) {
  if (series.weight() != 2 * k_half)
    throw std::invalid_argument("Eigenform: series weight " + std::to_string(series.weight()) + " is not 2k = " +
                                std::to_string(2 * k_half));
  if (cusp_space_dimension(2 * k_half) != 1)
    throw DimensionGateError("Eigenform: dim S_" + std::to_string(2 * k_half) + " = " +
                             std::to_string(cusp_space_dimension(2 * k_half)) + ", need 1");
  if (series.truncation() < 1 || series[1] == 0) throw std::invalid_argument("Eigenform: a(1) must be nonzero");
  if (series[0] != 0) throw std::invalid_argument("Eigenform: constant term of a cusp form must vanish");
  QSeries normalized = series * (1 / series[1]);
  for (auto p : arith::primes_up_to(std::min<std::int64_t>(kEigenCheckPrimeBound, static_cast<std::int64_t>(normalized.truncation())))) {
    const QSeries image = hecke_tp(normalized, p);
    const Rational& lambda = normalized[static_cast<std::size_t>(p)];
    for (std::size_t n = 0; n <= image.truncation(); ++n) {
      if (image[n] != lambda * normalized[n])
        throw CheckFailure("Eigenform: T_" + std::to_string(p) + " eigen-ratio breaks at n = " + std::to_string(n));
    }
  }
  return Eigenform(k_half, std::move(normalized));
}

const Rational& Eigenform::ap(std::int64_t p) const {
  auto it = ap_cache_.find(p);
  if (it != ap_cache_.end()) return it->second;
  require_prime(p);
  throw TruncationError("Eigenform: a(" + std::to_string(p) + ") beyond truncation " + std::to_string(series_.truncation()));
}

Eigenform eigenform(int two_k, std::size_t truncation) {
  if (two_k <= 0 || two_k % 2 != 0) throw std::invalid_argument("eigenform: weight must be a positive even integer");
  const int k = two_k / 2;
  if (k % 2 == 0)
    throw ParityGateError("weight " + std::to_string(two_k) + ": k = " + std::to_string(k) +
                          " is even, but the degree-2 lift needs k odd (k = n mod 2 with n = 1)");
  if (cusp_space_dimension(two_k) != 1)
    throw DimensionGateError("weight " + std::to_string(two_k) + ": dim S_" + std::to_string(two_k) + " = " +
                             std::to_string(cusp_space_dimension(two_k)) + ", only one-dimensional spaces are supported");
  if (truncation < static_cast<std::size_t>(kEigenCheckPrimeBound))
    throw TruncationError("eigenform: truncation must be at least " + std::to_string(kEigenCheckPrimeBound));
  auto basis = cusp_space_basis(two_k, truncation);
  return Eigenform::from_series(basis.front(), k);
}

SatakeSymbol::SatakeSymbol(std::int64_t p, int k_half, Rational ap)
    : p_(p), k_half_(k_half), s1_(p, 0, ap / Rational(ipow(p, static_cast<unsigned long>(k_half)))) {
  require_prime(p);
}

QuadSurd SatakeSymbol::power_sum(unsigned m) const { return power_sums(m).back(); }

std::vector<QuadSurd> SatakeSymbol::power_sums(unsigned max_m) const {
  std::vector<QuadSurd> s;
  s.reserve(max_m + 1);
  s.emplace_back(p_, 2, 0);
  if (max_m >= 1) s.push_back(s1_);
  for (unsigned m = 2; m <= max_m; ++m) s.push_back(s1_ * s[m - 1] - s[m - 2]);
  return s;
}

QuadSurd satake_power_sum(const Eigenform& f, std::int64_t p, unsigned m) {
  return SatakeSymbol(p, f.k_half(), f.ap(p)).power_sum(m);
}

RamanujanReport ramanujan_gate(const QSeries& series, int k_half, std::int64_t prime_bound) {
  RamanujanReport report;
  report.prime_bound = prime_bound;
  if (prime_bound > static_cast<std::int64_t>(series.truncation()))
    throw TruncationError("ramanujan_gate: bound " + std::to_string(prime_bound) + " exceeds truncation " +
                          std::to_string(series.truncation()));
  for (auto p : arith::primes_up_to(prime_bound)) {
    const Rational& ap = series[static_cast<std::size_t>(p)];
    ++report.primes_checked;
    if (ap * ap > Rational(4 * ipow(p, static_cast<unsigned long>(2 * k_half - 1)))) {
      report.passed = false;
      report.violating_prime = p;
      break;
    }
  }
  return report;
}

RamanujanReport ramanujan_gate(const Eigenform& f, std::int64_t prime_bound) {
  return ramanujan_gate(f.series(), f.k_half(), prime_bound);
}

}  // namespace tubelift::elliptic
