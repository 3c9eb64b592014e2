#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tubelift/qseries.hpp"
#include "tubelift/quad_surd.hpp"
#include "tubelift/rational.hpp"

namespace tubelift::elliptic {

/// E_w = 1 - (2w/B_w) sum sigma_{w-1}(n) q^n for even w >= 4.
QSeries eisenstein_series(int weight, std::size_t truncation);

/// Delta = q prod (1 - q^n)^24, built from the Jacobi triple product.
QSeries delta_series(std::size_t truncation);

/// Classical level-one dimension of M_w and S_w (zero for odd or negative w).
int modular_space_dimension(int weight);
int cusp_space_dimension(int weight);

/// Reduced-echelon basis of S_w from Delta^c E_4^a E_6^b; row i has leading
/// coefficient 1 at q^{i+1} and zeros at the other pivots.
std::vector<QSeries> cusp_space_basis(int weight, std::size_t truncation);

/// Level-one T_p: b(n) = a(pn) + p^{w-1} a(n/p). The default output
/// truncation is floor(N/p); asking for more throws TruncationError.
QSeries hecke_tp(const QSeries& f, std::int64_t p, std::optional<std::size_t> output_truncation = std::nullopt);

/// Normalized Hecke eigenform f in S_{2k} with rational coefficients.
class Eigenform {
 public:
  /// Re-imposes a(1) = 1, so any nonzero rational multiple of the same form
  /// yields the same Eigenform. Requires dim S_{2k} = 1 and verifies the
  /// eigen-property for p <= 13 inside the truncation.
  static Eigenform from_series(const QSeries& series, int k_half);

  int k_half() const { return k_half_; }
  int weight() const { return 2 * k_half_; }
  const QSeries& series() const { return series_; }
  const Rational& coefficient(std::size_t n) const { return series_[n]; }
  /// a(p); throws TruncationError past the truncation.
  const Rational& ap(std::int64_t p) const;

 private:
  Eigenform(int k_half, QSeries series);

  int k_half_ = 0;
  QSeries series_;
  std::map<std::int64_t, Rational> ap_cache_;
};

/// The unique normalized eigenform of S_{two_k}. Rejects even k
/// (ParityGateError) before checking dim S_{two_k} = 1 (DimensionGateError),
/// so the supported weights are 18, 22 and 26.
Eigenform eigenform(int two_k, std::size_t truncation = 100);

/// The largest prime used when verifying the eigen-property.
inline constexpr std::int64_t kEigenCheckPrimeBound = 13;

/// Satake data at p: s_m = alpha^m + alpha^{-m} in Q(sqrt(p)), with
/// s_0 = 2, s_1 = a(p) p^{1/2-k}, s_{m+1} = s_1 s_m - s_{m-1}.
class SatakeSymbol {
 public:
  SatakeSymbol(std::int64_t p, int k_half, Rational ap);

  std::int64_t p() const { return p_; }
  int k_half() const { return k_half_; }
  QuadSurd power_sum(unsigned m) const;
  /// s_0 .. s_{max_m}.
  std::vector<QuadSurd> power_sums(unsigned max_m) const;

 private:
  std::int64_t p_;
  int k_half_;
  QuadSurd s1_;
};

QuadSurd satake_power_sum(const Eigenform& f, std::int64_t p, unsigned m);

struct RamanujanReport {
  bool passed = true;
  std::int64_t prime_bound = 0;
  std::size_t primes_checked = 0;
  std::optional<std::int64_t> violating_prime;
};

/// Checks a(p)^2 <= 4 p^{2k-1} for every prime p <= prime_bound.
RamanujanReport ramanujan_gate(const QSeries& series, int k_half, std::int64_t prime_bound);
RamanujanReport ramanujan_gate(const Eigenform& f, std::int64_t prime_bound);

}  // namespace tubelift::elliptic
