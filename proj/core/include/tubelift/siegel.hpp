#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "tubelift/fourier_index.hpp"
#include "tubelift/qseries.hpp"
#include "tubelift/rational.hpp"

namespace tubelift::siegel {

/// Cohen's H(r, N): H(r, 0) = zeta(1-2r); for N > 0 with (-1)^r N = D f^2,
/// D fundamental, H(r, N) = L(1-r, chi_D) sum_{d|f} mu(d) chi_D(d) d^{r-1}
/// sigma_{2r-1}(f/d); zero when (-1)^r N has no such representation.
Rational cohen_H(int r, std::int64_t N);

/// Two scalings of the same degree-2 Eisenstein series of weight k+1.
enum class EisensteinNormalization {
  /// A(0) = 1; the Phi-image is the degree-1 E_{k+1}.
  kUnitConstantTerm,
  /// A(T) = sum_{d | content} d^k H(k, D_T/d^2) for every T != 0, so a
  /// primitive T has A(T) = L(1-k, chi) * (divisor sum). This is the
  /// first scaling divided by C = 2 / (zeta(-k) zeta(1-2k)).
  kLValue,
};

/// 2 / (zeta(1-l) zeta(3-2l)) for l = k+1: kUnitConstantTerm / kLValue.
Rational eisenstein_normalizing_constant(int k);

/// Fourier coefficient of the weight-(k+1) Siegel Eisenstein series; k odd,
/// k >= 3. T must be positive semi-definite.
Rational eisenstein_coeff(int k, const FourierIndex& t,
                          EisensteinNormalization norm = EisensteinNormalization::kUnitConstantTerm);

/// Coefficients on reduced indices with n + m <= trace_bound. Lookups reduce
/// first; an in-range index missing from the table has coefficient 0.
class SiegelExpansion {
 public:
  SiegelExpansion() = default;
  SiegelExpansion(int weight, std::int64_t trace_bound, std::map<FourierIndex, Rational> table);

  int weight() const { return weight_; }
  std::int64_t trace_bound() const { return trace_bound_; }
  const std::string& group() const { return group_; }
  const std::map<FourierIndex, Rational>& table() const { return table_; }

  /// nullopt when the reduced index lies beyond the trace bound.
  std::optional<Rational> at(const FourierIndex& t) const;
  /// Like at() but throws TruncationError when out of range.
  Rational coefficient(const FourierIndex& t) const;
  bool in_range(const FourierIndex& t) const;
  bool is_zero() const;
  /// Entries with n + m <= bound (bound must not exceed the current one).
  SiegelExpansion truncated(std::int64_t bound) const;

  friend bool operator==(const SiegelExpansion&, const SiegelExpansion&) = default;

 private:
  int weight_ = 0;
  std::int64_t trace_bound_ = 0;
  std::string group_ = "Sp4";
  std::map<FourierIndex, Rational> table_;
};

/// Full Eisenstein expansion (including T = 0 and rank-one T).
SiegelExpansion eisenstein_expand(int k, std::int64_t trace_bound,
                                  EisensteinNormalization norm = EisensteinNormalization::kUnitConstantTerm);

/// Siegel Phi-operator: sum_n A((n,0,0)) q^n up to the trace bound.
QSeries phi_operator(const SiegelExpansion& f);

/// Level-one degree-2 Hecke operator T(p) on Fourier coefficients:
///   a'(T) = a(pT) + p^{w-2} sum_U a(tU T U / p) + p^{2w-3} a(T/p),
/// U over the p+1 index-p sublattice bases, a(.) = 0 off the semi-integral
/// lattice. The image covers n + m <= floor(bound / p).
SiegelExpansion hecke_tp_degree2(const SiegelExpansion& f, std::int64_t p);

struct EigenRatioReport {
  bool constant = true;
  std::optional<Rational> ratio;     // lambda with image = lambda * f
  std::size_t indices_compared = 0;  // indices where f(T) != 0
  std::optional<FourierIndex> first_mismatch;
};

/// Compares T(p) f against f over every index of the image.
EigenRatioReport hecke_eigen_ratio(const SiegelExpansion& f, std::int64_t p);

}  // namespace tubelift::siegel
