#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tubelift/elliptic.hpp"
#include "tubelift/fourier_index.hpp"
#include "tubelift/quad_surd.hpp"
#include "tubelift/rational.hpp"
#include "tubelift/siegel.hpp"

namespace tubelift::lift {

using siegel::FourierIndex;
using siegel::SiegelExpansion;

class LocalPolynomialCache;

/// sum_{m=0}^{M} c_m (X^m + X^{-m}) with the m = 0 term counted once and
/// coefficients in Q(sqrt(p)).
class SymLaurent {
 public:
  SymLaurent() = default;
  SymLaurent(std::int64_t radicand, std::vector<QuadSurd> coeffs);

  std::int64_t radicand() const { return radicand_; }
  /// M, the number of stored coefficients minus one.
  unsigned degree_bound() const { return coeffs_.empty() ? 0 : static_cast<unsigned>(coeffs_.size() - 1); }
  /// Largest m with c_m != 0 (0 for the zero polynomial).
  unsigned degree() const;
  QuadSurd coefficient(unsigned m) const;
  std::span<const QuadSurd> coefficients() const { return coeffs_; }
  /// Coefficients all rational.
  bool has_rational_coefficients() const;

  QuadSurd evaluate(const QuadSurd& x) const;
  /// X^m + X^{-m} replaced by s[m]; s must hold s_0 .. s_M.
  QuadSurd evaluate_power_sums(std::span<const QuadSurd> s) const;

  friend bool operator==(const SymLaurent& a, const SymLaurent& b);
  std::string to_string() const;

 private:
  std::int64_t radicand_ = 2;
  std::vector<QuadSurd> coeffs_;
};

/// Eisenstein coefficients of one index across several weights k' (weight
/// k'+1 series, L-value scaling), all sharing the fundamental discriminant.
struct CompatibleFamilySample {
  FourierIndex index;
  std::int64_t fundamental = 0;
  std::vector<std::pair<int, Rational>> weight_samples;
};

/// p-local data of T that the local polynomial depends on.
struct LocalKey {
  std::int64_t p = 2;
  int content_exponent = 0;    // ord_p gcd(n, r, m)
  int conductor_exponent = 0;  // ord_p f_T
  int chi = 1;                 // chi_{d_T}(p)

  auto operator<=>(const LocalKey&) const = default;
  /// ord_p(f_T * content): the degree bound used for interpolation.
  unsigned degree_bound() const { return static_cast<unsigned>(content_exponent + conductor_exponent); }
};

LocalKey local_key(const FourierIndex& t, std::int64_t p);

/// The smallest |D| among negative fundamental discriminants with
/// kronecker(D, p) = chi.
std::int64_t canonical_discriminant(std::int64_t p, int chi);

/// p^a times the principal form of discriminant |D0| p^{2(b-a)}: an index with
/// the given local data at p and conductor a power of p.
FourierIndex local_sample_index(const LocalKey& key, std::int64_t fundamental);

/// Odd k' = first, first + 2, ... (count entries).
std::vector<int> weight_ladder(std::size_t count, int first = 9);

CompatibleFamilySample sample_family(const FourierIndex& t, std::span<const int> weights);

/// Solves sum_m c_m (X^m + X^{-m}) = (A_{T'}(k') / L(1-k', chi)) X^{-b} at
/// X = p^{k'-1/2} over every sample. The index must have conductor a power
/// of p. Needs at least degree_bound + 2 samples; throws CheckFailure when
/// the overdetermined system is inconsistent. Factors of other primes
/// dividing the conductor are divided out with polynomials from the cache.
SymLaurent interpolate_local_poly(const CompatibleFamilySample& samples, std::int64_t p,
                                  LocalPolynomialCache& cache);

/// The same system with independent unknowns d_{-M} .. d_M, solved from
/// 2M + 2 samples. Used to test the X <-> 1/X symmetry instead of assuming it.
struct LaurentSolution {
  unsigned degree_bound = 0;
  std::vector<QuadSurd> coeffs;  // coeffs[i] multiplies X^{i - degree_bound}
  bool is_symmetric() const;
};
LaurentSolution interpolate_full_laurent(const CompatibleFamilySample& samples, std::int64_t p,
                                         LocalPolynomialCache& cache);

/// Write-once store of local polynomials keyed by LocalKey. When a directory
/// is set, entries are also read from and written to files there.
class LocalPolynomialCache {
 public:
  LocalPolynomialCache() = default;
  explicit LocalPolynomialCache(std::optional<std::filesystem::path> directory);

  /// Cache backed by $TUBELIFT_CACHE_DIR when set.
  static LocalPolynomialCache& global();

  SymLaurent get(const LocalKey& key);
  std::size_t size() const;

 private:
  std::optional<std::filesystem::path> directory_;
  mutable std::mutex mutex_;
  std::map<LocalKey, SymLaurent> table_;
};

/// Interpolates at local_sample_index(key, canonical_discriminant) from
/// ladder A = weight_ladder(M + 2) and the following ladder B, requires both to
/// agree, and confirms symmetry with a full Laurent solve.
SymLaurent compute_local_polynomial(const LocalKey& key, LocalPolynomialCache& cache);

/// Which primes contribute F_p(T; alpha_p) to a coefficient.
enum class ProductRange {
  kDiscriminantPrimes,  // every p | D_T
  kFundamentalPrimes,   // only p | d_T; other p | f_T keep only p^{b(k-1/2)}
};

/// s_0 .. s_{max_m} of the Satake parameter at p.
using PowerSumProvider = std::function<std::vector<QuadSurd>(std::int64_t p, unsigned max_m)>;

/// L(1-k, chi_{d_T}) prod_p p^{b(k-1/2)} F_p(T; alpha_p). Each prime's
/// factor must come out rational; otherwise CheckFailure.
Rational assemble_coefficient(int k, const FourierIndex& t, const PowerSumProvider& power_sums,
                              ProductRange range = ProductRange::kDiscriminantPrimes,
                              LocalPolynomialCache& cache = LocalPolynomialCache::global());

/// Lift coefficient A_F(T) of the normalized eigenform f in S_{2k}, k odd.
Rational lift_coeff(const elliptic::Eigenform& f, const FourierIndex& t,
                    ProductRange range = ProductRange::kDiscriminantPrimes,
                    LocalPolynomialCache& cache = LocalPolynomialCache::global());

/// The lift formula with alpha_p -> p^{k-1/2}, i.e. a(p) = 1 + p^{2k-1}.
Rational eisenstein_degeneration(int k, const FourierIndex& t,
                                 ProductRange range = ProductRange::kDiscriminantPrimes,
                                 LocalPolynomialCache& cache = LocalPolynomialCache::global());

struct LocalProvenance {
  std::int64_t p = 0;
  int content_exponent = 0;
  int conductor_exponent = 0;
  unsigned degree = 0;
};

struct LiftResult {
  SiegelExpansion expansion;
  std::map<FourierIndex, std::vector<LocalProvenance>> provenance;
};

/// Largest discriminant among reduced T with n + m <= bound, which is also
/// the eigenform truncation lift_expand needs.
std::int64_t required_truncation(std::int64_t trace_bound);

/// Weight k+1 expansion over reduced positive-definite T with
/// n + m <= trace_bound. Runs the Ramanujan gate on every prime it uses.
LiftResult lift_expand(const elliptic::Eigenform& f, std::int64_t trace_bound,
                       LocalPolynomialCache& cache = LocalPolynomialCache::global());

struct MaassReport {
  bool passed = true;
  int exponent = 0;
  std::size_t relations_checked = 0;
  std::optional<FourierIndex> first_failure;
};

/// A(n,r,m) = sum_{d | gcd(n,r,m)} d^exponent A(nm/d^2, r/d, 1) for every
/// nonzero reduced T in the table whose right side is in range.
MaassReport maass_check(const SiegelExpansion& f, int exponent);

/// Tries `expected`, then expected - 1 and expected + 1; returns the first
/// passing report, or the failing report for `expected`.
MaassReport calibrate_maass(const SiegelExpansion& f, int expected);

}  // namespace tubelift::lift
