#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tubelift/rational.hpp"
#include "tubelift/siegel.hpp"

namespace tubelift::jacobi {

/// Index S = m of a degree-2 Fourier-Jacobi coefficient; the lattice X is Z.
struct JacobiIndex {
  std::int64_t m = 1;
  static constexpr int dim_x = 1;

  explicit JacobiIndex(std::int64_t m_);
  /// sigma_S(x, y) = m x y.
  Rational sigma(const Rational& x, const Rational& y) const { return Rational(m) * x * y; }
};

/// How the coset set Xi(S) is cut out of X(Q) / Z.
enum class CosetConvention {
  /// xi with the index [S, S xi; S xi, N] semi-integral: xi in (1/2m) Z, 2m cosets.
  kSemiIntegral,
  /// xi with sigma_S(xi, y) in Z for all y in Z: xi in (1/m) Z, m cosets.
  kIntegralDual,
};

std::vector<Rational> dual_cosets(const JacobiIndex& s, CosetConvention convention = CosetConvention::kSemiIntegral);

struct ThetaTerm {
  std::int64_t numerator_exponent;  // q exponent times 4m: (2 m nu)^2
  std::int64_t lattice_exponent;    // 2 m nu
  Rational coefficient;             // phi_xi(nu)
};

/// theta_xi(tau, u) = sum_{nu in xi + Z} e(sigma(nu, nu) tau + 2 sigma(nu, u)),
/// as terms q^{numerator/4m} zeta^{lattice}, numerator <= max_numerator.
struct ThetaSeries {
  JacobiIndex index{1};
  Rational xi;
  std::int64_t max_numerator = 0;
  std::vector<ThetaTerm> terms;  // ordered by (numerator, lattice)
};

ThetaSeries theta_series(const JacobiIndex& s, const Rational& xi, std::int64_t max_numerator);

/// F_{S,xi}(tau) = sum_N A([S, S xi; S xi, N]) q^{N - sigma(xi, xi)}, stored by
/// numerator exponent 4mN - (2m xi)^2 over the denominator 4m.
struct ThetaComponent {
  JacobiIndex index{1};
  Rational xi;
  std::int64_t lattice_residue = 0;       // 2 m xi
  std::int64_t offset_denominator = 4;    // 4m
  Rational offset;                        // sigma(xi, xi)
  Rational weight;                        // weight of F minus dim_x / 2
  std::int64_t max_numerator_exponent = -1;  // components are complete up to here
  std::map<std::int64_t, Rational> coefficients;
};

/// Walks N upward from the smallest admissible value and stops at the first
/// index outside the expansion's trace bound.
ThetaComponent fj_component(const siegel::SiegelExpansion& f, const JacobiIndex& s, const Rational& xi);

struct ComponentMatch {
  Rational xi;
  std::optional<Rational> ratio;  // component / Cohen pattern
  bool proportional = true;
  std::size_t compared = 0;
  std::optional<std::int64_t> first_mismatch_n;
};

struct EisensteinFjReport {
  bool passed = true;
  int k = 0;
  Rational weight;  // k + 1/2
  std::vector<ComponentMatch> components;
};

/// Components of the weight-(k+1) Siegel Eisenstein series at S = 1 against
/// H(k, 4N) (xi = 0) and H(k, 4N - 1) (xi = 1/2) for N <= bound. Only S = 1
/// is supported; other indices raise GateError.
EisensteinFjReport eisenstein_fj_check(int k, const JacobiIndex& s, std::int64_t bound,
                                  siegel::EisensteinNormalization norm = siegel::EisensteinNormalization::kLValue);

/// Compares one component with the Cohen pattern for N <= bound.
ComponentMatch compare_with_cohen(const ThetaComponent& component, int k, std::int64_t bound);

struct ReconstructionReport {
  bool passed = true;
  CosetConvention convention = CosetConvention::kSemiIntegral;
  std::size_t compared = 0;
  std::size_t collisions = 0;
  std::optional<std::pair<std::int64_t, std::int64_t>> first_mismatch;  // (N, r)
};

/// Expands sum_xi F_{S,xi}(tau) theta_xi(tau, u) and compares every
/// coefficient of q^N zeta^r with A([S, r/2; r/2, N]) wherever both are known.
ReconstructionReport reconstruct_fj(const siegel::SiegelExpansion& f, const JacobiIndex& s,
                                    CosetConvention convention = CosetConvention::kSemiIntegral);

}  // namespace tubelift::jacobi
