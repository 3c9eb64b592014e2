#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tubelift/rational.hpp"

namespace tubelift::lfactor {

/// alpha^alpha beta^beta chi^chi p^{(half_p + k_half_p * k)/2} with k a
/// symbolic weight and chi a symbolic sign (chi^2 = 1, so only its parity is
/// stored).
struct SymMonomial {
  int alpha = 0;
  int beta = 0;
  int half_p = 0;
  int k_half_p = 0;
  int chi = 0;

  static SymMonomial one() { return {}; }
  /// p^{half/2}.
  static SymMonomial p_half(int half) { return {0, 0, half, 0, 0}; }

  SymMonomial operator*(const SymMonomial& o) const;
  SymMonomial inverse() const;
  auto operator<=>(const SymMonomial&) const = default;
  std::string to_string() const;
};

/// Sorted multiset of monomials.
class SatakeMultiset {
 public:
  SatakeMultiset() = default;
  explicit SatakeMultiset(std::vector<SymMonomial> entries);

  const std::vector<SymMonomial>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  SatakeMultiset inverted() const;
  bool is_self_dual() const { return *this == inverted(); }
  /// Each entry with its inverse added.
  SatakeMultiset closed_under_inversion() const;
  SatakeMultiset operator+(const SatakeMultiset& o) const;
  friend bool operator==(const SatakeMultiset&, const SatakeMultiset&) = default;
  std::string to_string() const;

 private:
  std::vector<SymMonomial> entries_;
};

/// Polynomial in t = p^{-s} with coefficients in Z[monomials].
class EulerFactor {
 public:
  using Coefficient = std::map<SymMonomial, Integer>;

  EulerFactor();  // the constant 1
  explicit EulerFactor(std::vector<Coefficient> coeffs);

  /// prod_{mu} (1 - mu t).
  static EulerFactor from_multiset(const SatakeMultiset& s);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Coefficient>& coefficients() const { return coeffs_; }
  bool has_unit_constant_term() const;

  EulerFactor operator*(const EulerFactor& o) const;
  friend bool operator==(const EulerFactor&, const EulerFactor&) = default;
  /// Degree of the first differing coefficient.
  static std::optional<std::size_t> first_difference(const EulerFactor& a, const EulerFactor& b);

 private:
  void normalize();
  std::vector<Coefficient> coeffs_;
};

enum class Group { kSp4n, kSU2n1, kSU2nH, kE73 };

/// Accepts Sp, SU, SUH, E73 and the longer forms Sp4n, SU2n+1, SU2nH, E7,3.
Group parse_group(std::string_view tag);
std::string group_name(Group g);

/// Local standard Satake parameters of the lift on G.
SatakeMultiset standard_satake(Group g, int n);
/// 4n+1, 4(2n+1), 4n or 56.
std::size_t standard_degree(Group g, int n);

/// The displayed product of shifted L(s, f) factors (and the symmetric cube
/// for E_{7,3}), one quadratic (or quartic) factor at a time.
EulerFactor factored_rhs(Group g, int n);

struct IdentityReport {
  std::string name;
  bool passed = true;
  std::size_t degree = 0;
  std::size_t expected_degree = 0;
  bool self_dual = true;
  std::optional<std::string> first_mismatch;
};

/// ∏(1 - mu t) over standard_satake against factored_rhs, plus degree and
/// self-duality.
IdentityReport standard_factor_check(Group g, int n);

/// Parameters of Ind pi_f|det|^{n-1/2} x ... x pi_f|det|^{1/2} plus {1},
/// closed under inversion, against standard_satake(Sp4n, n). A nonzero
/// shift_error moves every exponent by that many half-units.
IdentityReport cap_check(int n, int shift_error = 0);

struct ArthurComponent {
  std::string name;
  std::size_t dimension = 0;
  bool symplectic = false;
};

struct ArthurReport {
  bool passed = true;
  std::vector<ArthurComponent> components;
  std::size_t total = 0;
  /// Sym^3 + rho_f x Sym^16 + rho_f x Sym^8 parameters equal standard_satake(E73).
  bool matches_standard = false;
};

ArthurReport arthur_dims();

struct MiyawakiReport {
  bool passed = true;
  std::size_t satake_size = 0;
  bool identity = false;
  std::size_t so4 = 0;
  std::size_t so8 = 0;
  std::vector<int> unipotent_exponents;  // sorted
  std::optional<std::string> first_mismatch;
};

MiyawakiReport miyawaki_check();

/// Parameters of the degenerate principal series I(s) attached to the
/// Eisenstein series, with s = s_half / 2 affine in k:
/// Sp4n: {1} and p^{+-(s + (2n+1)/2 - i)}, i = 1..2n;
/// E73:  p^{+-3s}, p^{+-s}, p^{+-(s+j)} for j = -8..8 and again for j = -4..4
/// (the 27 of E6 splits as 17 + 9 + 1 under a principal SL2).
SatakeMultiset degenerate_principal_series(Group g, int n, int s_half_const, int s_half_k);

/// alpha -> p^{(c + kk * k)/2} in every entry.
SatakeMultiset substitute_alpha(const SatakeMultiset& s, int half_const, int half_k);

struct DegenerationReport {
  bool passed = true;
  std::string group;
  bool matching_substitution = false;     // the substitution attached to E_{l(k)}
  bool other_substitution_matches = false;  // must stay false for E73
};

/// Sp4n: alpha -> p^{k-1/2} against I(k-1/2).
/// E73: alpha -> p^{2k-1} against I(2k-1), and alpha -> p^{k-1/2} must fail.
DegenerationReport degeneration_check(Group g, int n);

}  // namespace tubelift::lfactor
