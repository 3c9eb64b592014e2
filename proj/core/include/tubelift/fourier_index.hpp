#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tubelift::siegel {

/// Semi-integral degree-2 index T = [n, r/2; r/2, m], i.e. the binary form
/// n x^2 + r xy + m y^2. Ordered lexicographically by (n, r, m).
struct FourierIndex {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t m = 0;

  /// D_T = det(2T) = 4nm - r^2.
  std::int64_t discriminant() const { return 4 * n * m - r * r; }
  std::int64_t trace() const { return n + m; }
  /// gcd(n, r, m); zero only for T = 0.
  std::int64_t content() const;
  bool is_zero() const { return n == 0 && r == 0 && m == 0; }
  bool is_positive_definite() const { return n > 0 && discriminant() > 0; }
  bool is_positive_semidefinite() const { return n >= 0 && m >= 0 && discriminant() >= 0; }
  /// 0 <= r <= n <= m.
  bool is_reduced() const { return 0 <= r && r <= n && n <= m; }

  auto operator<=>(const FourierIndex&) const = default;
  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const FourierIndex& t);

/// Integral 2x2 matrix [[a, b], [c, d]].
struct Unimodular {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t determinant() const { return a * d - b * c; }
  Unimodular operator*(const Unimodular& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  auto operator<=>(const Unimodular&) const = default;
};

/// tU T U, i.e. the form evaluated on the columns of U. U need not be
/// unimodular (the Hecke operator uses determinant-p matrices).
FourierIndex transform(const FourierIndex& t, const Unimodular& u);

struct Reduction {
  FourierIndex reduced;
  Unimodular transform;  // tU T U == reduced, det U = +-1
};

/// GL_2(Z)-reduction to the unique representative with 0 <= r <= n <= m.
/// Throws std::invalid_argument for indefinite T.
Reduction reduce_index(const FourierIndex& t);

/// All reduced positive semi-definite T with n + m <= trace_bound, in
/// lexicographic order; positive-definite ones only when requested.
std::vector<FourierIndex> reduced_indices(std::int64_t trace_bound, bool positive_definite_only = false);

}  // namespace tubelift::siegel
