#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "tubelift/rational.hpp"

namespace tubelift::jordan {

/// Cayley octonion sum_i c_i e_i over Q with e_0 = 1. Products of imaginary
/// units follow the Fano triples (1,2,4) (2,3,5) (3,4,6) (4,5,7) (5,6,1)
/// (6,7,2) (7,1,3): e_a e_b = e_c along each cyclic rotation and
/// e_b e_a = -e_c, with e_i^2 = -1.
class Octonion {
 public:
  Octonion() = default;
  explicit Octonion(std::array<Rational, 8> coords) : c_(std::move(coords)) {}
  static Octonion real(const Rational& r);
  static Octonion unit(int i);

  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::array<Rational, 8>& coords() const { return c_; }

  Octonion conjugate() const;
  /// N(x) = x conj(x) = sum c_i^2.
  Rational norm() const;
  const Rational& real_part() const { return c_[0]; }
  bool is_zero() const;

  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  Octonion& operator*=(const Rational& q);
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator*(Octonion a, const Rational& q) { return a *= q; }
  friend Octonion operator*(const Rational& q, Octonion a) { return a *= q; }
  Octonion operator-() const;
  friend bool operator==(const Octonion&, const Octonion&) = default;

  std::string to_string() const;

 private:
  std::array<Rational, 8> c_{};
};

/// Signed basis product: e_i e_j = sign * e_index.
struct BasisProduct {
  int sign;
  int index;
};
BasisProduct basis_product(int i, int j);

Octonion oct_mul(const Octonion& x, const Octonion& y);
inline Octonion operator*(const Octonion& x, const Octonion& y) { return oct_mul(x, y); }

/// Re(x conj(y)) = sum x_i y_i.
Rational real_inner(const Octonion& x, const Octonion& y);

std::ostream& operator<<(std::ostream& os, const Octonion& x);

/// Hermitian matrix
///   [ a      x      y ]
///   [ x*     b      z ]
///   [ y*     z*     c ]
/// with a, b, c rational and x, y, z octonions (x* the conjugate).
struct JordanElement {
  Rational a, b, c;
  Octonion x, y, z;

  static JordanElement identity();
  static JordanElement diagonal(const Rational& a, const Rational& b, const Rational& c);
  JordanElement& operator*=(const Rational& q);
  friend JordanElement operator*(const Rational& q, JordanElement v) { return v *= q; }
  friend bool operator==(const JordanElement&, const JordanElement&) = default;
  std::string to_string() const;
};

Rational trace(const JordanElement& v);

/// Freudenthal cubic form abc - a N(z) - b N(y) - c N(x) + 2 Re((x z) conj(y)).
Rational jordan_det(const JordanElement& v);

/// (X, Y) = aa' + bb' + cc' + 2(Re(x x'*) + Re(y y'*) + Re(z z'*)).
Rational trace_pair(const JordanElement& u, const JordanElement& v);

/// a > 0, ab - N(x) > 0 and det > 0.
bool is_positive(const JordanElement& v);

/// Experimental. Membership in the maximal order spanned by Z^8 and the
/// half-sums (e_i + e_j + e_k + e_l)/2 over the quadruples {0,1,2,3},
/// {0,1,4,7}, {0,1,5,6}, {0,2,4,5}, {0,2,6,7}, {0,3,4,6}, {0,3,5,7} and their
/// complements.
bool in_maximal_order(const Octonion& x);

/// Experimental. Diagonal entries in Z and off-diagonal entries in the order.
bool is_integral(const JordanElement& v);

}  // namespace tubelift::jordan
