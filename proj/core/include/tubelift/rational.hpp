#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tubelift {

using Integer = mpz_class;
// mpq_class keeps values canonical: gcd(num, den) = 1 and den > 0.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline Integer ipow(long base, unsigned long exp) { return ipow(Integer(base), exp); }

// base^exp for any signed exponent; base must be nonzero when exp < 0.
Rational rpow(const Rational& base, long exp);

// Always "num/den", including integers ("5/1"); used by every file format.
std::string to_fraction_string(const Rational& q);

// Accepts "num/den" or a bare integer.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace tubelift
