#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tubelift/rational.hpp"

namespace tubelift::arith {

/// B_n with the convention B_1 = -1/2.
Rational bernoulli(unsigned n);

/// Bernoulli polynomial B_n(x) = sum_j C(n,j) B_j x^(n-j).
Rational bernoulli_polynomial(unsigned n, const Rational& x);

/// Kronecker symbol (D/m) for a discriminant D (D = 0,1 mod 4) and m >= 1.
/// Throws std::invalid_argument when D = 2,3 mod 4 or m < 1.
int kronecker(std::int64_t D, std::int64_t m);

/// True when D is 1 or a fundamental discriminant.
bool is_fundamental_discriminant(std::int64_t D);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

/// Möbius function.
int moebius(std::int64_t n);

/// sigma_s(n) = sum of d^s over divisors d of n.
Integer divisor_sigma(std::int64_t n, unsigned s);

std::vector<std::int64_t> divisors(std::int64_t n);

/// Exponent of p in n (n != 0).
int valuation(std::int64_t n, std::int64_t p);

struct DiscriminantSplit {
  std::int64_t d = 0;           // the input
  bool k_odd = false;           // parity of k in (-1)^k d
  std::int64_t fundamental = 1; // discriminant of Q(sqrt((-1)^k d)), 1 for Q
  Rational conductor;           // positive, with (-1)^k d = fundamental * conductor^2

  /// The conductor is an integer exactly when (-1)^k d is a discriminant.
  bool integral_conductor() const { return conductor.get_den() == 1; }
};

/// Splits (-1)^k d into fundamental discriminant times a square.
DiscriminantSplit discriminant_split(std::int64_t k, std::int64_t d);

/// L(1-k, chi_D) for a fundamental discriminant D (D = 1 gives zeta(1-k)),
/// computed as -B_{k,chi}/k from the generalized Bernoulli sum over residues
/// mod |D|. Values are cached per (k, D) behind a mutex.
Rational dirichlet_L_neg(unsigned k, std::int64_t D);

}  // namespace tubelift::arith
