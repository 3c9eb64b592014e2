#pragma once

// Slow, direct reference computations used only by the tests. None of these
// call into the library's own arithmetic.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;

// Akiyama-Tanigawa; returns B_n with B_1 = -1/2.
inline Q bernoulli(unsigned n) {
  std::vector<Q> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = Q(1, m + 1);
    for (unsigned j = m; j >= 1; --j) {
      a[j - 1] = Q(j) * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
  }
  return n == 1 ? Q(-1, 2) : a[0];
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b = ((b % m) + m) % m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// (D/p) for a prime p: Euler's criterion for odd p, the 8-residue rule at 2.
inline int kronecker_prime(std::int64_t D, std::int64_t p) {
  if (p == 2) {
    if (D % 2 == 0) return 0;
    const std::int64_t r = ((D % 8) + 8) % 8;
    return (r == 1 || r == 7) ? 1 : -1;
  }
  const std::int64_t a = ((D % p) + p) % p;
  if (a == 0) return 0;
  return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

inline int kronecker(std::int64_t D, std::int64_t m) {
  int out = 1;
  for (std::int64_t p = 2; m > 1; ++p)
    while (m % p == 0) {
      out *= kronecker_prime(D, p);
      m /= p;
    }
  return out;
}

inline bool is_fundamental(std::int64_t D) {
  if (D == 1) return true;
  auto squarefree = [](std::int64_t n) {
    n = n < 0 ? -n : n;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % (d * d) == 0) return false;
    return true;
  };
  const std::int64_t r = ((D % 4) + 4) % 4;
  if (r == 1) return squarefree(D);
  if (r != 0) return false;
  const std::int64_t q = D / 4;
  const std::int64_t rq = ((q % 4) + 4) % 4;
  return (rq == 2 || rq == 3) && squarefree(q);
}

// B_{k,chi} from sum_a chi(a) t e^{at} / (e^{ft} - 1) = sum B_{k,chi} t^k / k!,
// expanded as a power series in t. Returns L(1-k, chi) = -B_{k,chi} / k.
inline Q dirichlet_L_neg(unsigned k, std::int64_t D) {
  const std::int64_t f = D < 0 ? -D : D;
  const unsigned len = k + 2;
  std::vector<Q> fact(len + 2, Q(1));
  for (unsigned i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * Q(i);
  // (e^{ft} - 1) / t = sum f^{i+1} t^i / (i+1)!; invert the series.
  std::vector<Q> den(len), inv(len);
  for (unsigned i = 0; i < len; ++i) {
    Z fi;
    mpz_pow_ui(fi.get_mpz_t(), Z(f).get_mpz_t(), i + 1);
    den[i] = Q(fi) / fact[i + 1];
  }
  inv[0] = 1 / den[0];
  for (unsigned i = 1; i < len; ++i) {
    Q s = 0;
    for (unsigned j = 1; j <= i; ++j) s += den[j] * inv[i - j];
    inv[i] = -s / den[0];
  }
  std::vector<Q> num(len, Q(0));
  for (std::int64_t a = 1; a <= f; ++a) {
    const int c = D == 1 ? 1 : kronecker(D, a);
    if (c == 0) continue;
    Q pw = 1;
    for (unsigned i = 0; i < len; ++i) {
      num[i] += Q(c) * pw / fact[i];
      pw *= Q(a);
    }
  }
  Q coeff = 0;
  for (unsigned j = 0; j <= k; ++j) coeff += num[j] * inv[k - j];
  const Q bk = coeff * fact[k];
  return -bk / Q(k);
}

// Hurwitz class number H(N): reduced forms of discriminant -N, weighted 1/2
// and 1/3 for multiples of x^2 + y^2 and x^2 + xy + y^2. H(0) = -1/12.
inline Q hurwitz_class_number(std::int64_t N) {
  if (N == 0) return Q(-1, 12);
  if (N % 4 == 1 || N % 4 == 2) return 0;
  Q h = 0;
  for (std::int64_t a = 1; 3 * a * a <= N; ++a)
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if ((b * b + N) % (4 * a) != 0) continue;
      const std::int64_t c = (b * b + N) / (4 * a);
      if (c < a || (c == a && b < 0)) continue;
      if (b == 0 && a == c)
        h += Q(1, 2);
      else if (b == a && a == c)
        h += Q(1, 3);
      else
        h += 1;
    }
  return h;
}

inline Z sigma(std::int64_t n, unsigned s) {
  Z out = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) {
      Z t;
      mpz_pow_ui(t.get_mpz_t(), Z(d).get_mpz_t(), s);
      out += t;
    }
  return out;
}

// Coefficients of q prod (1 - q^n)^24 by repeated multiplication.
inline std::vector<Z> delta(std::size_t N) {
  std::vector<Z> c(N + 1, 0);
  c[0] = 1;
  for (std::size_t n = 1; n <= N; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (std::size_t i = N; i >= n; --i) c[i] -= c[i - n];
  std::vector<Z> out(N + 1, 0);
  for (std::size_t i = 1; i <= N; ++i) out[i] = c[i - 1];
  return out;
}

inline std::vector<Q> mul(const std::vector<Q>& a, const std::vector<Q>& b) {
  std::vector<Q> out(std::min(a.size(), b.size()), Q(0));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// E_w by divisor sums.
inline std::vector<Q> eisenstein(unsigned w, std::size_t N) {
  std::vector<Q> out(N + 1);
  out[0] = 1;
  const Q c = Q(-2 * static_cast<long>(w)) / bernoulli(w);
  for (std::size_t n = 1; n <= N; ++n) out[n] = c * Q(sigma(static_cast<std::int64_t>(n), w - 1));
  return out;
}

// theta(q) = sum_{x in Z} q^{x^2}.
inline std::vector<Q> theta(std::size_t N) {
  std::vector<Q> out(N + 1, Q(0));
  for (std::int64_t x = -static_cast<std::int64_t>(N); x <= static_cast<std::int64_t>(N); ++x)
    if (static_cast<std::size_t>(x * x) <= N) out[static_cast<std::size_t>(x * x)] += 1;
  return out;
}

// F2 = sum_{n odd} sigma_1(n) q^n, weight 2 on Gamma_0(4).
inline std::vector<Q> cohen_f2(std::size_t N) {
  std::vector<Q> out(N + 1, Q(0));
  for (std::size_t n = 1; n <= N; n += 2) out[n] = Q(sigma(static_cast<std::int64_t>(n), 1));
  return out;
}

}  // namespace oracle
