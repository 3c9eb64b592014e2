#include "tubelift/arithmetic.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace tubelift {

Rational rpow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("rpow: zero to a negative power");
    Rational inv = 1 / base;
    return rpow(inv, -exp);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exp));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  Rational q;
  try {
    if (slash == std::string::npos) {
      q = Rational(Integer(s));
    } else {
      Integer num(s.substr(0, slash));
      Integer den(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      q = Rational(num, den);
      q.canonicalize();
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  return q;
}

namespace arith {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli{Rational(1)};

std::mutex g_lvalue_mutex;
std::map<std::pair<unsigned, std::int64_t>, Rational> g_lvalues;

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

Rational bernoulli(unsigned n) {
  std::lock_guard lock(g_bernoulli_mutex);
  while (g_bernoulli.size() <= n) {
    const unsigned m = static_cast<unsigned>(g_bernoulli.size());
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rational acc = 0;
    for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * g_bernoulli[j];
    Rational b = -acc / Rational(m + 1);
    b.canonicalize();
    g_bernoulli.push_back(b);
  }
  return g_bernoulli[n];
}

Rational bernoulli_polynomial(unsigned n, const Rational& x) {
  Rational acc = 0;
  Rational xpow = 1;
  for (unsigned e = 0; e <= n; ++e) {
    acc += Rational(binomial(n, e)) * bernoulli(n - e) * xpow;
    xpow *= x;
  }
  return acc;
}

int kronecker(std::int64_t D, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("kronecker: m must be positive");
  const std::int64_t r = ((D % 4) + 4) % 4;
  if (r == 2 || r == 3) throw std::invalid_argument("kronecker: D = " + std::to_string(D) + " is not 0,1 mod 4");
  Integer a(static_cast<long>(D));
  return mpz_kronecker_si(a.get_mpz_t(), static_cast<long>(m));
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: zero");
  n = std::llabs(n);
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound + 1), false);
  for (std::int64_t p = 2; p <= bound; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (std::int64_t q = p * p; q <= bound; q += p) composite[static_cast<std::size_t>(q)] = true;
  }
  return out;
}

int moebius(std::int64_t n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::int64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer divisor_sigma(std::int64_t n, unsigned s) {
  Integer acc = 0;
  for (auto d : divisors(n)) acc += ipow(d, s);
  return acc;
}

int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_fundamental_discriminant(std::int64_t D) {
  if (D == 1) return true;
  if (D == 0) return false;
  const std::int64_t r = ((D % 4) + 4) % 4;
  if (r == 1) return moebius(D) != 0;
  if (r != 0) return false;
  const std::int64_t q = D / 4;
  const std::int64_t rq = ((q % 4) + 4) % 4;
  return (rq == 2 || rq == 3) && moebius(q) != 0;
}

DiscriminantSplit discriminant_split(std::int64_t k, std::int64_t d) {
  if (d < 1) throw std::invalid_argument("discriminant_split: d must be positive");
  DiscriminantSplit out;
  out.d = d;
  out.k_odd = (k % 2) != 0;
  std::int64_t squarefree = 1;
  std::int64_t root = 1;
  for (auto [p, e] : factorize(d)) {
    if (e % 2) squarefree *= p;
    for (int i = 0; i < e / 2; ++i) root *= p;
  }
  const std::int64_t signed_sf = out.k_odd ? -squarefree : squarefree;
  if (((signed_sf % 4) + 4) % 4 == 1) {
    out.fundamental = signed_sf;
    out.conductor = Rational(root);
  } else {
    out.fundamental = 4 * signed_sf;
    out.conductor = make_rational(root, 2);
  }
  return out;
}

Rational dirichlet_L_neg(unsigned k, std::int64_t D) {
  if (k < 1) throw std::invalid_argument("dirichlet_L_neg: k must be positive");
  if (!is_fundamental_discriminant(D))
    throw std::invalid_argument("dirichlet_L_neg: " + std::to_string(D) + " is not a fundamental discriminant");
  // chi_D(-1) = sign(D) for nontrivial characters: the other parity is a trivial zero.
  if (D != 1) {
    const int parity = (k % 2 == 0) ? 1 : -1;
    if ((D > 0 ? 1 : -1) != parity) return Rational(0);
  }
  {
    std::lock_guard lock(g_lvalue_mutex);
    auto it = g_lvalues.find({k, D});
    if (it != g_lvalues.end()) return it->second;
  }
  const std::int64_t f = std::llabs(D);
  // f^{k-1} B_k(a/f) = sum_j C(k,j) B_j a^{k-j} f^{j-1}; collect the
  // character power sums S_e = sum_a chi(a) a^e first.
  std::vector<Integer> power_sums(k + 1, Integer(0));
  for (std::int64_t a = 1; a <= f; ++a) {
    const int chi = (D == 1) ? 1 : kronecker(D, a);
    if (chi == 0) continue;
    Integer apow = 1;
    for (unsigned e = 0; e <= k; ++e) {
      if (chi > 0) power_sums[e] += apow; else power_sums[e] -= apow;
      apow *= a;
    }
  }
  Rational generalized = 0;
  for (unsigned j = 0; j <= k; ++j) {
    Rational term = Rational(binomial(k, j)) * bernoulli(j) * Rational(power_sums[k - j]);
    term *= rpow(Rational(f), static_cast<long>(j) - 1);
    generalized += term;
  }
  Rational value = -generalized / Rational(k);
  value.canonicalize();
  std::lock_guard lock(g_lvalue_mutex);
  g_lvalues.emplace(std::make_pair(k, D), value);
  return value;
}

}  // namespace arith
}  // namespace tubelift
