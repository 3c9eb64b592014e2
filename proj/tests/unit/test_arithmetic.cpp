#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "tubelift/arithmetic.hpp"
#include "tubelift/quad_surd.hpp"

using namespace tubelift;

TEST(Bernoulli, MatchesAkiyamaTanigawa) {
  for (unsigned n = 0; n <= 40; ++n) EXPECT_EQ(arith::bernoulli(n), oracle::bernoulli(n)) << "n=" << n;
  EXPECT_EQ(arith::bernoulli(12), Rational(-691, 2730));
}

TEST(Bernoulli, PolynomialAtZeroAndOne) {
  for (unsigned n = 2; n <= 16; ++n) {
    EXPECT_EQ(arith::bernoulli_polynomial(n, 0), arith::bernoulli(n));
    EXPECT_EQ(arith::bernoulli_polynomial(n, 1), arith::bernoulli(n));
  }
}

TEST(Kronecker, MatchesPrimeByPrimeDefinition) {
  for (std::int64_t D = -300; D <= 300; ++D) {
    const auto r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1) continue;
    for (std::int64_t m = 1; m <= 120; ++m) ASSERT_EQ(arith::kronecker(D, m), oracle::kronecker(D, m)) << D << " " << m;
  }
}

TEST(Kronecker, RejectsNonDiscriminants) {
  EXPECT_THROW(arith::kronecker(3, 5), std::invalid_argument);
  EXPECT_THROW(arith::kronecker(-4, 0), std::invalid_argument);
}

TEST(FundamentalDiscriminant, MatchesSquarefreeDefinition) {
  for (std::int64_t D = -500; D <= 500; ++D)
    if (D != 0) {
      EXPECT_EQ(arith::is_fundamental_discriminant(D), oracle::is_fundamental(D)) << D;
    }
}

TEST(DirichletL, MatchesGeneratingSeries) {
  for (std::int64_t D : {1L, -3L, -4L, -7L, -8L, -15L, -20L, -23L, 5L, 8L, 12L, 13L})
    for (unsigned k = 1; k <= 12; ++k) {
      const bool parity_ok = D == 1 ? (k % 2 == 0 || k == 1) : ((D < 0) == (k % 2 == 1));
      if (!parity_ok) continue;
      EXPECT_EQ(arith::dirichlet_L_neg(k, D), oracle::dirichlet_L_neg(k, D)) << "k=" << k << " D=" << D;
    }
}

TEST(DirichletL, KnownValues) {
  EXPECT_EQ(arith::dirichlet_L_neg(2, 1), Rational(-1, 12));  // zeta(-1)
  EXPECT_EQ(arith::dirichlet_L_neg(1, -4), Rational(1, 2));   // 2h/w
  EXPECT_EQ(arith::dirichlet_L_neg(1, -3), Rational(1, 3));
  EXPECT_EQ(arith::dirichlet_L_neg(1, 1), Rational(-1, 2));   // zeta(0)
}

TEST(DiscriminantSplit, Reassembles) {
  for (std::int64_t d = 1; d <= 400; ++d)
    for (std::int64_t k : {1, 2, 3}) {
      const auto s = arith::discriminant_split(k, d);
      const Rational signed_d = Rational(k % 2 ? -d : d);
      EXPECT_EQ(Rational(s.fundamental) * s.conductor * s.conductor, signed_d) << k << " " << d;
      EXPECT_TRUE(arith::is_fundamental_discriminant(s.fundamental));
    }
}

TEST(Factorization, Basics) {
  for (std::int64_t n = 1; n <= 2000; ++n) {
    std::int64_t prod = 1;
    for (auto [p, e] : arith::factorize(n)) {
      EXPECT_TRUE(oracle::is_prime(p));
      for (int i = 0; i < e; ++i) prod *= p;
    }
    EXPECT_EQ(prod, n);
    EXPECT_EQ(arith::is_prime(n), oracle::is_prime(n));
    EXPECT_EQ(arith::divisor_sigma(n, 3), oracle::sigma(n, 3));
  }
  EXPECT_EQ(arith::moebius(30), -1);
  EXPECT_EQ(arith::moebius(12), 0);
  EXPECT_EQ(arith::valuation(96, 2), 5);
}

TEST(QuadSurd, FieldArithmetic) {
  const QuadSurd x(3, Rational(1, 2), Rational(2));
  const QuadSurd y(3, Rational(-5), Rational(1, 3));
  EXPECT_EQ(x * x.inverse(), QuadSurd(3, 1));
  EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
  EXPECT_EQ(QuadSurd::half_power(3, 3), QuadSurd(3, 0, 3));
  EXPECT_EQ(QuadSurd::half_power(3, -2), QuadSurd(3, Rational(1, 3)));
  EXPECT_EQ(QuadSurd::sqrt_of(5) * QuadSurd::sqrt_of(5), QuadSurd(5, 5));
}

TEST(QuadSurd, MixedRadicandsRejected) {
  EXPECT_ANY_THROW(QuadSurd::sqrt_of(2) + QuadSurd::sqrt_of(3));
}

TEST(RationalText, RoundTrip) {
  for (auto q : {Rational(0), Rational(5), Rational(-7, 3), Rational(1385, 2)}) {
    EXPECT_EQ(parse_rational(to_fraction_string(q)), q);
  }
  EXPECT_EQ(to_fraction_string(Rational(5)), "5/1");
  EXPECT_EQ(parse_rational("12"), Rational(12));
}
