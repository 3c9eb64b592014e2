#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tubelift/elliptic.hpp"
#include "tubelift/errors.hpp"
#include "tubelift/qseries.hpp"

using namespace tubelift;

namespace {

std::vector<oracle::Q> delta_times_eisenstein(unsigned w_e, std::size_t N) {
  std::vector<oracle::Q> d;
  for (const auto& z : oracle::delta(N)) d.emplace_back(z);
  // E_{w} for w = 6, 10 = 4 + 6, 14 = 4 + 4 + 6 as products of E_4 and E_6.
  std::vector<oracle::Q> prod = oracle::eisenstein(6, N);
  for (unsigned w = 6; w < w_e; w += 4) prod = oracle::mul(prod, oracle::eisenstein(4, N));
  return oracle::mul(d, prod);
}

}  // namespace

TEST(QSeries, ProductAndTruncation) {
  const QSeries a(4, {Rational(1), Rational(2), Rational(3)});
  const QSeries b(6, {Rational(1), Rational(-1), Rational(0), Rational(5)});
  const QSeries c = a * b;
  EXPECT_EQ(c.weight(), 10);
  EXPECT_EQ(c.truncation(), 2u);
  EXPECT_EQ(c[1], Rational(1));
  EXPECT_EQ(c[2], Rational(1));
  EXPECT_THROW(static_cast<void>(a[3]), TruncationError);
}

TEST(Elliptic, DeltaMatchesProductOracle) {
  const auto d = elliptic::delta_series(80);
  const auto ref = oracle::delta(80);
  for (std::size_t n = 0; n <= 80; ++n) EXPECT_EQ(d[n], Rational(ref[n])) << n;
  EXPECT_EQ(d[2], Rational(-24));
  EXPECT_EQ(d[11], Rational(534612));
}

TEST(Elliptic, EisensteinMatchesDivisorSums) {
  for (int w : {4, 6, 8, 10, 12}) {
    const auto e = elliptic::eisenstein_series(w, 40);
    const auto ref = oracle::eisenstein(static_cast<unsigned>(w), 40);
    for (std::size_t n = 0; n <= 40; ++n) EXPECT_EQ(e[n], ref[n]) << w << " " << n;
  }
}

TEST(Elliptic, Dimensions) {
  EXPECT_EQ(elliptic::cusp_space_dimension(12), 1);
  EXPECT_EQ(elliptic::cusp_space_dimension(14), 0);
  EXPECT_EQ(elliptic::cusp_space_dimension(24), 2);
  EXPECT_EQ(elliptic::modular_space_dimension(24), 3);
  EXPECT_EQ(elliptic::cusp_space_basis(24, 10).size(), 2u);
}

TEST(Eigenform, MatchesDeltaTimesEisenstein) {
  for (int two_k : {18, 22, 26}) {
    const auto f = elliptic::eigenform(two_k, 120);
    const auto ref = delta_times_eisenstein(static_cast<unsigned>(two_k - 12), 120);
    for (std::size_t n = 0; n <= 120; ++n) ASSERT_EQ(f.coefficient(n), ref[n]) << two_k << " " << n;
  }
  EXPECT_EQ(elliptic::eigenform(18, 20).ap(2), Rational(-528));
}

TEST(Eigenform, GatesReportParityBeforeDimension) {
  EXPECT_THROW(elliptic::eigenform(12, 50), ParityGateError);
  EXPECT_THROW(elliptic::eigenform(24, 50), ParityGateError);
  EXPECT_THROW(elliptic::eigenform(30, 50), DimensionGateError);
  EXPECT_THROW(elliptic::eigenform(14, 50), DimensionGateError);
}

TEST(Eigenform, FromSeriesRenormalizes) {
  const auto f = elliptic::eigenform(22, 60);
  const auto g = elliptic::Eigenform::from_series(f.series() * Rational(-7, 3), 11);
  EXPECT_EQ(g.series(), f.series());
}

TEST(Hecke, EigenformIsEigenvector) {
  const auto f = elliptic::eigenform(26, 200);
  for (std::int64_t p : {2, 3, 5, 7}) {
    const auto tf = elliptic::hecke_tp(f.series(), p);
    for (std::size_t n = 0; n <= tf.truncation(); ++n) EXPECT_EQ(tf[n], f.ap(p) * f.coefficient(n));
  }
  EXPECT_THROW(elliptic::hecke_tp(f.series(), 2, 150), TruncationError);
}

TEST(Satake, PowerSumsRecurrence) {
  const auto f = elliptic::eigenform(18, 50);
  const elliptic::SatakeSymbol s(3, 9, f.ap(3));
  const auto sums = s.power_sums(6);
  EXPECT_EQ(sums[0], QuadSurd(3, 2));
  // a(p^2) = p^{2k-1} (s_2 + 1) for the unitary normalization.
  const Rational a9 = f.coefficient(9);
  const QuadSurd lhs = (sums[2] + QuadSurd(3, 1)) * Rational(ipow(3, 17));
  EXPECT_EQ(lhs, QuadSurd(3, a9));
  for (unsigned m = 1; m + 1 <= 6; ++m) EXPECT_EQ(sums[m + 1], sums[1] * sums[m] - sums[m - 1]);
}

TEST(Ramanujan, GatePassesAndDetectsViolation) {
  const auto f = elliptic::eigenform(22, 110);
  EXPECT_TRUE(elliptic::ramanujan_gate(f, 100).passed);
  QSeries bad = f.series();
  bad[5] = Rational(ipow(10, 20));
  const auto r = elliptic::ramanujan_gate(bad, 11, 100);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.violating_prime.has_value());
  EXPECT_EQ(*r.violating_prime, 5);
}
