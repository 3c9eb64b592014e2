#include <gtest/gtest.h>

#include "tubelift/lfactor.hpp"

using namespace tubelift;
using lfactor::EulerFactor;
using lfactor::Group;
using lfactor::SatakeMultiset;
using lfactor::SymMonomial;

namespace {

// Numerical specialization: p = 4 (so p^{1/2} = 2), alpha = 3/5, beta = 7/2,
// k = 6, chi = -1. Every symbolic identity must survive it.
struct Point {
  Rational alpha = make_rational(3, 5);
  Rational beta = make_rational(7, 2);
  long k = 6;
  int chi = -1;
};

Rational value(const SymMonomial& m, const Point& pt) {
  Rational v = rpow(pt.alpha, m.alpha) * rpow(pt.beta, m.beta) * rpow(Rational(2), m.half_p + m.k_half_p * pt.k);
  if (m.chi % 2 != 0) v *= pt.chi;
  return v;
}

using Poly = std::vector<Rational>;

Poly mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly eval(const EulerFactor& f, const Point& pt) {
  Poly out;
  for (const auto& c : f.coefficients()) {
    Rational v = 0;
    for (const auto& [m, n] : c) v += Rational(n) * value(m, pt);
    out.push_back(v);
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

// (1 - chi^tw alpha 2^{-2c} t)(1 - chi^tw alpha^{-1} 2^{-2c} t): L(s + c, f), c = c2 / 2.
Poly l_shift(int c2, bool twist, const Point& pt) {
  const Rational s = rpow(Rational(2), -c2) * (twist ? Rational(pt.chi) : Rational(1));
  return mul({1, -s * pt.alpha}, {1, -s / pt.alpha});
}

Poly oracle_rhs(Group g, int n, const Point& pt) {
  Poly out{1};
  switch (g) {
    case Group::kSp4n:
      out = {1, -1};
      for (int i = 1; i <= 2 * n; ++i) out = mul(out, l_shift(2 * n + 1 - 2 * i, false, pt));
      break;
    case Group::kSU2n1:
      for (int i = 1; i <= 2 * n + 1; ++i)
        out = mul(mul(out, l_shift(2 * (n + 1 - i), false, pt)), l_shift(2 * (n + 1 - i), true, pt));
      break;
    case Group::kSU2nH:
      for (int i = 1; i <= 2 * n; ++i) out = mul(out, l_shift(2 * n + 1 - 2 * i, false, pt));
      break;
    case Group::kE73: {
      const Rational a = pt.alpha;
      out = mul(mul({1, -a * a * a}, {1, -a}), mul({1, -1 / a}, {1, -1 / (a * a * a)}));
      for (int j = -8; j <= 8; ++j) out = mul(out, l_shift(2 * j, false, pt));
      for (int j = -4; j <= 4; ++j) out = mul(out, l_shift(2 * j, false, pt));
      break;
    }
  }
  return out;
}

}  // namespace

TEST(SymMonomial, GroupLaw) {
  const SymMonomial a{1, 0, 3, -2, 1};
  EXPECT_EQ(a * a.inverse(), SymMonomial::one());
  const SymMonomial chi2 = SymMonomial{0, 0, 0, 0, 1} * SymMonomial{0, 0, 0, 0, 1};
  EXPECT_EQ(chi2, SymMonomial::one());
}

TEST(StandardFactor, MatchesIndependentNumericalProducts) {
  const Point pt;
  const std::vector<std::pair<Group, int>> cases{{Group::kSp4n, 1},  {Group::kSp4n, 2},  {Group::kSp4n, 3},
                                                 {Group::kSU2n1, 1}, {Group::kSU2n1, 2}, {Group::kSU2nH, 1},
                                                 {Group::kSU2nH, 2}, {Group::kSU2nH, 3}, {Group::kE73, 0}};
  for (auto [g, n] : cases) {
    const Poly ref = oracle_rhs(g, n, pt);
    EXPECT_EQ(eval(lfactor::factored_rhs(g, n), pt), ref) << lfactor::group_name(g) << " " << n;
    EXPECT_EQ(eval(EulerFactor::from_multiset(lfactor::standard_satake(g, n)), pt), ref)
        << lfactor::group_name(g) << " " << n;
    const auto report = lfactor::standard_factor_check(g, n);
    EXPECT_TRUE(report.passed) << report.name;
    EXPECT_EQ(report.degree, lfactor::standard_degree(g, n));
    EXPECT_TRUE(report.self_dual);
  }
  EXPECT_EQ(lfactor::standard_degree(Group::kSp4n, 3), 13u);
  EXPECT_EQ(lfactor::standard_degree(Group::kSU2n1, 2), 20u);
  EXPECT_EQ(lfactor::standard_degree(Group::kSU2nH, 3), 12u);
  EXPECT_EQ(lfactor::standard_degree(Group::kE73, 0), 56u);
}

TEST(StandardFactor, ChiTwistIsSeen) {
  // A different sign for chi changes the unitary product.
  Point a, b;
  b.chi = 1;
  EXPECT_NE(eval(lfactor::factored_rhs(Group::kSU2n1, 1), a), eval(lfactor::factored_rhs(Group::kSU2n1, 1), b));
}

TEST(GroupTags, ParseAndReject) {
  EXPECT_EQ(lfactor::parse_group("Sp"), Group::kSp4n);
  EXPECT_EQ(lfactor::parse_group("SU2n+1"), Group::kSU2n1);
  EXPECT_EQ(lfactor::parse_group("SUH"), Group::kSU2nH);
  EXPECT_EQ(lfactor::parse_group("E7,3"), Group::kE73);
  EXPECT_THROW(lfactor::parse_group("G2"), std::invalid_argument);
  EXPECT_THROW(lfactor::standard_satake(Group::kSp4n, 0), std::invalid_argument);
}

TEST(Cap, MultisetEqualityAndShiftDetection) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_TRUE(lfactor::cap_check(n).passed) << n;
    EXPECT_FALSE(lfactor::cap_check(n, 1).passed) << n;
  }
}

TEST(Arthur, DimensionsOfE73Parameter) {
  const auto r = lfactor::arthur_dims();
  EXPECT_TRUE(r.passed);
  ASSERT_EQ(r.components.size(), 3u);
  EXPECT_EQ(r.components[0].dimension, 4u);
  EXPECT_EQ(r.components[1].dimension, 34u);
  EXPECT_EQ(r.components[2].dimension, 18u);
  EXPECT_EQ(r.total, 56u);
  EXPECT_TRUE(r.matches_standard);
  for (const auto& c : r.components) EXPECT_TRUE(c.symplectic);
}

TEST(Miyawaki, TwelveParameters) {
  const auto r = lfactor::miyawaki_check();
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.satake_size, 12u);
  EXPECT_TRUE(r.identity);
  EXPECT_EQ(r.so4 + r.so8, 12u);
  EXPECT_EQ(r.so4, 4u);
}

TEST(Degeneration, SubstitutionsSelectTheRightEisensteinSeries) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_TRUE(lfactor::degeneration_check(Group::kSp4n, n).passed);
    EXPECT_TRUE(lfactor::degeneration_check(Group::kSU2nH, n).passed);
  }
  const auto e = lfactor::degeneration_check(Group::kE73, 0);
  EXPECT_TRUE(e.matching_substitution);
  EXPECT_FALSE(e.other_substitution_matches);
  EXPECT_EQ(lfactor::degenerate_principal_series(Group::kE73, 0, 0, 1).size(), 56u);
  EXPECT_THROW(lfactor::degenerate_principal_series(Group::kSU2n1, 1, 0, 1), std::invalid_argument);
}

TEST(Multiset, InversionAndClosure) {
  const SatakeMultiset s({SymMonomial{1, 0, 2, 0, 0}});
  EXPECT_FALSE(s.is_self_dual());
  EXPECT_TRUE(s.closed_under_inversion().is_self_dual());
  EXPECT_EQ(s.closed_under_inversion().size(), 2u);
  EXPECT_EQ((s + s.inverted()), s.closed_under_inversion());
}
