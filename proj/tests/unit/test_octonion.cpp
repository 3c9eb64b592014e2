#include <gtest/gtest.h>

#include <random>
#include <set>

#include "tubelift/octonion.hpp"

using namespace tubelift;
using jordan::JordanElement;
using jordan::Octonion;

namespace {

Octonion random_octonion(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::array<Rational, 8> c;
  for (auto& x : c) x = make_rational(num(rng), den(rng));
  return Octonion(c);
}

}  // namespace

TEST(Octonion, BasisTable) {
  for (int i = 1; i < 8; ++i) {
    const auto sq = jordan::basis_product(i, i);
    EXPECT_EQ(sq.index, 0);
    EXPECT_EQ(sq.sign, -1);
    for (int j = 1; j < 8; ++j) {
      if (i == j) continue;
      const auto a = jordan::basis_product(i, j), b = jordan::basis_product(j, i);
      EXPECT_EQ(a.index, b.index);
      EXPECT_EQ(a.sign, -b.sign);
    }
  }
  EXPECT_EQ(Octonion::unit(1) * Octonion::unit(2), Octonion::unit(4));
  EXPECT_EQ(Octonion::unit(2) * Octonion::unit(1), -Octonion::unit(4));
}

TEST(Octonion, CompositionAndAlternativity) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Octonion x = random_octonion(rng), y = random_octonion(rng);
    EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
    EXPECT_EQ(x * (x * y), (x * x) * y);
    EXPECT_EQ((y * x) * x, y * (x * x));
    EXPECT_EQ((x * y).conjugate(), y.conjugate() * x.conjugate());
    EXPECT_EQ(x * x.conjugate(), Octonion::real(x.norm()));
    // Moufang: (x y x) z = x (y (x z)).
    const Octonion z = random_octonion(rng);
    EXPECT_EQ(((x * y) * x) * z, x * (y * (x * z)));
  }
}

TEST(Octonion, NotAssociative) {
  const Octonion a = Octonion::unit(1), b = Octonion::unit(2), c = Octonion::unit(3);
  EXPECT_NE((a * b) * c, a * (b * c));
}

TEST(Octonion, FanoLines) {
  std::set<std::set<int>> lines;
  for (int a = 1; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) lines.insert({a, b, jordan::basis_product(a, b).index});
  EXPECT_EQ(lines.size(), 7u);
  for (const auto& l : lines) EXPECT_EQ(l.size(), 3u);
}

TEST(MaximalOrder, HalfIntegralUnitsAndClosure) {
  std::vector<Octonion> units;
  // Candidates: +-e_i and (+-e_a +-e_b +-e_c +-e_d)/2.
  for (int i = 0; i < 8; ++i)
    for (int s : {1, -1}) units.push_back(Rational(s) * Octonion::unit(i));
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != 4) continue;
    for (int signs = 0; signs < 16; ++signs) {
      Octonion x;
      int bit = 0;
      for (int i = 0; i < 8; ++i)
        if (mask >> i & 1) x[i] = make_rational((signs >> bit++ & 1) ? -1 : 1, 2);
      if (jordan::in_maximal_order(x)) units.push_back(x);
    }
  }
  EXPECT_EQ(units.size(), 240u);
  std::set<std::array<Rational, 8>> unit_set;
  for (const auto& u : units) {
    EXPECT_EQ(u.norm(), Rational(1));
    unit_set.insert(u.coords());
  }
  for (const auto& u : units)
    for (const auto& v : units) ASSERT_TRUE(unit_set.count((u * v).coords())) << u << " * " << v;
  EXPECT_FALSE(jordan::in_maximal_order(Octonion::real(make_rational(1, 2))));
  EXPECT_TRUE(jordan::in_maximal_order(Octonion::unit(3) * Rational(5)));
}

TEST(Jordan, DeterminantAgainstRealAndComplexMatrices) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    JordanElement v;
    v.a = d(rng);
    v.b = d(rng);
    v.c = d(rng);
    v.x = Octonion::real(d(rng));
    v.y = Octonion::real(d(rng));
    v.z = Octonion::real(d(rng));
    const Rational x = v.x[0], y = v.y[0], z = v.z[0];
    const Rational sym = v.a * (v.b * v.c - z * z) - x * (x * v.c - z * y) + y * (x * z - v.b * y);
    EXPECT_EQ(jordan::jordan_det(v), sym);
    // Complex entries in span{1, e_1}: Hermitian determinant
    // abc - a|z|^2 - b|y|^2 - c|x|^2 + 2 Re(x z conj(y)).
    JordanElement w = v;
    w.x[1] = d(rng);
    w.y[1] = d(rng);
    w.z[1] = d(rng);
    const Rational xr = w.x[0], xi = w.x[1], yr = w.y[0], yi = w.y[1], zr = w.z[0], zi = w.z[1];
    const Rational re_xz = xr * zr - xi * zi, im_xz = xr * zi + xi * zr;
    const Rational herm = w.a * w.b * w.c - w.a * (zr * zr + zi * zi) - w.b * (yr * yr + yi * yi) -
                          w.c * (xr * xr + xi * xi) + 2 * (re_xz * yr + im_xz * yi);
    EXPECT_EQ(jordan::jordan_det(w), herm);
  }
}

TEST(Jordan, DeterminantIdentities) {
  EXPECT_EQ(jordan::jordan_det(JordanElement::identity()), Rational(1));
  EXPECT_EQ(jordan::jordan_det(JordanElement::diagonal(2, 3, make_rational(5, 7))), make_rational(30, 7));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    JordanElement v{make_rational(trial - 4, 3), 2, -1, random_octonion(rng), random_octonion(rng), random_octonion(rng)};
    const Rational lam = make_rational(-5, 2);
    EXPECT_EQ(jordan::jordan_det(lam * v), lam * lam * lam * jordan::jordan_det(v));
    EXPECT_EQ(jordan::trace_pair(v, JordanElement::identity()), jordan::trace(v));
  }
}

TEST(Jordan, PositivityWitnesses) {
  EXPECT_TRUE(jordan::is_positive(JordanElement::identity()));
  EXPECT_FALSE(jordan::is_positive(JordanElement::diagonal(1, 1, -1)));
  JordanElement p = JordanElement::diagonal(2, 2, 2);
  p.x = Octonion::unit(1);
  p.y = Octonion::unit(2) * make_rational(1, 2);
  p.z = Octonion::unit(4) * make_rational(1, 2);
  EXPECT_TRUE(jordan::is_positive(p));
  JordanElement q = JordanElement::identity();
  q.x = Octonion::real(2);
  EXPECT_FALSE(jordan::is_positive(q));
  EXPECT_TRUE(jordan::is_integral(JordanElement::identity()));
}
