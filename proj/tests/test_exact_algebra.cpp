#include <gtest/gtest.h>

#include <random>

#include "g2schur/dense_poly.hpp"
#include "g2schur/eps_laurent.hpp"
#include "g2schur/laurent.hpp"
#include "g2schur/linalg.hpp"
#include "g2schur/polyj.hpp"
#include "g2schur/ratfun.hpp"
#include "g2schur/trunc_series.hpp"

using namespace g2schur;

namespace {

LaurentPoly3 X(int i, int p = 1) { return LaurentPoly3::variable(i, p); }
LaurentPoly3 C(const Rat& c) { return LaurentPoly3(c); }

LaurentPoly3 random_laurent(std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> ex(-3, 3), co(-9, 9), de(1, 5);
  LaurentPoly3 p;
  for (int i = 0; i < terms; ++i) p.add_term({ex(rng), ex(rng), ex(rng)}, Rat(co(rng), de(rng)));
  return p;
}

TruncSeries3<Rat> random_series(std::mt19937& rng, int order, bool unit_constant) {
  std::uniform_int_distribution<int> ex(0, order), co(-7, 7), de(1, 4);
  TruncSeries3<Rat> s(order);
  for (int i = 0; i < 8; ++i) s.add_term({ex(rng), ex(rng), ex(rng)}, Rat(co(rng), de(rng)));
  if (unit_constant) s.add_term({0, 0, 0}, Rat(1) - s.coeff({0, 0, 0}) + Rat(co(rng) == 0 ? 3 : 2));
  return s;
}

// Rodrigues: P_k = 1/(2^k k!) d^k/dx^k (x^2-1)^k
DensePoly1 rodrigues(int k) {
  DensePoly1 base = DensePoly1::x() * DensePoly1::x() - DensePoly1(1);
  DensePoly1 p(1);
  for (int i = 0; i < k; ++i) p *= base;
  for (int i = 0; i < k; ++i) p = p.derivative();
  return p * (pow(Rat(2), static_cast<unsigned>(k)) * factorial(k)).inverse();
}

}  // namespace

TEST(Rat, CanonicalAndParse) {
  EXPECT_EQ(Rat(6, -4).str(), "-3/2");
  EXPECT_EQ(Rat::parse("-10/4"), Rat(-5, 2));
  EXPECT_EQ(Rat::parse("7").str(), "7");
  EXPECT_THROW(Rat::parse("1/0"), FormatError);
  EXPECT_THROW(Rat::parse("1.5"), FormatError);
  EXPECT_THROW(Rat::parse("/3"), FormatError);
  EXPECT_THROW(Rat(1) / Rat(0), ArithmeticError);
  EXPECT_EQ(gen_binomial(-1, 3), Rat(-1));
  EXPECT_EQ(gen_binomial(-2, 2), Rat(3));
  EXPECT_EQ(gen_binomial(3, 5), Rat(0));
}

TEST(LaurentPoly3, DifferenceOfSquares) {
  const auto s = X(0) + X(0, -1), a = X(0) - X(0, -1);
  EXPECT_EQ(s * a, X(0, 2) - X(0, -2));
}

TEST(LaurentPoly3, ZeroIsIdentity) {
  std::mt19937 rng(1);
  const auto p = random_laurent(rng, 6);
  EXPECT_EQ(LaurentPoly3() + p, p);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_TRUE((p * LaurentPoly3()).is_zero());
}

TEST(LaurentPoly3, RingAxiomsRandomized) {
  std::mt19937 rng(20261014);
  for (int it = 0; it < 40; ++it) {
    const auto a = random_laurent(rng, 5), b = random_laurent(rng, 4), c = random_laurent(rng, 3);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
  }
}

TEST(LaurentPoly3, CanonicalNoZeros) {
  LaurentPoly3 p;
  p.add_term({1, 0, 0}, Rat(1));
  p.add_term({1, 0, 0}, Rat(-1));
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.size(), 0u);
}

TEST(LaurentPoly3, DerivativesAndLeading) {
  const auto p = X(0, 3) * X(2, -1) + C(Rat(2)) * X(1);
  EXPECT_EQ(p.derivative(0), C(Rat(3)) * X(0, 2) * X(2, -1));
  EXPECT_EQ(p.derivative(2), C(Rat(-1)) * X(0, 3) * X(2, -2));
  auto lt = p.lex_leading();
  ASSERT_TRUE(lt.has_value());
  EXPECT_EQ(lt->first, (Exp3{3, 0, -1}));
  EXPECT_EQ(p.euler(), p + X(0, 3) * X(2, -1));
  EXPECT_EQ(p.value_at_ones(), Rat(3));
}

TEST(TruncSeries3, GeometricInverse) {
  auto one_plus = TruncSeries3<Rat>(3, Rat(1)) + TruncSeries3<Rat>::variable(0, 3);
  TruncSeries3<Rat> g(3);
  g.add_term({0, 0, 0}, Rat(1));
  g.add_term({1, 0, 0}, Rat(-1));
  g.add_term({2, 0, 0}, Rat(1));
  g.add_term({3, 0, 0}, Rat(-1));
  EXPECT_EQ(one_plus * g, TruncSeries3<Rat>(3, Rat(1)));
}

TEST(TruncSeries3, InvertQuadric) {
  auto sq = [](int i) { return TruncSeries3<Rat>::from_poly(X(i, 2), 2); };
  auto s = TruncSeries3<Rat>(2, Rat(-2)) + sq(0) + sq(1) - sq(2);
  auto inv = s.invert();
  auto expected = TruncSeries3<Rat>(2, Rat(-1, 2)) - (sq(0) + sq(1) - sq(2)) * Rat(1, 4);
  EXPECT_EQ(inv, expected);
  auto lifted = TruncSeries3<Rat>::from_poly(s.to_poly(), 2);
  EXPECT_EQ(lifted * inv, TruncSeries3<Rat>(2, Rat(1)));
}

TEST(TruncSeries3, InvertConstants) {
  EXPECT_EQ(TruncSeries3<Rat>(4, Rat(1)).invert(), TruncSeries3<Rat>(4, Rat(1)));
  EXPECT_EQ(TruncSeries3<Rat>(4, Rat(-3, 7)).invert(), TruncSeries3<Rat>(4, Rat(-7, 3)));
  EXPECT_THROW(TruncSeries3<Rat>::variable(1, 3).invert(), SingularSeriesError);
}

TEST(TruncSeries3, InverseRandomized) {
  std::mt19937 rng(77);
  for (int it = 0; it < 20; ++it) {
    auto s = random_series(rng, 5, true);
    if (s.coeff({0, 0, 0}).is_zero()) continue;
    EXPECT_EQ(s * s.invert(), TruncSeries3<Rat>(5, Rat(1)));
  }
}

TEST(TruncSeries3, OrderIsMinimum) {
  auto a = TruncSeries3<Rat>(5, Rat(1)) + TruncSeries3<Rat>::variable(0, 5);
  auto b = TruncSeries3<Rat>(3, Rat(2));
  EXPECT_EQ((a * b).order(), 3);
  EXPECT_EQ((a + b).order(), 3);
}

TEST(TruncSeries3, RatFunCoefficients) {
  using S = TruncSeries3<RatFun1>;
  RatFun1 k = RatFun1::kappa_power(1);
  S s(3, k);
  s.add_term({1, 0, 0}, RatFun1(1));
  auto inv = s.invert();
  EXPECT_EQ(s * inv, S(3, RatFun1(1)));
  EXPECT_EQ(inv.coeff({1, 0, 0}), -RatFun1::kappa_power(-2));
}

TEST(ShiftExpand, ReciprocalSum) {
  const auto phi = (X(0) + X(0, -1)) * Rat(1, 2);
  auto s = shift_expand(phi, 3);
  TruncSeries3<Rat> e(3, Rat(1));
  e.add_term({2, 0, 0}, Rat(1, 2));
  e.add_term({3, 0, 0}, Rat(-1, 2));
  EXPECT_EQ(s, e);
}

TEST(DensePoly1, Legendre) {
  EXPECT_EQ(legendre(0), DensePoly1(1));
  EXPECT_EQ(legendre(1), DensePoly1::x());
  EXPECT_EQ(legendre(2), DensePoly1({Rat(-1, 2), Rat(0), Rat(3, 2)}));
  for (int k = 0; k <= 20; ++k) {
    const auto p = legendre(k);
    EXPECT_EQ(p.eval(Rat(1)), Rat(1));
    const auto x = DensePoly1::x();
    const auto lhs = (DensePoly1(1) - x * x) * p.derivative().derivative() - (x * Rat(2)) * p.derivative() +
                     p * Rat(k * (k + 1));
    EXPECT_TRUE(lhs.is_zero()) << "k=" << k;
    if (k <= 12) {
      EXPECT_EQ(p, rodrigues(k)) << "k=" << k;
    }
  }
}

TEST(DensePoly1, DivmodGcd) {
  const auto x = DensePoly1::x();
  const auto a = (x - DensePoly1(1)) * (x + DensePoly1(2)) * (x * x + DensePoly1(1));
  const auto b = (x - DensePoly1(1)) * (x * Rat(3) + DensePoly1(5));
  EXPECT_EQ(DensePoly1::gcd(a, b), x - DensePoly1(1));
  auto [q, r] = DensePoly1::divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
}

TEST(RatFun1, NormalizationAndEquality) {
  const auto x = DensePoly1::x();
  RatFun1 f(x * x - DensePoly1(1), (x - DensePoly1(1)) * Rat(2));
  EXPECT_EQ(f.num(), (x + DensePoly1(1)) * Rat(1, 2));
  EXPECT_EQ(f.den(), DensePoly1(1));
  RatFun1 g(DensePoly1(1), x * x - DensePoly1(1));
  RatFun1 h(DensePoly1(Rat(-3)), DensePoly1(Rat(-3)) * (x * x - DensePoly1(1)));
  EXPECT_EQ(g, h);
  EXPECT_TRUE(g.equals_by_cross_multiplication(h));
  EXPECT_TRUE((g - h).is_zero());
  EXPECT_EQ(g * g.inverse(), RatFun1(1));
  EXPECT_EQ(RatFun1::kappa_power(3) * RatFun1::kappa_power(-5), RatFun1::kappa_power(-2));
  EXPECT_EQ(RatFun1::from_laurent(-1, {Rat(-1), Rat(0), Rat(1)}), RatFun1::kappa_power(1) - RatFun1::kappa_power(-1));
}

TEST(RatFun1, FieldAxiomsRandomized) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> co(-4, 4);
  auto rnd = [&]() {
    DensePoly1 n({Rat(co(rng)), Rat(co(rng)), Rat(co(rng))});
    DensePoly1 d({Rat(co(rng)), Rat(co(rng)), Rat(1)});
    return RatFun1(n, d.is_zero() ? DensePoly1(1) : d);
  };
  for (int it = 0; it < 30; ++it) {
    auto a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a == b, a.equals_by_cross_multiplication(b));
  }
}

TEST(EpsLaurent, InverseBookkeeping) {
  // eps * (1 + eps) known through eps^3 -> inverse eps^-1 (1 - eps + eps^2 ...) through eps^1
  auto a = EpsLaurent::exact({{1, RatFun1(1)}, {2, RatFun1(1)}}).truncated(3);
  auto inv = a.inverse();
  EXPECT_EQ(inv.order(), 1);
  EXPECT_EQ(inv.valuation(), -1);
  EXPECT_EQ(inv.coeff(-1), RatFun1(1));
  EXPECT_EQ(inv.coeff(0), RatFun1(-1));
  EXPECT_EQ(inv.coeff(1), RatFun1(1));
  EXPECT_THROW(inv.coeff(2), ArithmeticError);
  auto prod = (a * inv);
  EXPECT_EQ(prod.order(), 2);
  EXPECT_EQ(prod.coeff(0), RatFun1(1));
  EXPECT_TRUE(prod.coeff(1).is_zero());
  EXPECT_EQ(prod.pole_order(), 0);
  EXPECT_EQ(EpsLaurent::monomial(-3).pole_order(), 3);
}

TEST(EpsLaurent, ExactInverseNeedsCap) {
  auto a = EpsLaurent::exact({{0, RatFun1(1)}, {1, RatFun1(-1)}});
  EXPECT_THROW(a.inverse(), ArithmeticError);
  auto inv = a.inverse(4);
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(inv.coeff(d), RatFun1(1));
}

TEST(PolyJ, Eval) {
  PolyJ p;
  p.add_term({2, 0, 0}, Rat(1, 12));
  p.add_term({0, 2, 0}, Rat(1, 12));
  p.add_term({0, 0, 2}, Rat(-1, 12));
  p.add_term({1, 0, 0}, Rat(1, 6));
  p.add_term({0, 1, 0}, Rat(1, 6));
  p.add_term({0, 0, 1}, Rat(-1, 6));
  EXPECT_EQ(p.eval(1, 1, 0), Rat(1, 2));
  EXPECT_EQ(PolyJ().eval(3, 4, 5), Rat(0));
  EXPECT_EQ(PolyJ(1).eval(5, 3, 2), Rat(1));
  EXPECT_EQ(p.total_degree(), 2);
}

TEST(Linalg, NullspaceRankInverse) {
  RatMatrix m = {{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(1), Rat(0), Rat(1, 2)}};
  EXPECT_EQ(rank(m, 3), 2u);
  auto ns = nullspace(m, 3);
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& row : m) {
    Rat s(0);
    for (int j = 0; j < 3; ++j) s += row[j] * ns[0][j];
    EXPECT_TRUE(s.is_zero());
  }
  RatMatrix a = {{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
  auto inv = inverse(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ((*inv)[0][0], Rat(1));
  EXPECT_EQ((*inv)[0][1], Rat(-1));
  EXPECT_EQ((*inv)[1][1], Rat(2));
  EXPECT_FALSE(inverse(m).has_value());
  EXPECT_TRUE(same_span({{Rat(1), Rat(1)}}, {{Rat(-3), Rat(-3)}}, 2));
  EXPECT_FALSE(same_span({{Rat(1), Rat(1)}}, {{Rat(1), Rat(0)}}, 2));
}
