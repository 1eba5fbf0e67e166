#include <gtest/gtest.h>

#include "qseries/lerch.hpp"
#include "qseries/products.hpp"
#include "support.hpp"

using namespace qseries;
using qtest::uniform;

namespace {

::testing::AssertionResult same(const Series& a, const Series& b) {
  auto c = compare(a, b);
  if (c.equal()) {
    return ::testing::AssertionSuccess();
  }
  return ::testing::AssertionFailure() << "differ at q^" << c.mismatch->exponent << ": " << c.mismatch->lhs << " vs "
                                       << c.mismatch->rhs;
}

Series geometric(int step, int start, int order) {
  return Series::monomial(Rational(1), start, std::max(start, order)).div_binomial(Rational(1), step).truncated(order);
}

Series E2(int M, int n) {
  Series e = product_quotient({M, {M}, {}}, n);
  return e * e;
}

}  // namespace

TEST(Bilateral, TermsAndRewrite) {
  BilateralSpec s{5, 5, 0, 5, 1, false};
  EXPECT_TRUE(same(bilateral_term(s, 0, 20), geometric(1, 0, 20)));
  // m = -1: -q^0/(1 - q^-4) = q^4/(1 - q^4)
  EXPECT_TRUE(same(bilateral_term(s, -1, 20), geometric(4, 4, 20)));
}

TEST(Bilateral, EqElevenRightSide) {
  Series lhs = eval_bilateral({5, 5, 0, 5, 1, false}, 60);
  EXPECT_TRUE(same(lhs, E2(5, 60) * named_product("G", 60)));
  EXPECT_EQ(lhs.order(), 60);
}

TEST(Bilateral, Validation) {
  EXPECT_THROW(eval_bilateral({5, 4, 0, 5, 1, false}, 10), InvalidConstruction);
  EXPECT_THROW(eval_bilateral({0, 2, 0, 5, 1, false}, 10), InvalidConstruction);
  EXPECT_THROW(eval_bilateral({5, 1, -1, 5, 0, false}, 10), PoleError);
  EXPECT_THROW(eval_bilateral({5, 5, 0, 5, -10, true}, 10), PoleError);
  EXPECT_THROW(eval_primed({5, 5, 0, 5, 1, false}, 10), InvalidConstruction);
}

TEST(Primed, SkipsZeroTerm) {
  BilateralSpec s{5, 1, -1, 5, 0, true};
  // m = 1: -q^{(5+1)/2 - 1}/(1 - q^5) = -q^2/(1 - q^5)
  EXPECT_TRUE(same(bilateral_term(s, 1, 30), -geometric(5, 2, 30)));
  Series full = eval_primed(s, 30);
  EXPECT_EQ(full.order(), 30);
}

TEST(Primed, AgreesWithFullSumMinusZeroTerm) {
  for (int i = 0; i < 100; ++i) {
    const int A = uniform(1, 9);
    const int B = uniform(-9, 9) * 2 + (A % 2);
    const int D = uniform(1, 7);
    const int E = uniform(1, D * 3);
    if (E % D == 0) {
      continue;
    }
    BilateralSpec full{A, B, uniform(-2, 2), D, E, false};
    BilateralSpec primed = full;
    primed.primed = true;
    const int n = 30;
    ASSERT_TRUE(same(eval_bilateral(full, n) - bilateral_term(full, 0, n), eval_primed(primed, n))) << full.str();
  }
}

TEST(Bilateral, ParityInvariantForRegistrySpecs) {
  const BilateralSpec specs[] = {
      {5, 3, 0, 5, 1, false},     {5, -3, 0, 5, -2, false},   {5, 5, 0, 5, 1, false},      {5, 5, 0, 5, 2, false},
      {5, 1, -1, 5, -1, false},   {5, -1, -1, 5, -2, false},  {5, 1, -1, 5, 0, true},      {5, 3, -1, 5, 0, true},
      {5, 7, 0, 5, 2, false},     {1, 1, 0, 5, 0, true},      {1, 3, 0, 5, 0, true},       {25, 15, 0, 25, 5, false},
      {25, 5, -5, 25, 0, true},   {25, 35, 0, 25, 10, false}, {7, 3, 0, 7, 1, false},      {7, 9, 1, 7, 3, false},
      {7, 11, 1, 7, 3, false},    {7, 1, -1, 7, 0, true},     {1, 5, 0, 7, 0, true},       {49, 63, 7, 49, 14, false},
      {49, 7, -7, 49, -14, false}, {49, 77, 7, 49, 21, false}, {49, 35, 0, 49, 0, true},   {7, -3, -1, 7, -3, false}};
  for (const auto& s : specs) {
    EXPECT_NO_THROW(s.validate()) << s.str();
    for (long m = -50; m <= 50; ++m) {
      ASSERT_EQ((s.A * m * m + s.B * m) % 2, 0) << s.str() << " m=" << m;
    }
  }
}

TEST(Bilateral, ReindexNegation) {
  // sum_{n>=1} (-1)^n q^{n(n+1)/2+3n}/(1-q^{5n}) = -sum_{n<=-1} (-1)^n q^{n(n+1)/2+n}/(1-q^{5n})
  const int order = 50;
  BilateralSpec pos{1, 7, 0, 5, 0, true};
  BilateralSpec neg{1, 3, 0, 5, 0, true};
  Series lhs = Series::zero(order), rhs = Series::zero(order);
  for (long m = 1; (m * m - 3 * m) / 2 <= order; ++m) {
    lhs = lhs + bilateral_term(pos, m, order);
    rhs = rhs - bilateral_term(neg, -m, order);
  }
  EXPECT_TRUE(same(lhs, rhs));
}

TEST(Appell, SOneRelation) {
  const int n = 50;
  Series s1 = eval_bilateral({5, 3, 0, 5, 1, false}, n);
  Series rhs = build_to_order(n, [](int m) { return -(jtheta(-1, 5, m) * appell_m(2, 5, -1, m)).shifted(1); });
  EXPECT_TRUE(same(s1, rhs));
}

TEST(Appell, ValidityReachesRequestedOrder) {
  for (auto [a, M, b] : {std::tuple{2, 5, -1}, std::tuple{3, 7, -6}, std::tuple{2, 7, 1}, std::tuple{1, 5, -3}}) {
    EXPECT_GE(appell_m(a, M, b, 40).order(), 40);
  }
}

TEST(Appell, ModSevenProduct) {
  Series lhs = appell_m(3, 7, -1, 60) - appell_m(3, 7, -6, 60);
  EXPECT_TRUE(same(lhs, product_quotient({7, {7}, {1, 6, 1, 6}}, 60)));
}

TEST(Appell, ChangeOfZ) {
  EXPECT_TRUE(appell_change_z(2, 5, -3, -3, 30).is_zero_series());
  EXPECT_TRUE(same(appell_change_z(2, 5, -4, -1, 50), product_quotient({5, {2, 3, 5}, {1, 1, 1, 4, 4, 4}}, 50)));
  EXPECT_THROW(appell_change_z(2, 5, 0, -1, 20), ZeroThetaError);
  EXPECT_THROW(appell_m(2, 5, 5, 20), ZeroThetaError);
}

TEST(Appell, DifferencesMatchChangeOfZ) {
  const int tuples[][4] = {{2, 5, -4, -1}, {1, 5, -2, -3}, {3, 7, -6, -1}, {3, 7, -2, -5}, {2, 7, 1, -1}};
  for (const auto& t : tuples) {
    Series lhs = appell_m(t[0], t[1], t[3], 50) - appell_m(t[0], t[1], t[2], 50);
    EXPECT_TRUE(same(lhs, appell_change_z(t[0], t[1], t[2], t[3], 50))) << t[0] << "," << t[1] << "," << t[2];
  }
}

TEST(Lambert, FirstTermAndErrors) {
  Series l = lambert(5, 2, 5, 1, 6);
  // q^2/(1-q) + q^7/(1-q^6) + ...
  EXPECT_TRUE(same(l, geometric(1, 2, 6)));
  EXPECT_THROW(lambert(5, 2, 5, 0, 6), PoleError);
  EXPECT_THROW(lambert(5, 2, -1, 3, 6), PoleError);
  EXPECT_THROW(lambert(0, 2, 5, 1, 6), DivergenceError);
}

TEST(Lambert, Reindex) {
  for (int a = 1; a <= 4; ++a) {
    EXPECT_TRUE(same(lambert(5, 0, 5, a, 50), lambert(a, 0, 5, 5, 50))) << a;
  }
}

TEST(Master, Examples) {
  Series m5 = build_master_lhs(5, 60);
  EXPECT_EQ(m5.coef(0), Rational(0));
  Series bil = eval_primed({1, 1, 0, 5, 0, true}, 60) - eval_primed({1, 3, 0, 5, 0, true}, 60).scaled(Rational(2));
  EXPECT_TRUE(same(m5, bil * named_product("euler", 60).inverse()));
}

TEST(BuildToOrder, GrowsMargin) {
  // q^-3 times a series loses three orders of validity; build_to_order recovers them.
  auto f = [](int m) { return Series::monomial(Rational(1), -3, m) * geometric(1, 0, m); };
  EXPECT_EQ(f(20).order(), 17);
  Series s = build_to_order(20, f);
  EXPECT_EQ(s.order(), 20);
  EXPECT_EQ(s.coef(20), Rational(1));
}
