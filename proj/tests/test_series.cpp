#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "motzkin/gf/closed_forms.hpp"
#include "motzkin/paths/oracle.hpp"
#include "motzkin/series/series.hpp"

namespace motzkin {
namespace {

XSeries one(std::size_t n) { return XSeries::constant(n, 1); }

TEST(SeriesAdd, Examples) {
  EXPECT_EQ(polynomial(6, {{1, 0}, {1, 1}}) + polynomial(6, {{1, 0}, {-1, 1}}), XSeries::constant(6, 2));
  const XSeries a = polynomial(6, {{3, 0}, {-2, 4, 1, 1}});
  EXPECT_EQ(a + XSeries(6), a);
  EXPECT_EQ(polynomial(6, {{1, 1, 1}}) + polynomial(6, {{1, 1, 1}}), polynomial(6, {{2, 1, 1}}));
}

TEST(SeriesAdd, MixedOrderTruncatesToMinimum) {
  const XSeries sum = XSeries::x(3) + XSeries::x(7, 5);
  EXPECT_EQ(sum.order(), 3u);
  EXPECT_EQ(sum, XSeries::x(3));
  EXPECT_NE(XSeries(3), XSeries(4));
}

TEST(SeriesMul, Examples) {
  EXPECT_EQ(polynomial(8, {{1, 0}, {1, 1}}) * polynomial(8, {{1, 0}, {-1, 1}}), polynomial(8, {{1, 0}, {-1, 2}}));
  const XSeries a = polynomial(8, {{5, 1, 2}, {-1, 3, 0, 1}});
  EXPECT_EQ(a * one(8), a);
  std::vector<MarkerPoly> ones(9, MarkerPoly(1));
  EXPECT_EQ(XSeries(8, ones) * polynomial(8, {{1, 0}, {-1, 1}}), one(8));
}

TEST(SeriesRecip, Examples) {
  EXPECT_EQ(series_recip(polynomial(10, {{1, 0}, {-1, 1}})), XSeries(10, std::vector<MarkerPoly>(11, MarkerPoly(1))));
  EXPECT_EQ(series_recip(one(5)), one(5));

  const XSeries fib_den = polynomial(10, {{1, 0}, {-1, 1}, {-1, 2}});
  const XSeries fib = series_recip(fib_den);
  const std::vector<int> expected = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(fib.coeff(n), expected[n]) << n;
  EXPECT_EQ(fib * fib_den, one(10));
}

TEST(SeriesRecip, MinusOneConstantTerm) {
  const XSeries a = polynomial(6, {{-1, 0}, {1, 1, 1}});
  EXPECT_EQ(a * series_recip(a), one(6));
}

TEST(SeriesRecip, RejectsNonUnitConstantTerm) {
  EXPECT_THROW(series_recip(polynomial(4, {{2, 0}, {1, 1}})), NonUnitConstantTerm);
  EXPECT_THROW(series_recip(polynomial(4, {{1, 0}, {1, 0, 1}})), NonUnitConstantTerm);
  EXPECT_THROW(series_recip(XSeries::x(4)), NonUnitConstantTerm);
}

TEST(SeriesSqrt, Examples) {
  EXPECT_EQ(series_sqrt(one(7)), one(7));
  const XSeries one_plus_x = polynomial(7, {{1, 0}, {1, 1}});
  EXPECT_EQ(series_sqrt(one_plus_x * one_plus_x), one_plus_x);

  // sqrt(1 - 4x): the expected values are confirmed by squaring back.
  const XSeries radicand = polynomial(8, {{1, 0}, {-4, 1}});
  const XSeries root = series_sqrt(radicand);
  const std::vector<int> expected = {1, -2, -2, -4, -10, -28, -84, -264, -858};
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(root.coeff(n), expected[n]) << n;
  EXPECT_EQ(root * root, radicand);
}

TEST(SeriesSqrt, Errors) {
  EXPECT_THROW(series_sqrt(polynomial(4, {{4, 0}, {1, 1}})), NonUnitConstantTerm);
  EXPECT_THROW(series_sqrt(polynomial(4, {{-1, 0}})), NonUnitConstantTerm);
  EXPECT_THROW(series_sqrt(polynomial(4, {{1, 0}, {1, 1}})), NonIntegralResult);
  // Over the rationals the same input is fine.
  const RationalSeries r = series_sqrt(polynomial<BigRational>(4, {{1, 0}, {1, 1}}));
  EXPECT_EQ(r.coeff(1), BigRational(1, 2));
  EXPECT_EQ(r.coeff(2), BigRational(-1, 8));
}

TEST(SeriesDx, Examples) {
  EXPECT_EQ(series_dx(XSeries::x(6, 3)), polynomial(5, {{3, 2}}));
  EXPECT_TRUE(series_dx(XSeries::constant(6, 7)).is_zero());
  EXPECT_EQ(series_dx(XSeries::constant(6, 7)).order(), 5u);

  // d/dx[x^3 f0]: coefficient n is (n+1) * c_{n-2}^0.
  const XSeries f0 = f0_closed(1, 12);
  const XSeries d = series_dx(shift_up(f0, 3));
  for (std::size_t n = 0; n <= d.order(); ++n)
    EXPECT_EQ(d.coeff(n), n >= 2 ? BigInt(n + 1) * f0.coeff(n - 2) : BigInt(0)) << n;
}

TEST(IntegrateY, Examples) {
  EXPECT_EQ(integrate_y_exact(one(3)), polynomial(3, {{1, 0, 1}}));
  EXPECT_EQ(integrate_y_exact(polynomial(3, {{2, 0, 1}})), polynomial(3, {{1, 0, 2}}));
  const RationalSeries ig = integrate_y(explicit_gf(1, 6));
  EXPECT_EQ(ig.coeff(3, 1), BigRational(3));
  EXPECT_EQ(ig.coeff(3, 2), BigRational(1, 2));
  EXPECT_THROW(integrate_y_exact(polynomial(3, {{1, 0, 1}})), NonIntegralResult);
}

TEST(SubstY, Examples) {
  const XSeries g = explicit_gf(1, 12);
  const XSeries at_one = subst_y_const(g, BigInt(1));
  for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(at_one.coeff(n), BigInt(oracle::enumerate(n).size())) << n;
  EXPECT_EQ(subst_y_const(g, BigInt(0)), f0_closed(1, 12));
  EXPECT_TRUE(subst_y_const(polynomial(3, {{1, 1, 1}}), BigInt(0)).is_zero());
  // z is untouched.
  EXPECT_EQ(subst_y_const(polynomial(3, {{1, 1, 2, 1}}), BigInt(3)), polynomial(3, {{9, 1, 0, 1}}));
}

TEST(SubstDiagonal, Examples) {
  EXPECT_EQ(subst_diagonal(polynomial(6, {{1, 3, 1}}), 1), polynomial(6, {{1, 0, 0, 1}}));
  EXPECT_EQ(subst_diagonal(polynomial(6, {{1, 6, 2}}), 1), polynomial(6, {{1, 0, 0, 2}}));
  EXPECT_EQ(subst_diagonal(polynomial(8, {{1, 8, 2}}), 2), polynomial(8, {{1, 0, 0, 2}}));

  const XSeries g = explicit_gf(1, 30);
  const XSeries diag = subst_diagonal(g, 1);
  for (std::uint32_t m = 0; m <= 10; ++m) EXPECT_EQ(diag.coeff(0, 0, m), 1) << m;
}

TEST(SubstDiagonal, RejectsNegativeExponent) {
  EXPECT_THROW(subst_diagonal(polynomial(6, {{1, 2, 1}}), 1), NegativeExponent);
  EXPECT_THROW(subst_diagonal(polynomial(6, {{1, 3, 1}}), 2), NegativeExponent);
}

TEST(Render, Canonical) {
  EXPECT_EQ(to_string(polynomial(3, {{1, 0}, {1, 1}, {2, 2}, {3, 3}, {1, 3, 1}})), "1 + x + 2*x^2 + 3*x^3 + x^3*y");
  EXPECT_EQ(to_string(XSeries(4)), "0");
  EXPECT_EQ(to_string(polynomial(4, {{-1, 0}, {-2, 1}, {1, 2, 0, 1}, {-1, 2, 1}, {5, 4, 2, 3}})),
            "-1 - 2*x + x^2*z - x^2*y + 5*x^4*y^2*z^3");
  EXPECT_EQ(to_string(polynomial(2, {{1, 0, 1}})), "y");
  EXPECT_EQ(to_string(integrate_y(polynomial(2, {{1, 2, 1}}))), "1/2*x^2*y^2");
}

// ---- properties ------------------------------------------------------------

class SeriesProperties : public ::testing::Test {
 protected:
  std::mt19937 rng{20240611};
};

TEST_F(SeriesProperties, RingAxioms) {
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t order = 1 + trial % 9;
    const XSeries a = testing_support::random_series(rng, order);
    const XSeries b = testing_support::random_series(rng, order);
    const XSeries c = testing_support::random_series(rng, order);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST_F(SeriesProperties, RecipAndSqrtAreInverses) {
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t order = 1 + trial % 12;
    XSeries a = testing_support::random_series(rng, order, /*unit_constant=*/true);
    EXPECT_EQ(a * series_recip(a), one(order));
    EXPECT_EQ(series_sqrt(a * a), a);
    // The root of a square with constant term 1 squares back exactly.
    const XSeries s = series_sqrt(a * a);
    EXPECT_EQ(s * s, a * a);
  }
}

TEST_F(SeriesProperties, ProductRule) {
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t order = 1 + trial % 10;
    const XSeries a = testing_support::random_series(rng, order);
    const XSeries b = testing_support::random_series(rng, order);
    EXPECT_EQ(series_dx(a * b), series_dx(a) * b + a * series_dx(b));
  }
}

TEST_F(SeriesProperties, EvaluationAtOneIsRingHomomorphism) {
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t order = 1 + trial % 8;
    const XSeries a = testing_support::random_series(rng, order);
    const XSeries b = testing_support::random_series(rng, order);
    const BigInt v = 1;
    EXPECT_EQ(subst_y_const(a + b, v), subst_y_const(a, v) + subst_y_const(b, v));
    EXPECT_EQ(subst_y_const(a * b, v), subst_y_const(a, v) * subst_y_const(b, v));
  }
}

TEST_F(SeriesProperties, DiagonalSubstitutionIsLinearAndMultiplicativeOnMonomials) {
  std::uniform_int_distribution<int> small(0, 3);
  for (int trial = 0; trial < 80; ++trial) {
    const unsigned r = 1 + trial % 3;
    const std::size_t w = r + 2;
    const std::size_t order = 40;
    auto random_monomial = [&] {
      const std::uint32_t p = small(rng);
      const std::size_t n = w * p + small(rng);
      return XSeries::monomial(order, small(rng) - 1, n, p);
    };
    const XSeries a = random_monomial();
    const XSeries b = random_monomial();
    EXPECT_EQ(subst_diagonal(a + b, r), subst_diagonal(a, r) + subst_diagonal(b, r));
    EXPECT_EQ(subst_diagonal(a * b, r), subst_diagonal(a, r) * subst_diagonal(b, r));
  }
}

}  // namespace
}  // namespace motzkin
