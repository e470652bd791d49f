#include <gtest/gtest.h>

#include "motzkin/gf/closed_forms.hpp"
#include "motzkin/gf/columns.hpp"
#include "motzkin/gf/diagonal.hpp"
#include "motzkin/paths/oracle.hpp"

namespace motzkin {
namespace {

TEST(FunctionalResidual, VanishesForExplicitGf) {
  for (unsigned r = 0; r <= 4; ++r) EXPECT_TRUE(functional_residual(r, 30).is_zero()) << r;
}

TEST(FunctionalResidual, VanishesForOracleSeries) {
  for (unsigned r = 0; r <= 3; ++r)
    EXPECT_TRUE(functional_residual(r, oracle::count_series(14, oracle::StatisticSpec::plateaus(r))).is_zero()) << r;
}

TEST(FunctionalResidual, DetectsPerturbation) {
  const XSeries g = explicit_gf(1, 20);
  const XSeries bumped = g + XSeries::x(20, 20);
  const XSeries res = functional_residual(1, bumped);
  EXPECT_FALSE(res.is_zero());
  EXPECT_EQ(res.coeff(20), 1);
  // The wrong r is also caught.
  EXPECT_FALSE(functional_residual(2, g).is_zero());
}

TEST(IntegralFormResidual, Vanishes) {
  for (unsigned r = 1; r <= 3; ++r) EXPECT_TRUE(theorem1_residual(r, 24, 24 / (r + 2)).is_zero()) << r;
}

TEST(IntegralFormResidual, DetectsPerturbedInputs) {
  const std::size_t order = 18;
  const XSeries g = explicit_gf(1, order);
  const XSeries f0 = f0_closed(1, order);
  EXPECT_TRUE(theorem1_residual(1, g, f0, order / 3).is_zero());
  EXPECT_FALSE(theorem1_residual(1, g, f0 + XSeries::x(order, 7), order / 3).is_zero());
  EXPECT_FALSE(theorem1_residual(1, g + XSeries::monomial(order, 1, 9, 2), f0, order / 3).is_zero());
}

TEST(IntegralFormResidual, RejectsSmallPmax) {
  EXPECT_THROW(theorem1_residual(1, 12, 3), std::invalid_argument);
  EXPECT_THROW(theorem1_residual(1, explicit_gf(1, 12), f0_closed(1, 12), 3), std::invalid_argument);
}

TEST(DiagonalPdeResidual, Vanishes) {
  for (unsigned r = 1; r <= 3; ++r) {
    const XSeries res = theorem2_residual(r, 30);
    EXPECT_TRUE(res.is_zero()) << r << ": " << to_string(res);
  }
}

TEST(DiagonalPdeResidual, CoversRequestedWindow) {
  EXPECT_TRUE(theorem2_residual(1, 1, 0).is_zero());
  EXPECT_EQ(theorem2_residual(1, 10, 5).order(), 9u);
  EXPECT_THROW(theorem2_residual(1, 0, 0), std::invalid_argument);
}

TEST(DifdifResidual, Vanishes) {
  for (std::size_t k = 0; k <= 8; ++k)
    for (const auto& v : difdif_residual(k, 10)) EXPECT_EQ(v, 0) << k;
}

TEST(DifdifResidual, DetectsPerturbedNumerator) {
  const auto h = diagonal_gfs(6);
  RationalFn bad = h[6];
  bad.numerator = bad.numerator + DensePoly<BigInt>{0, 1};
  const auto res = difdif_residual(bad, &h[3], 10);
  bool nonzero = false;
  for (const auto& v : res) nonzero = nonzero || v != 0;
  EXPECT_TRUE(nonzero);
  // Dropping the h_{k-3} term also breaks it.
  const auto res2 = difdif_residual(h[6], nullptr, 10);
  nonzero = false;
  for (const auto& v : res2) nonzero = nonzero || v != 0;
  EXPECT_TRUE(nonzero);
}

}  // namespace
}  // namespace motzkin
