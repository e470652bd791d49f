#include <gtest/gtest.h>

#include "motzkin/gf/diagonal.hpp"
#include "motzkin/gf/table.hpp"
#include "motzkin/paths/oracle.hpp"

namespace motzkin {
namespace {

TEST(Diagonal, Numerators) {
  const auto h = diagonal_gfs(5);
  EXPECT_EQ(h[0].numerator, DensePoly<BigInt>{1});
  EXPECT_EQ(h[1].numerator, DensePoly<BigInt>{1});
  EXPECT_EQ(h[2].numerator, DensePoly<BigInt>{2});
  EXPECT_EQ(h[3].numerator, (DensePoly<BigInt>{3, 2, -1}));
  EXPECT_EQ(h[3].denominator_exponent(), 4u);
}

TEST(Diagonal, Expansions) {
  EXPECT_EQ(diagonal_gf(2).expand(5), (std::vector<BigInt>{2, 6, 12, 20, 30, 42}));
  EXPECT_EQ(diagonal_gf(4).expand(2)[2], 123);
  EXPECT_EQ(diagonal_gf(1).expand(3)[3], 4);     // c_10^3
  EXPECT_EQ(diagonal_gf(7).expand(1)[1], 758);   // c_10^1
  EXPECT_EQ(diagonal_gf(0).expand(4), (std::vector<BigInt>{1, 1, 1, 1, 1}));
}

TEST(Diagonal, NumeratorDegree) {
  const auto h = diagonal_gfs(12);
  for (std::size_t k = 0; k <= 12; ++k) EXPECT_EQ(h[k].numerator.degree(), static_cast<long>(2 * (k / 3))) << k;
}

TEST(Diagonal, ExpansionsMatchOracle) {
  // c_{3m+k}^m counted directly from paths.
  const std::size_t nmax = 16;
  const PlateauTable t = table_from_series(1, oracle::count_series(nmax, oracle::StatisticSpec::plateaus(1)), nmax);
  for (std::size_t k = 0; k <= 7; ++k) {
    const auto e = diagonal_gf(k).expand(nmax / 3);
    for (std::size_t m = 0; 3 * m + k <= nmax; ++m) EXPECT_EQ(e[m], t.at(3 * m + k, m)) << k << " " << m;
  }
}

TEST(Diagonal, ExpansionsMatchRecursionFarOut) {
  const PlateauTable t = table_from_recursion(1, 60);
  for (std::size_t k = 0; k <= 10; ++k) {
    const auto e = diagonal_gf(k).expand(15);
    for (std::size_t m = 0; 3 * m + k <= 60 && m <= 15; ++m) EXPECT_EQ(e[m], t.at(3 * m + k, m)) << k << " " << m;
  }
}

}  // namespace
}  // namespace motzkin
