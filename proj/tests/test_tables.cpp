#include <gtest/gtest.h>

#include "motzkin/gf/closed_forms.hpp"
#include "motzkin/gf/columns.hpp"
#include "motzkin/gf/published.hpp"
#include "motzkin/gf/table.hpp"
#include "motzkin/paths/oracle.hpp"

namespace motzkin {
namespace {

PlateauTable oracle_table(unsigned r, std::size_t nmax) {
  return table_from_series(r, oracle::count_series(nmax, oracle::StatisticSpec::plateaus(r)), nmax);
}

TEST(BaseColumn, Examples) {
  const auto c = base_column(1, 12);
  const std::vector<long> expected = {1, 1, 2, 3, 7, 15, 36, 85, 209, 517, 1303, 3312, 8510};
  for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(c[n], expected[n]) << n;
  EXPECT_THROW(base_column(0, 4), std::invalid_argument);
}

TEST(BaseColumn, SplitFormAgrees) { EXPECT_EQ(base_column(1, 40), base_column_split_form(40)); }

TEST(BaseColumn, MatchesOracle) {
  for (unsigned r = 1; r <= 4; ++r) {
    const auto c = base_column(r, 14);
    const PlateauTable t = oracle_table(r, 14);
    for (std::size_t n = 0; n <= 14; ++n) EXPECT_EQ(c[n], t.at(n, 0)) << "r=" << r << " n=" << n;
  }
}

TEST(Recursion, Examples) {
  const PlateauTable t = table_from_recursion(1, 14);
  EXPECT_EQ(t.at(9, 3), 1);
  EXPECT_EQ(t.at(13, 4), 5);
  EXPECT_EQ(t.at(6, 2), 1);
  EXPECT_EQ(t.at(11, 3), 20);
  EXPECT_EQ(t.at(5, 2), 0);
  EXPECT_EQ(t.at(-1, 0), 0);
  EXPECT_EQ(t, published_plateau_table());
}

TEST(Recursion, MatchesOracle) {
  for (unsigned r = 1; r <= 3; ++r) EXPECT_EQ(table_from_recursion(r, 15), oracle_table(r, 15)) << r;
  EXPECT_EQ(table_from_recursion(1, 17), oracle_table(1, 17));
}

TEST(Recursion, StaysIntegralFarOut) {
  for (unsigned r = 1; r <= 4; ++r) EXPECT_NO_THROW(table_from_recursion(r, 60)) << r;
}

TEST(Table, ShapeAndRowSums) {
  const PlateauTable t = table_from_recursion(2, 20);
  EXPECT_EQ(t.row(7).size(), 2u);
  EXPECT_EQ(t.row(8).size(), 3u);
  // Row sums are Motzkin numbers; checked against path counts.
  for (std::size_t n = 0; n <= 14; ++n) {
    std::size_t count = 0;
    oracle::for_each_path(n, [&](auto) { ++count; });
    EXPECT_EQ(t.row_sum(n), BigInt(count)) << n;
  }
}

TEST(Table, FromSeriesRejectsCoefficientsOutsideTriangle) {
  EXPECT_THROW(table_from_series(1, polynomial(4, {{1, 2, 1}}), 4), std::domain_error);
}

TEST(F0, Examples) {
  const XSeries f0 = f0_closed(1, 14);
  const auto c = base_column(1, 14);
  for (std::size_t n = 0; n <= 14; ++n) EXPECT_EQ(f0.coeff(n), c[n]) << n;
  for (unsigned r = 2; r <= 3; ++r) {
    const XSeries f = f0_closed(r, 30);
    const auto b = base_column(r, 30);
    for (std::size_t n = 0; n <= 30; ++n) EXPECT_EQ(f.coeff(n), b[n]) << r << " " << n;
  }
}

TEST(ExplicitGf, MatchesOracle) {
  for (unsigned r = 0; r <= 3; ++r)
    EXPECT_EQ(explicit_gf(r, 14), oracle::count_series(14, oracle::StatisticSpec::plateaus(r))) << r;
}

TEST(ExplicitGf, Specializations) {
  for (unsigned r = 1; r <= 3; ++r) {
    const XSeries g = explicit_gf(r, 24);
    EXPECT_EQ(subst_y_const(g, BigInt(0)), f0_closed(r, 24));
    // y = 1 gives the Motzkin series M = 1 + x M + x^2 M^2.
    const XSeries m = subst_y_const(g, BigInt(1));
    EXPECT_EQ(m, XSeries::constant(24, 1) + XSeries::x(24) * m + XSeries::x(24, 2) * m * m);
  }
}

TEST(ExplicitGf, YDegreeBound) {
  for (unsigned r = 0; r <= 3; ++r) {
    const XSeries g = explicit_gf(r, 30);
    for (std::size_t n = 0; n <= 30; ++n) EXPECT_LE(g[n].degree_y(), n / (r + 2)) << r << " " << n;
  }
}

TEST(ExplicitGf, PeaksMatchTransferCount) {
  // Step-by-step count over (height, last step was U), carrying the peak
  // count as the y-degree.
  const std::size_t nmax = 16;
  using State = std::vector<std::vector<std::vector<BigInt>>>;  // [height][lastU][peaks]
  const std::size_t hmax = nmax / 2 + 1, pmax = nmax / 2 + 1;
  State cur(hmax + 1, std::vector<std::vector<BigInt>>(2, std::vector<BigInt>(pmax + 1)));
  cur[0][0][0] = 1;
  const XSeries g = explicit_gf(0, nmax);
  for (std::size_t n = 0;; ++n) {
    for (std::size_t p = 0; p <= pmax; ++p) EXPECT_EQ(g.coeff(n, p), cur[0][0][p] + cur[0][1][p]) << n << " " << p;
    if (n == nmax) break;
    State next(hmax + 1, std::vector<std::vector<BigInt>>(2, std::vector<BigInt>(pmax + 1)));
    for (std::size_t h = 0; h <= hmax; ++h)
      for (int u = 0; u < 2; ++u)
        for (std::size_t p = 0; p <= pmax; ++p) {
          const BigInt& v = cur[h][u][p];
          if (v == 0) continue;
          if (h < hmax) next[h + 1][1][p] += v;
          next[h][0][p] += v;
          if (h > 0) next[h - 1][0][u ? p + 1 : p] += v;
        }
    cur = std::move(next);
  }
}

TEST(ColumnGf, Examples) {
  const XSeries f1 = column_gf(1, 1, 14);
  const std::vector<long> expected = {0, 0, 0, 1, 2, 6, 14, 39, 102, 280, 758, 2085, 5730, 15849, 43914};
  for (std::size_t n = 0; n <= 14; ++n) EXPECT_EQ(f1.coeff(n), expected[n]) << n;
  EXPECT_EQ(column_gf(1, 2, 6).coeff(6), 1);
  EXPECT_EQ(column_gf(1, 3, 11).coeff(11), 20);
}

TEST(ColumnGf, MatchesRecursion) {
  for (unsigned r = 1; r <= 3; ++r) {
    const std::size_t order = 30;
    const PlateauTable t = table_from_recursion(r, order);
    const auto cols = column_gfs(r, order / (r + 2), order);
    for (std::size_t p = 0; p < cols.size(); ++p)
      for (std::size_t n = 0; n <= order; ++n) EXPECT_EQ(cols[p].coeff(n), t.at(n, p)) << r << " " << p << " " << n;
  }
}

}  // namespace
}  // namespace motzkin
