#pragma once

#include <random>

#include "motzkin/series/series.hpp"

namespace motzkin::testing_support {

/// Sparse random series: small integer coefficients, y/z degree <= 2.
/// With unit_constant the constant term is exactly 1.
inline XSeries random_series(std::mt19937& rng, std::size_t order, bool unit_constant = false) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> marker(0, 2);
  std::uniform_int_distribution<int> terms(0, 3);
  std::vector<MarkerPoly> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    std::vector<MarkerPoly::Term> t;
    for (int i = terms(rng); i > 0; --i)
      t.push_back({Monomial{static_cast<std::uint32_t>(marker(rng)), static_cast<std::uint32_t>(marker(rng))},
                   BigInt(coeff(rng))});
    c[n] = MarkerPoly::from_terms(std::move(t));
  }
  if (unit_constant) c[0] = MarkerPoly(1);
  return XSeries(order, std::move(c));
}

}  // namespace motzkin::testing_support
