#pragma once

#include <cstddef>
#include <string>

#include "motzkin/errors.hpp"
#include "motzkin/series/series.hpp"

namespace motzkin {

namespace detail {

/// (numerator - sqrt(radicand)) / (2 x^2) to `order`, where both inputs are
/// known to order + 2. Picking the minus root must cancel the x^0 and x^1
/// terms and leave an even numerator; anything else is reported loudly.
inline XSeries minus_root_over_2x2(const XSeries& numerator, const XSeries& radicand, std::size_t order,
                                   const std::string& what) {
  XSeries root(0);
  try {
    root = series_sqrt(radicand);
  } catch (const Error& e) {
    throw BranchAssertionFailed(what + ": " + e.what());
  }
  XSeries top = (numerator - root).truncated(order + 2);
  if (!top[0].is_zero() || !top[1].is_zero())
    throw BranchAssertionFailed(what + ": numerator does not vanish to second order");
  try {
    return exact_divide(shift_down(top, 2), BigInt(2));
  } catch (const NonIntegralResult& e) {
    throw BranchAssertionFailed(what + ": " + e.what());
  }
}

}  // namespace detail

/// Generating function of paths with no plateau of length r:
///   (1 - x + x^{r+2} - sqrt((1 - x + x^{r+2})^2 - 4x^2)) / 2x^2.
inline XSeries f0_closed(unsigned r, std::size_t order) {
  const std::size_t m = order + 2;
  const XSeries p = polynomial(m, {{1, 0}, {-1, 1}, {1, r + 2}});
  const XSeries radicand = p * p - polynomial(m, {{4, 2}});
  return detail::minus_root_over_2x2(p, radicand, order, "f0_closed(r=" + std::to_string(r) + ")");
}

/// Bivariate GF with y marking plateaus of length r:
///   (P - sqrt(P^2 - 4x^2)) / 2x^2,  P = 1 - x + x^{r+2} - x^{r+2} y.
/// For r = 1 the factored radicand (1 - 3x + x^3 - x^3 y)(1 + x + x^3 - x^3 y)
/// is also formed and required to agree. r = 0 counts peaks.
inline XSeries explicit_gf(unsigned r, std::size_t order) {
  const std::size_t m = order + 2;
  const XSeries p = polynomial(m, {{1, 0}, {-1, 1}, {1, r + 2}, {-1, r + 2, 1}});
  const XSeries radicand = p * p - polynomial(m, {{4, 2}});
  if (r == 1) {
    const XSeries factored =
        polynomial(m, {{1, 0}, {-3, 1}, {1, 3}, {-1, 3, 1}}) * polynomial(m, {{1, 0}, {1, 1}, {1, 3}, {-1, 3, 1}});
    if (factored != radicand) throw BranchAssertionFailed("explicit_gf(r=1): factored radicand disagrees");
  }
  return detail::minus_root_over_2x2(p, radicand, order, "explicit_gf(r=" + std::to_string(r) + ")");
}

/// g - (1 + x g + x^2 g (g - x^r + x^r y)); zero when g is the plateau GF.
inline XSeries functional_residual(unsigned r, const XSeries& g) {
  const std::size_t n = g.order();
  const XSeries one = XSeries::constant(n, 1);
  const XSeries x = XSeries::x(n);
  const XSeries correction = polynomial(n, {{-1, r}, {1, r, 1}});
  return g - (one + x * g + polynomial(n, {{1, 2}}) * g * (g + correction));
}

inline XSeries functional_residual(unsigned r, std::size_t order) {
  return functional_residual(r, explicit_gf(r, order));
}

}  // namespace motzkin
