#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "motzkin/errors.hpp"
#include "motzkin/gf/closed_forms.hpp"
#include "motzkin/series/series.hpp"

namespace motzkin {

/// Column generating functions f_0 .. f_pmax, where f_p counts paths with
/// exactly p plateaus of length r:
///   f_p = ((x/p) d/dx[x^{r+2} f_{p-1}] - (r+1) x^{r+2} f_{p-1}) / (1 - (r+1) x^{r+2}).
/// The bracket is formed over the rationals and must clear to integers.
inline std::vector<XSeries> column_gfs(unsigned r, std::size_t pmax, std::size_t order) {
  const std::size_t w = r + 2;
  std::vector<XSeries> cols{f0_closed(r, order)};
  const XSeries damping = series_recip(polynomial(order, {{1, 0}, {-static_cast<long long>(r + 1), w}}));
  for (std::size_t p = 1; p <= pmax; ++p) {
    const RationalSeries prev = to_rational(cols.back());
    const RationalSeries lifted = shift_up(prev, w);
    const RationalSeries sewn = scale(shift_up(series_dx(lifted), 1), BigRational(1, static_cast<long long>(p)));
    const RationalSeries bracket =
        (sewn - scale(lifted, BigRational(static_cast<long long>(r + 1)))).truncated(order);
    XSeries integral(0);
    try {
      integral = to_integer(bracket);
    } catch (const NonIntegralResult& e) {
      throw IntegralityViolation("column_gf(r=" + std::to_string(r) + ", p=" + std::to_string(p) + "): " + e.what());
    }
    cols.push_back(damping * integral);
  }
  return cols;
}

inline XSeries column_gf(unsigned r, std::size_t p, std::size_t order) { return column_gfs(r, p, order).back(); }

/// Sum_j q^j, for q with no constant term, truncated to q's order.
template <class C>
BasicSeries<C> geometric_sum(const BasicSeries<C>& q) {
  if (!q[0].is_zero()) throw NonUnitConstantTerm("geometric_sum: ratio must have zero constant term");
  BasicSeries<C> sum = BasicSeries<C>::constant(q.order(), C(1));
  BasicSeries<C> term = sum;
  for (std::size_t j = 1; j <= q.order(); ++j) {
    term = term * q;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

/// g minus the integral/differential form
///   (1 - a)/(1 - a(1-y)) * (f_0 + x/(1 - a) * d/dx[x^{r+2} int_0^y g dt]),
/// a = (r+1) x^{r+2}, with g and f_0 supplied by the caller. The y-degree of g
/// must be at most pmax.
inline RationalSeries theorem1_residual(unsigned r, const XSeries& g, const XSeries& f0, std::size_t pmax) {
  const std::size_t n = std::min(g.order(), f0.order());
  for (std::size_t k = 0; k <= n; ++k)
    if (g[k].degree_y() > pmax)
      throw std::invalid_argument("theorem1_residual: y-degree of g exceeds pmax at x^" + std::to_string(k));
  const std::size_t w = r + 2;
  const RationalSeries a = polynomial<BigRational>(n, {{static_cast<long long>(r + 1), w}});
  const RationalSeries one = RationalSeries::constant(n, BigRational(1));
  const RationalSeries a_one_minus_y = polynomial<BigRational>(n, {{static_cast<long long>(r + 1), w},
                                                                     {-static_cast<long long>(r + 1), w, 1}});
  const RationalSeries prefactor = (one - a) * geometric_sum(a_one_minus_y);
  const RationalSeries inner = shift_up(series_dx(shift_up(integrate_y(g), w)), 1).truncated(n);
  const RationalSeries rhs = prefactor * (to_rational(f0) + inner * geometric_sum(a));
  return to_rational(g.truncated(n)) - rhs;
}

/// The residual with g = explicit_gf(r, order) and f_0 = f0_closed(r, order).
inline RationalSeries theorem1_residual(unsigned r, std::size_t order, std::size_t pmax) {
  if (pmax < order / (r + 2)) throw std::invalid_argument("theorem1_residual: pmax must be >= order / (r+2)");
  return theorem1_residual(r, explicit_gf(r, order), f0_closed(r, order), pmax);
}

}  // namespace motzkin
