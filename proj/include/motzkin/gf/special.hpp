#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "motzkin/errors.hpp"
#include "motzkin/gf/closed_forms.hpp"
#include "motzkin/gf/contfrac.hpp"
#include "motzkin/series/series.hpp"

// Generating functions for path statistics beyond plain plateau counting.
// Each is defined by a correction schedule; the radical closed form is
// evaluated independently and compared against it.

namespace motzkin {

/// A continued-fraction value plus the outcome of comparing it to a closed form.
struct CrossChecked {
  XSeries value;
  XSeries closed_form;
  /// First differing coefficient, when the two disagree.
  std::optional<std::string> mismatch;

  /// The schedule value; throws ClosedFormMismatch if the closed form disagreed.
  const XSeries& checked() const {
    if (mismatch) throw ClosedFormMismatch(*mismatch);
    return value;
  }
};

/// Describes the first coefficient where a and b differ, or nullopt.
inline std::optional<std::string> first_difference(const XSeries& a, const XSeries& b) {
  const std::size_t n_max = std::min(a.order(), b.order());
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (a[n] == b[n]) continue;
    const MarkerPoly diff = a[n] - b[n];
    const auto& t = diff.terms().front();
    const XSeries mono = XSeries::monomial(n, 1, n, t.exp.y, t.exp.z);
    return "coefficient of " + to_string(mono) + ": " + a.coeff(n, t.exp.y, t.exp.z).str() + " vs " +
           b.coeff(n, t.exp.y, t.exp.z).str();
  }
  return std::nullopt;
}

namespace detail {

inline CrossChecked cross_check(const std::string& name, XSeries value, XSeries closed) {
  auto diff = first_difference(value, closed);
  if (diff) *diff = name + ": continued fraction and closed form differ at " + *diff;
  return {std::move(value), std::move(closed), std::move(diff)};
}

inline XSeries y_correction(std::size_t order) { return polynomial(order, {{1, 1, 1}, {-1, 1}}); }   // xy - x
inline XSeries z_correction(std::size_t order) { return polynomial(order, {{1, 2, 0, 1}, {-1, 2}}); }  // x^2 z - x^2

}  // namespace detail

/// Paths with no peaks (no UD), C_k = -1, against
///   (x^2 - x + 1 - sqrt(x^4 - 2x^3 - x^2 - 2x + 1)) / 2x^2.
inline CrossChecked peakfree_gf_checked(std::size_t order) {
  XSeries value = contfrac_gf(CorrectionSchedule::constant(XSeries::constant(order, -1)), order);
  const std::size_t m = order + 2;
  const XSeries numerator = polynomial(m, {{1, 2}, {-1, 1}, {1, 0}});
  const XSeries radicand = polynomial(m, {{1, 4}, {-2, 3}, {-1, 2}, {-2, 1}, {1, 0}});
  XSeries closed = detail::minus_root_over_2x2(numerator, radicand, order, "peakfree_gf");
  return detail::cross_check("peakfree_gf", std::move(value), std::move(closed));
}

/// y marks UHD plateaus at odd height: C_{2k+1} = xy - x, C_{2k} = 0, against
///   (1-x)(A + sqrt(A(A + 4x^2))) / (2x^2 A),  A = (1-x)(x^2(xy - x) + x - 1).
inline CrossChecked oddheight_gf_checked(std::size_t order) {
  XSeries value = contfrac_gf(CorrectionSchedule({}, {detail::y_correction(order), XSeries(order)}), order);

  const std::size_t m = order + 2;
  const XSeries one_minus_x = polynomial(m, {{1, 0}, {-1, 1}});
  const XSeries a = one_minus_x * (XSeries::x(m, 2) * detail::y_correction(m) + polynomial(m, {{1, 1}, {-1, 0}}));
  const XSeries radicand = a * (a + polynomial(m, {{4, 2}}));
  XSeries closed(0);
  try {
    // A has constant term -1, so it is invertible; the plus root is forced
    // because the -1 of A must cancel.
    const XSeries top = (one_minus_x * (a + series_sqrt(radicand)) * series_recip(a)).truncated(m);
    if (!top[0].is_zero() || !top[1].is_zero())
      throw BranchAssertionFailed("oddheight_gf: numerator does not vanish to second order");
    closed = exact_divide(shift_down(top, 2), BigInt(2));
  } catch (const NonIntegralResult& e) {
    throw BranchAssertionFailed(std::string("oddheight_gf: ") + e.what());
  }
  return detail::cross_check("oddheight_gf", std::move(value), std::move(closed));
}

/// y marks UHD, z marks UHHD, and U H^j D with j >= 3 is forbidden:
/// C_k = xy - x + x^2 z - x^2 - x^3/(1-x), against
///   (-(A(2) + 1) + sqrt((A(4) + 1)(A(0) + 1))) / (2x^2 (x - 1)),
///   A(k) = x(x-1)(x^3 z + x^2 y + x + k).
/// Peaks are not corrected by this schedule and remain allowed.
inline CrossChecked uhd_uhhd_gf_checked(std::size_t order) {
  const XSeries long_runs = shift_up(series_recip(polynomial(order, {{1, 0}, {-1, 1}})), 3).truncated(order);
  const XSeries c = detail::y_correction(order) + detail::z_correction(order) - long_runs;
  XSeries value = contfrac_gf(CorrectionSchedule::constant(c), order);

  const std::size_t m = order + 2;
  // A(k) + 1 = (x - 1)(x^4 z + x^3 y + x^2 + kx) + 1
  auto shifted_a = [&](long long k) {
    return polynomial(m, {{1, 1}, {-1, 0}}) * polynomial(m, {{1, 4, 0, 1}, {1, 3, 1}, {1, 2}, {k, 1}}) +
           XSeries::constant(m, 1);
  };
  XSeries closed(0);
  try {
    const XSeries top = -shifted_a(2) + series_sqrt(shifted_a(4) * shifted_a(0));
    const XSeries over_x_minus_1 = (top * series_recip(polynomial(m, {{1, 1}, {-1, 0}}))).truncated(m);
    if (!over_x_minus_1[0].is_zero() || !over_x_minus_1[1].is_zero())
      throw BranchAssertionFailed("uhd_uhhd_gf: numerator does not vanish to second order");
    closed = exact_divide(shift_down(over_x_minus_1, 2), BigInt(2));
  } catch (const NonIntegralResult& e) {
    throw BranchAssertionFailed(std::string("uhd_uhhd_gf: ") + e.what());
  }
  return detail::cross_check("uhd_uhhd_gf", std::move(value), std::move(closed));
}

/// y marks UHD at height >= 2, z marks UHHD at heights divisible by 3:
/// C_1 = 0, then Y, Y+Z, Y repeating from height 2, with Y = xy - x and
/// Z = x^2 z - x^2. Checked against G = 1/(1 - x - x^2 p),
/// p = -(A + sqrt(B)) / (2x^2 D).
inline CrossChecked mixed_height_gf_checked(std::size_t order) {
  const XSeries y_c = detail::y_correction(order);
  const XSeries z_c = detail::z_correction(order);
  XSeries value = contfrac_gf(CorrectionSchedule({XSeries(order)}, {y_c, y_c + z_c, y_c}), order);

  const std::size_t m = order + 2;
  const XSeries x = XSeries::x(m);
  const XSeries x2 = XSeries::x(m, 2);
  const XSeries x3 = XSeries::x(m, 3);
  const XSeries one = XSeries::constant(m, 1);
  const XSeries y = XSeries::monomial(m, 1, 0, 1);
  const XSeries z = XSeries::monomial(m, 1, 0, 0, 1);
  const XSeries big_y = detail::y_correction(m);
  const XSeries big_z = detail::z_correction(m);
  auto lit = [&](std::initializer_list<XTerm> t) { return polynomial(m, t); };

  const XSeries x2y = x2 * big_y;
  const XSeries x2z = x2 * big_z;
  const XSeries a = x2y * (x2y * (x2y + lit({{3, 1}, {-3, 0}})) + x2z * (x2y + lit({{2, 1}, {-2, 0}})) +
                           lit({{2, 2}, {-6, 1}, {3, 0}})) +
                    x2z * lit({{2, 2}, {-2, 1}, {1, 0}}) + lit({{-2, 2}, {3, 1}, {-1, 0}});
  // The x^4 term uses the raw markers y, z rather than Y, Z.
  const XSeries d = x2y * (x2z + x2y + lit({{1, 1}, {-2, 0}})) + (y - z) * XSeries::x(m, 4) + x3 * big_z +
                    lit({{-2, 1}, {1, 0}});
  const XSeries b = (x2y - one) * (x2y + lit({{2, 1}, {-1, 0}})) * (d - x3 * big_y - x3 * big_z - lit({{2, 2}}) + x) *
                    (d + x3 * big_z + x3 * big_y - x);
  XSeries closed(0);
  try {
    const XSeries top = (-(a + series_sqrt(b)) * series_recip(d)).truncated(m);
    if (!top[0].is_zero() || !top[1].is_zero())
      throw BranchAssertionFailed("mixed_height_gf: numerator does not vanish to second order");
    const XSeries p = exact_divide(shift_down(top, 2), BigInt(2));
    closed = series_recip(polynomial(order, {{1, 0}, {-1, 1}}) - XSeries::x(order, 2) * p);
  } catch (const NonIntegralResult& e) {
    throw BranchAssertionFailed(std::string("mixed_height_gf: ") + e.what());
  }
  return detail::cross_check("mixed_height_gf", std::move(value), std::move(closed));
}

inline XSeries peakfree_gf(std::size_t order) { return peakfree_gf_checked(order).checked(); }
inline XSeries oddheight_gf(std::size_t order) { return oddheight_gf_checked(order).checked(); }
inline XSeries uhd_uhhd_gf(std::size_t order) { return uhd_uhhd_gf_checked(order).checked(); }
inline XSeries mixed_height_gf(std::size_t order) { return mixed_height_gf_checked(order).checked(); }

}  // namespace motzkin
