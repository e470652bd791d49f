#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "motzkin/errors.hpp"
#include "motzkin/gf/closed_forms.hpp"
#include "motzkin/gf/table.hpp"
#include "motzkin/series/dense_poly.hpp"
#include "motzkin/series/series.hpp"

namespace motzkin {

/// h_k(z) = sum_m c_{3m+k}^m z^m (plateaus of length 1), held as
/// N_k(z) / (1 - z)^{k+1}.
struct RationalFn {
  std::size_t k = 0;
  DensePoly<BigInt> numerator;

  std::size_t denominator_exponent() const { return k + 1; }

  /// Taylor coefficients of z^0 .. z^m.
  std::vector<BigInt> expand(std::size_t m) const { return expand_over_one_minus_z(numerator, k + 1, m); }

  friend bool operator==(const RationalFn&, const RationalFn&) = default;
};

namespace detail {

inline std::size_t expected_numerator_degree(std::size_t k) { return 2 * (k / 3); }

// Numerators from the recurrence as a differential equation:
//   h_k = (c_k^0 + 2 int_0^z (1-t)^k h'_{k-3}(t) dt) / (1-z)^{k+1},
// carried out on truncated Taylor expansions of h_{k-3}. Seeds h_0, h_1, h_2
// are the known closed forms 1/(1-z), 1/(1-z)^2, 2/(1-z)^3.
inline std::vector<DensePoly<BigInt>> numerators_by_integral(std::size_t kmax, const std::vector<BigInt>& base) {
  std::vector<DensePoly<BigInt>> num{DensePoly<BigInt>{1}, DensePoly<BigInt>{1}, DensePoly<BigInt>{2}};
  num.resize(std::max<std::size_t>(kmax + 1, 3));
  for (std::size_t k = 3; k <= kmax; ++k) {
    // The integrand is a polynomial of degree deg N_{k-3} + 1; expand past it
    // so any non-polynomial remainder would show up.
    const long prev_degree = num[k - 3].degree();
    const std::size_t trunc = static_cast<std::size_t>(prev_degree) + 4;
    const auto prev = expand_over_one_minus_z(num[k - 3], k - 2, trunc + 1);
    const DensePoly<BigInt> prev_derivative = DensePoly<BigInt>(prev).derivative().truncated(trunc);
    const DensePoly<BigInt> integrand = (DensePoly<BigInt>::one_minus_z_pow(k) * prev_derivative).truncated(trunc);
    if (integrand.degree() > prev_degree + 1)
      throw DegreeMismatch("diagonal_gf(k=" + std::to_string(k) + "): (1-t)^k h'_{k-3} is not a polynomial");
    const auto numer = DensePoly<BigRational>{BigRational(base[k])} + antiderivative(integrand).scaled(BigRational(2));
    num[k] = to_integer<IntegralityViolation>(numer, "diagonal_gf(k=" + std::to_string(k) + ")");
  }
  num.resize(kmax + 1);
  return num;
}

// Numerators straight from the numerator difference-differential equation
//   N_k = c_k^0 + 2 int_0^z (1-t)((1-t) N'_{k-3} + (k-2) N_{k-3}) dt,
// with N_j = 0 for j < 0, so no seeds are needed.
inline std::vector<DensePoly<BigInt>> numerators_by_dde(std::size_t kmax, const std::vector<BigInt>& base) {
  std::vector<DensePoly<BigInt>> num(kmax + 1);
  const DensePoly<BigInt> one_minus_t{1, -1};
  for (std::size_t k = 0; k <= kmax; ++k) {
    DensePoly<BigInt> integrand;
    if (k >= 3) {
      const auto& prev = num[k - 3];
      integrand = one_minus_t * (one_minus_t * prev.derivative() + prev.scaled(BigInt(static_cast<long>(k) - 2)));
    }
    const auto numer = DensePoly<BigRational>{BigRational(base[k])} + antiderivative(integrand).scaled(BigRational(2));
    num[k] = to_integer<IntegralityViolation>(numer, "numerator DDE (k=" + std::to_string(k) + ")");
  }
  return num;
}

}  // namespace detail

/// h_0 .. h_kmax, built by both constructions, which are required to agree
/// and to have numerator degree 2 floor(k/3).
inline std::vector<RationalFn> diagonal_gfs(std::size_t kmax) {
  const auto base = base_column(1, kmax);
  const auto by_integral = detail::numerators_by_integral(kmax, base);
  const auto by_dde = detail::numerators_by_dde(kmax, base);
  std::vector<RationalFn> out;
  for (std::size_t k = 0; k <= kmax; ++k) {
    if (by_integral[k] != by_dde[k])
      throw Error("diagonal_gf(k=" + std::to_string(k) + "): integral form gives " +
                           by_integral[k].to_string() + ", numerator DDE gives " + by_dde[k].to_string());
    const auto deg = by_integral[k].degree();
    if (deg != static_cast<long>(detail::expected_numerator_degree(k)))
      throw DegreeMismatch("diagonal_gf(k=" + std::to_string(k) + "): numerator degree " + std::to_string(deg) +
                           ", expected " + std::to_string(detail::expected_numerator_degree(k)));
    out.push_back({k, by_integral[k]});
  }
  return out;
}

inline RationalFn diagonal_gf(std::size_t k) { return diagonal_gfs(k).back(); }

/// h'_k - z h'_k - (k+1) h_k - 2 h'_{k-3} on z^0 .. z^mmax. `previous` is
/// h_{k-3}, or null for k < 3.
inline std::vector<BigInt> difdif_residual(const RationalFn& h, const RationalFn* previous, std::size_t mmax) {
  const DensePoly<BigInt> hk(h.expand(mmax + 1));
  const DensePoly<BigInt> dk = hk.derivative();
  DensePoly<BigInt> residual = dk - DensePoly<BigInt>{0, 1} * dk - hk.scaled(BigInt(h.k + 1));
  if (previous) residual = residual - DensePoly<BigInt>(previous->expand(mmax + 1)).derivative().scaled(BigInt(2));
  residual = residual.truncated(mmax);
  std::vector<BigInt> out(mmax + 1);
  for (std::size_t i = 0; i <= mmax; ++i) out[i] = residual[i];
  return out;
}

inline std::vector<BigInt> difdif_residual(std::size_t k, std::size_t mmax) {
  const auto h = diagonal_gfs(k);
  return difdif_residual(h[k], k >= 3 ? &h[k - 3] : nullptr, mmax);
}

/// d/dx[x G] - (1 - z - (r+1) x^{r+2}) dG/dz with G = g(x, z / x^{r+2}).
///
/// g is expanded far enough that the returned residual is complete for
/// x^0 .. x^{order-1} and z-degree up to zmax.
inline XSeries theorem2_residual(unsigned r, std::size_t order, std::size_t zmax) {
  if (order == 0) throw std::invalid_argument("theorem2_residual: order must be positive");
  const std::size_t w = r + 2;
  const std::size_t xmax = order - 1;
  const XSeries big_g = subst_diagonal(explicit_gf(r, xmax + w * (zmax + 1)), r);
  const XSeries lhs = series_dx(shift_up(big_g, 1));
  const XSeries factor = polynomial(big_g.order(), {{1, 0}, {-1, 0, 0, 1}, {-static_cast<long long>(r + 1), w}});
  const XSeries rhs = factor * series_dz(big_g);
  return filter_terms((lhs - rhs).truncated(xmax), [&](std::size_t, const Monomial& m) { return m.z <= zmax; });
}

inline XSeries theorem2_residual(unsigned r, std::size_t order) { return theorem2_residual(r, order, order / (r + 2)); }

}  // namespace motzkin
