#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "motzkin/errors.hpp"
#include "motzkin/series/bigint.hpp"
#include "motzkin/series/marker_poly.hpp"

namespace motzkin {

/// Truncated power series in x whose coefficients are marker polynomials.
///
/// Coefficients of x^0 .. x^order are significant; everything above is
/// unknown, not zero. Binary operations truncate to the smaller order.
template <class C>
class BasicSeries {
 public:
  using coeff_type = C;
  using poly_type = BasicMarkerPoly<C>;

  /// The zero series known to `order`.
  explicit BasicSeries(std::size_t order) : order_(order), coeffs_(order + 1) {}

  /// Takes `coeffs` as x^0, x^1, ...; shorter input is zero-padded, longer
  /// input is truncated.
  BasicSeries(std::size_t order, std::vector<poly_type> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
  }

  static BasicSeries constant(std::size_t order, poly_type c) {
    BasicSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
  }

  /// coeff * x^deg_x * y^deg_y * z^deg_z, vanishing if deg_x > order.
  static BasicSeries monomial(std::size_t order, C coeff, std::size_t deg_x, std::uint32_t deg_y = 0,
                              std::uint32_t deg_z = 0) {
    BasicSeries s(order);
    if (deg_x <= order) s.coeffs_[deg_x] = poly_type::monomial(std::move(coeff), deg_y, deg_z);
    return s;
  }

  static BasicSeries x(std::size_t order, std::size_t power = 1) { return monomial(order, C(1), power); }

  std::size_t order() const { return order_; }
  const std::vector<poly_type>& coeffs() const { return coeffs_; }
  const poly_type& operator[](std::size_t n) const { return coeffs_.at(n); }

  C coeff(std::size_t n, std::uint32_t deg_y = 0, std::uint32_t deg_z = 0) const {
    return coeffs_.at(n).coeff(deg_y, deg_z);
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const poly_type& p) { return p.is_zero(); });
  }

  BasicSeries truncated(std::size_t order) const {
    return BasicSeries(std::min(order, order_), {coeffs_.begin(), coeffs_.begin() + std::min(order, order_) + 1});
  }

  BasicSeries operator-() const {
    BasicSeries r(order_);
    for (std::size_t n = 0; n <= order_; ++n) r.coeffs_[n] = -coeffs_[n];
    return r;
  }

  friend BasicSeries operator+(const BasicSeries& a, const BasicSeries& b) {
    BasicSeries r(std::min(a.order_, b.order_));
    for (std::size_t n = 0; n <= r.order_; ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    return r;
  }

  friend BasicSeries operator-(const BasicSeries& a, const BasicSeries& b) {
    BasicSeries r(std::min(a.order_, b.order_));
    for (std::size_t n = 0; n <= r.order_; ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
    return r;
  }

  // Cauchy product.
  friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) {
    BasicSeries r(std::min(a.order_, b.order_));
    const std::size_t n_max = r.order_;
    for (std::size_t i = 0; i <= n_max; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= n_max; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }

  friend BasicSeries operator*(const poly_type& c, const BasicSeries& a) {
    BasicSeries r(a.order_);
    for (std::size_t n = 0; n <= a.order_; ++n) r.coeffs_[n] = c * a.coeffs_[n];
    return r;
  }

  friend BasicSeries operator*(const BasicSeries& a, const poly_type& c) { return c * a; }

  BasicSeries& operator+=(const BasicSeries& b) { return *this = *this + b; }
  BasicSeries& operator-=(const BasicSeries& b) { return *this = *this - b; }
  BasicSeries& operator*=(const BasicSeries& b) { return *this = *this * b; }

  friend bool operator==(const BasicSeries&, const BasicSeries&) = default;

 private:
  std::size_t order_;
  std::vector<poly_type> coeffs_;
};

using XSeries = BasicSeries<BigInt>;
using RationalSeries = BasicSeries<BigRational>;

/// One term coeff * x^x * y^y * z^z of a small literal polynomial.
struct XTerm {
  long long coeff;
  std::size_t x;
  std::uint32_t y = 0;
  std::uint32_t z = 0;
};

/// A polynomial in x, y, z as a series known to `order`; terms above the
/// order are dropped.
template <class C = BigInt>
BasicSeries<C> polynomial(std::size_t order, std::initializer_list<XTerm> terms) {
  BasicSeries<C> s(order);
  for (const auto& t : terms) s += BasicSeries<C>::monomial(order, C(t.coeff), t.x, t.y, t.z);
  return s;
}

template <class C>
BasicSeries<C> series_add(const BasicSeries<C>& a, const BasicSeries<C>& b) {
  return a + b;
}

template <class C>
BasicSeries<C> series_mul(const BasicSeries<C>& a, const BasicSeries<C>& b) {
  return a * b;
}

template <class C>
BasicSeries<C> pow(const BasicSeries<C>& a, unsigned k) {
  BasicSeries<C> r = BasicSeries<C>::constant(a.order(), C(1));
  BasicSeries<C> base = a;
  for (; k > 0; k >>= 1) {
    if (k & 1U) r = r * base;
    if (k > 1) base = base * base;
  }
  return r;
}

namespace detail {

template <class C>
C unit_constant_term(const BasicSeries<C>& a, bool allow_minus_one, const char* op) {
  auto c = a[0].as_constant();
  if (!c || !(*c == C(1) || (allow_minus_one && *c == C(-1))))
    throw NonUnitConstantTerm(std::string(op) + ": constant term must be " + (allow_minus_one ? "+1 or -1" : "1"));
  return *c;
}

}  // namespace detail

/// Multiplicative inverse; the constant term must be the bare integer 1 or -1.
template <class C>
BasicSeries<C> series_recip(const BasicSeries<C>& a) {
  const C unit = detail::unit_constant_term(a, true, "series_recip");
  const std::size_t order = a.order();
  std::vector<BasicMarkerPoly<C>> b(order + 1);
  b[0] = BasicMarkerPoly<C>(unit);
  // a0 * b_n = -sum_{k>=1} a_k b_{n-k}, and 1/a0 = a0.
  for (std::size_t n = 1; n <= order; ++n) {
    BasicMarkerPoly<C> acc;
    for (std::size_t k = 1; k <= n; ++k)
      if (!a[k].is_zero() && !b[n - k].is_zero()) acc += a[k] * b[n - k];
    b[n] = acc.scaled(C(-unit));
  }
  return BasicSeries<C>(order, std::move(b));
}

/// Square root with constant term 1, by solving b*b = a one coefficient at a
/// time. Over the integers, throws NonIntegralResult when a halving is inexact.
template <class C>
BasicSeries<C> series_sqrt(const BasicSeries<C>& a) {
  detail::unit_constant_term(a, false, "series_sqrt");
  const std::size_t order = a.order();
  std::vector<BasicMarkerPoly<C>> b(order + 1);
  b[0] = BasicMarkerPoly<C>(C(1));
  // a_n = 2 b_n + 2 sum_{0<k<n-k} b_k b_{n-k} + [n even] b_{n/2}^2
  for (std::size_t n = 1; n <= order; ++n) {
    BasicMarkerPoly<C> twice = a[n];
    if (n % 2 == 0 && !b[n / 2].is_zero()) twice -= b[n / 2] * b[n / 2];
    auto half = twice.try_divide(BigInt(2));
    if (!half) throw NonIntegralResult("series_sqrt: coefficient of x^" + std::to_string(n) + " is not integral");
    BasicMarkerPoly<C> cross;
    for (std::size_t k = 1; 2 * k < n; ++k)
      if (!b[k].is_zero() && !b[n - k].is_zero()) cross += b[k] * b[n - k];
    b[n] = *half - cross;
  }
  return BasicSeries<C>(order, std::move(b));
}

/// d/dx; the result is known to one order less.
template <class C>
BasicSeries<C> series_dx(const BasicSeries<C>& a) {
  if (a.order() == 0) throw std::invalid_argument("series_dx: order-0 series has no known derivative");
  std::vector<BasicMarkerPoly<C>> d(a.order());
  for (std::size_t n = 1; n <= a.order(); ++n) d[n - 1] = a[n].scaled(C(static_cast<long long>(n)));
  return BasicSeries<C>(a.order() - 1, std::move(d));
}

/// Multiplies by x^k. The product is known to order + k.
template <class C>
BasicSeries<C> shift_up(const BasicSeries<C>& a, std::size_t k) {
  std::vector<BasicMarkerPoly<C>> c(k);
  c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
  return BasicSeries<C>(a.order() + k, std::move(c));
}

/// Divides by x^k. Throws std::domain_error unless the first k coefficients
/// vanish.
template <class C>
BasicSeries<C> shift_down(const BasicSeries<C>& a, std::size_t k) {
  if (k > a.order()) throw std::domain_error("shift_down: shift exceeds order");
  for (std::size_t n = 0; n < k; ++n)
    if (!a[n].is_zero()) throw std::domain_error("shift_down: coefficient of x^" + std::to_string(n) + " is nonzero");
  return BasicSeries<C>(a.order() - k, {a.coeffs().begin() + k, a.coeffs().end()});
}

/// Divides every coefficient by `d`, throwing NonIntegralResult if inexact.
template <class C>
BasicSeries<C> exact_divide(const BasicSeries<C>& a, const BigInt& d) {
  std::vector<BasicMarkerPoly<C>> c;
  c.reserve(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) {
    auto q = a[n].try_divide(d);
    if (!q)
      throw NonIntegralResult("coefficient of x^" + std::to_string(n) + " is not divisible by " + d.str());
    c.push_back(std::move(*q));
  }
  return BasicSeries<C>(a.order(), std::move(c));
}

template <class C>
BasicSeries<C> scale(const BasicSeries<C>& a, const C& factor) {
  return BasicMarkerPoly<C>(factor) * a;
}

template <class C>
RationalSeries to_rational(const BasicSeries<C>& a) {
  std::vector<RationalMarkerPoly> c;
  c.reserve(a.order() + 1);
  for (const auto& p : a.coeffs()) c.push_back(p.template map_coeffs<BigRational>([](const C& v) { return BigRational(v); }));
  return RationalSeries(a.order(), std::move(c));
}

/// Asserts every denominator is 1 and drops back to integer coefficients.
inline XSeries to_integer(const RationalSeries& a) {
  std::vector<MarkerPoly> c;
  c.reserve(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) {
    for (const auto& t : a[n].terms())
      if (!is_integral(t.coeff))
        throw NonIntegralResult("coefficient of x^" + std::to_string(n) + " has denominator " +
                                boost::multiprecision::denominator(t.coeff).str());
    c.push_back(a[n].map_coeffs<BigInt>([](const BigRational& v) { return boost::multiprecision::numerator(v); }));
  }
  return XSeries(a.order(), std::move(c));
}

/// Antiderivative in y from 0: x^n y^p z^q -> x^n y^(p+1) z^q / (p+1).
template <class C>
RationalSeries integrate_y(const BasicSeries<C>& a) {
  std::vector<RationalMarkerPoly> c;
  c.reserve(a.order() + 1);
  for (const auto& p : a.coeffs()) {
    std::vector<RationalMarkerPoly::Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms())
      terms.push_back({Monomial{t.exp.y + 1, t.exp.z}, BigRational(t.coeff) / BigRational(t.exp.y + 1)});
    c.push_back(RationalMarkerPoly::from_terms(std::move(terms)));
  }
  return RationalSeries(a.order(), std::move(c));
}

/// Integer-valued integrate_y: throws NonIntegralResult if a denominator survives.
inline XSeries integrate_y_exact(const XSeries& a) { return to_integer(integrate_y(a)); }

template <class C>
BasicSeries<C> subst_y_const(const BasicSeries<C>& a, const C& v) {
  std::vector<BasicMarkerPoly<C>> c;
  c.reserve(a.order() + 1);
  for (const auto& p : a.coeffs()) c.push_back(p.eval_y(v));
  return BasicSeries<C>(a.order(), std::move(c));
}

/// Substitutes y -> z / x^(r+2): x^n y^p z^q -> x^(n-(r+2)p) z^(p+q).
///
/// The output keeps the input's x-order, but its coefficient of x^j is only
/// complete for z-powers p with j + (r+2)p <= order.
template <class C>
BasicSeries<C> subst_diagonal(const BasicSeries<C>& a, unsigned r) {
  if (r == 0) throw std::invalid_argument("subst_diagonal: r must be positive");
  const std::size_t step = r + 2;
  std::vector<std::vector<typename BasicMarkerPoly<C>::Term>> out(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) {
    for (const auto& t : a[n].terms()) {
      const std::size_t drop = step * t.exp.y;
      if (drop > n)
        throw NegativeExponent("subst_diagonal: x^" + std::to_string(n) + "*y^" + std::to_string(t.exp.y) +
                               " maps below x^0 for r=" + std::to_string(r));
      out[n - drop].push_back({Monomial{0, t.exp.y + t.exp.z}, t.coeff});
    }
  }
  std::vector<BasicMarkerPoly<C>> c;
  c.reserve(out.size());
  for (auto& terms : out) c.push_back(BasicMarkerPoly<C>::from_terms(std::move(terms)));
  return BasicSeries<C>(a.order(), std::move(c));
}

/// Termwise d/dz.
template <class C>
BasicSeries<C> series_dz(const BasicSeries<C>& a) {
  std::vector<BasicMarkerPoly<C>> c;
  c.reserve(a.order() + 1);
  for (const auto& p : a.coeffs()) c.push_back(p.diff_z());
  return BasicSeries<C>(a.order(), std::move(c));
}

/// Keeps only the terms x^n y^p z^q for which keep(n, Monomial{p, q}) holds.
template <class C, class Pred>
BasicSeries<C> filter_terms(const BasicSeries<C>& a, Pred keep) {
  std::vector<BasicMarkerPoly<C>> c;
  c.reserve(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n)
    c.push_back(a[n].filtered([&](const Monomial& m) { return keep(n, m); }));
  return BasicSeries<C>(a.order(), std::move(c));
}

/// Canonical rendering, ordered by x-degree then y-degree then z-degree,
/// e.g. `1 + x + 2*x^2 + x^3*y - 3*x^4*y^2*z`. The zero series renders as `0`.
template <class C>
std::string to_string(const BasicSeries<C>& a) {
  std::ostringstream os;
  bool first = true;
  auto var = [](std::ostringstream& o, bool& need_star, const char* name, std::size_t e) {
    if (e == 0) return;
    if (need_star) o << '*';
    o << name;
    if (e > 1) o << '^' << e;
    need_star = true;
  };
  for (std::size_t n = 0; n <= a.order(); ++n) {
    for (const auto& t : a[n].terms()) {
      std::string digits = coeff_traits<C>::to_string(t.coeff);
      bool negative = !digits.empty() && digits.front() == '-';
      if (negative) digits.erase(0, 1);
      if (first)
        os << (negative ? "-" : "");
      else
        os << (negative ? " - " : " + ");
      first = false;
      const bool bare = n == 0 && t.exp == Monomial{};
      bool need_star = false;
      if (bare || digits != "1") {
        os << digits;
        need_star = true;
      }
      var(os, need_star, "x", n);
      var(os, need_star, "y", t.exp.y);
      var(os, need_star, "z", t.exp.z);
    }
  }
  return first ? "0" : os.str();
}

}  // namespace motzkin
