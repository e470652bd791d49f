#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "motzkin/errors.hpp"
#include "motzkin/series/bigint.hpp"

namespace motzkin {

/// Exponents of the two statistic markers y and z.
struct Monomial {
  std::uint32_t y = 0;
  std::uint32_t z = 0;

  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial in the markers y, z. Terms are kept sorted by
/// (deg_y, deg_z) with no zero coefficients, so equality is structural.
template <class C>
class BasicMarkerPoly {
 public:
  using coeff_type = C;
  using traits = coeff_traits<C>;

  struct Term {
    Monomial exp;
    C coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  BasicMarkerPoly() = default;

  BasicMarkerPoly(C constant) {  // NOLINT(google-explicit-constructor)
    if (!traits::is_zero(constant)) terms_.push_back({Monomial{}, std::move(constant)});
  }

  BasicMarkerPoly(int constant) : BasicMarkerPoly(C(constant)) {}  // NOLINT

  static BasicMarkerPoly monomial(C coeff, std::uint32_t deg_y, std::uint32_t deg_z = 0) {
    BasicMarkerPoly p;
    if (!traits::is_zero(coeff)) p.terms_.push_back({Monomial{deg_y, deg_z}, std::move(coeff)});
    return p;
  }

  /// Builds from unsorted, possibly repeated terms.
  static BasicMarkerPoly from_terms(std::vector<Term> terms) {
    BasicMarkerPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coeff(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.exp < key; });
    if (it != terms_.end() && it->exp == m) return it->coeff;
    return C(0);
  }
  C coeff(std::uint32_t deg_y, std::uint32_t deg_z = 0) const { return coeff(Monomial{deg_y, deg_z}); }

  /// The value when this is a constant (no marker appears), else nullopt.
  std::optional<C> as_constant() const {
    if (terms_.empty()) return C(0);
    if (terms_.size() == 1 && terms_.front().exp == Monomial{}) return terms_.front().coeff;
    return std::nullopt;
  }

  std::uint32_t degree_y() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exp.y);
    return d;
  }

  std::uint32_t degree_z() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exp.z);
    return d;
  }

  BasicMarkerPoly operator-() const {
    BasicMarkerPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend BasicMarkerPoly operator+(const BasicMarkerPoly& a, const BasicMarkerPoly& b) {
    return merge(a, b, false);
  }

  friend BasicMarkerPoly operator-(const BasicMarkerPoly& a, const BasicMarkerPoly& b) {
    return merge(a, b, true);
  }

  BasicMarkerPoly& operator+=(const BasicMarkerPoly& b) { return *this = *this + b; }
  BasicMarkerPoly& operator-=(const BasicMarkerPoly& b) { return *this = *this - b; }

  friend BasicMarkerPoly operator*(const BasicMarkerPoly& a, const BasicMarkerPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (auto c = a.as_constant()) return b.scaled(*c);
    if (auto c = b.as_constant()) return a.scaled(*c);
    BasicMarkerPoly r;
    r.terms_.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_)
        r.terms_.push_back({Monomial{s.exp.y + t.exp.y, s.exp.z + t.exp.z}, s.coeff * t.coeff});
    r.normalize();
    return r;
  }

  BasicMarkerPoly scaled(const C& factor) const {
    if (traits::is_zero(factor)) return {};
    BasicMarkerPoly r = *this;
    for (auto& t : r.terms_) t.coeff *= factor;
    return r;
  }

  /// Divides every coefficient by `d`; nullopt if some quotient is not in C.
  std::optional<BasicMarkerPoly> try_divide(const BigInt& d) const {
    BasicMarkerPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      C q;
      if (!traits::try_divide(t.coeff, d, q)) return std::nullopt;
      r.terms_.push_back({t.exp, std::move(q)});
    }
    return r;
  }

  /// Evaluates y at `v`, leaving z symbolic.
  BasicMarkerPoly eval_y(const C& v) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    std::vector<C> powers{C(1)};
    for (const auto& t : terms_) {
      while (powers.size() <= t.exp.y) powers.push_back(powers.back() * v);
      out.push_back({Monomial{0, t.exp.z}, t.coeff * powers[t.exp.y]});
    }
    return from_terms(std::move(out));
  }

  BasicMarkerPoly diff_z() const {
    BasicMarkerPoly r;
    for (const auto& t : terms_)
      if (t.exp.z > 0) r.terms_.push_back({Monomial{t.exp.y, t.exp.z - 1}, t.coeff * C(t.exp.z)});
    return r;
  }

  /// Drops every term whose predicate on the exponent is false.
  template <class Pred>
  BasicMarkerPoly filtered(Pred keep) const {
    BasicMarkerPoly r;
    for (const auto& t : terms_)
      if (keep(t.exp)) r.terms_.push_back(t);
    return r;
  }

  template <class D, class F>
  BasicMarkerPoly<D> map_coeffs(F f) const {
    std::vector<typename BasicMarkerPoly<D>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.exp, f(t.coeff)});
    return BasicMarkerPoly<D>::from_terms(std::move(out));
  }

  friend bool operator==(const BasicMarkerPoly&, const BasicMarkerPoly&) = default;

 private:
  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      Term acc = std::move(terms_[i]);
      std::size_t j = i + 1;
      for (; j < terms_.size() && terms_[j].exp == acc.exp; ++j) acc.coeff += terms_[j].coeff;
      if (!traits::is_zero(acc.coeff)) terms_[w++] = std::move(acc);
      i = j;
    }
    terms_.resize(w);
  }

  static BasicMarkerPoly merge(const BasicMarkerPoly& a, const BasicMarkerPoly& b, bool negate_b) {
    BasicMarkerPoly r;
    r.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->exp < j->exp)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->exp < i->exp) {
        r.terms_.push_back({j->exp, negate_b ? C(-j->coeff) : j->coeff});
        ++j;
      } else {
        C c = negate_b ? C(i->coeff - j->coeff) : C(i->coeff + j->coeff);
        if (!traits::is_zero(c)) r.terms_.push_back({i->exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

using MarkerPoly = BasicMarkerPoly<BigInt>;
using RationalMarkerPoly = BasicMarkerPoly<BigRational>;

}  // namespace motzkin
