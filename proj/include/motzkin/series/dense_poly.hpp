#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "motzkin/errors.hpp"
#include "motzkin/series/bigint.hpp"

namespace motzkin {

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
/// Also used for truncated series in one variable via truncated().
template <class C>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

  /// (1 - z)^e
  static DensePoly one_minus_z_pow(std::size_t e) {
    std::vector<C> c(e + 1);
    C b(1);
    for (std::size_t i = 0; i <= e; ++i) {
      c[i] = (i % 2 == 0) ? b : C(-b);
      b = b * C(static_cast<long long>(e - i)) / C(static_cast<long long>(i + 1));
    }
    return DensePoly(std::move(c));
  }

  const std::vector<C>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  C operator[](std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }

  DensePoly truncated(std::size_t max_degree) const {
    if (c_.size() <= max_degree + 1) return *this;
    return DensePoly(std::vector<C>(c_.begin(), c_.begin() + max_degree + 1));
  }

  DensePoly derivative() const {
    std::vector<C> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * C(static_cast<long long>(i)));
    return DensePoly(std::move(d));
  }

  DensePoly scaled(const C& f) const {
    std::vector<C> d = c_;
    for (auto& v : d) v *= f;
    return DensePoly(std::move(d));
  }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<C> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
    return DensePoly(std::move(r));
  }

  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
    std::vector<C> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
    return DensePoly(std::move(r));
  }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return DensePoly(std::move(r));
  }

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

  /// Renders in the variable `var`, lowest degree first, e.g. `2 + 6*z + z^2`.
  std::string to_string(const std::string& var = "z") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (coeff_traits<C>::is_zero(c_[i])) continue;
      std::string digits = coeff_traits<C>::to_string(c_[i]);
      const bool negative = digits.front() == '-';
      if (negative) digits.erase(0, 1);
      os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
      first = false;
      if (i == 0 || digits != "1") os << digits << (i > 0 ? "*" : "");
      if (i > 0) os << var;
      if (i > 1) os << '^' << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && coeff_traits<C>::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

/// Antiderivative vanishing at 0, over the rationals.
template <class C>
DensePoly<BigRational> antiderivative(const DensePoly<C>& p) {
  std::vector<BigRational> r(p.coeffs().size() + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    r[i + 1] = BigRational(p.coeffs()[i]) / BigRational(static_cast<long long>(i + 1));
  return DensePoly<BigRational>(std::move(r));
}

template <class C>
DensePoly<BigRational> to_rational(const DensePoly<C>& p) {
  std::vector<BigRational> r;
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  return DensePoly<BigRational>(std::move(r));
}

/// Drops to integer coefficients, or nullopt-like failure via exception type E.
template <class E = NonIntegralResult>
DensePoly<BigInt> to_integer(const DensePoly<BigRational>& p, const std::string& what) {
  std::vector<BigInt> r;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (!is_integral(p.coeffs()[i]))
      throw E(what + ": coefficient of degree " + std::to_string(i) + " is " +
              coeff_traits<BigRational>::to_string(p.coeffs()[i]));
    r.push_back(boost::multiprecision::numerator(p.coeffs()[i]));
  }
  return DensePoly<BigInt>(std::move(r));
}

/// Taylor coefficients 0..m of num / (1 - z)^e.
template <class C>
std::vector<C> expand_over_one_minus_z(const DensePoly<C>& num, std::size_t e, std::size_t m) {
  // 1/(1-z)^e = sum_j binom(j + e - 1, e - 1) z^j
  std::vector<C> inv(m + 1);
  if (e == 0) {
    inv[0] = C(1);
  } else {
    C b(1);
    for (std::size_t j = 0; j <= m; ++j) {
      inv[j] = b;
      b = b * C(static_cast<long long>(j + e)) / C(static_cast<long long>(j + 1));
    }
  }
  std::vector<C> out(m + 1);
  for (std::size_t i = 0; i < num.coeffs().size() && i <= m; ++i)
    for (std::size_t j = 0; i + j <= m; ++j) out[i + j] += num.coeffs()[i] * inv[j];
  return out;
}

}  // namespace motzkin
