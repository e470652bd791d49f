#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "motzkin/errors.hpp"
#include "motzkin/series/bigint.hpp"
#include "motzkin/series/series.hpp"

namespace motzkin {

/// c[n][p]: Motzkin paths of length n with exactly p plateaus of length r,
/// for 0 <= n <= nmax and 0 <= p <= n / (r+2).
class PlateauTable {
 public:
  PlateauTable(unsigned r, std::size_t nmax) : r_(r), rows_(nmax + 1) {
    for (std::size_t n = 0; n <= nmax; ++n) rows_[n].resize(max_p(n) + 1);
  }

  unsigned r() const { return r_; }
  std::size_t nmax() const { return rows_.size() - 1; }
  std::size_t max_p(std::size_t n) const { return n / (r_ + 2); }

  /// Zero outside the stored triangle, including negative indices.
  BigInt at(long n, long p) const {
    if (n < 0 || p < 0 || static_cast<std::size_t>(n) > nmax() || static_cast<std::size_t>(p) > max_p(n)) return 0;
    return rows_[n][p];
  }

  const std::vector<BigInt>& row(std::size_t n) const { return rows_.at(n); }

  void set(std::size_t n, std::size_t p, BigInt v) { rows_.at(n).at(p) = std::move(v); }

  BigInt row_sum(std::size_t n) const {
    BigInt s = 0;
    for (const auto& v : rows_.at(n)) s += v;
    return s;
  }

  friend bool operator==(const PlateauTable&, const PlateauTable&) = default;

 private:
  unsigned r_;
  std::vector<std::vector<BigInt>> rows_;
};

/// Reads a table out of a bivariate generating function in x and y. Throws
/// std::domain_error if some coefficient lies outside the triangle.
inline PlateauTable table_from_series(unsigned r, const XSeries& g, std::size_t nmax) {
  if (nmax > g.order()) throw std::invalid_argument("table_from_series: nmax exceeds series order");
  PlateauTable t(r, nmax);
  for (std::size_t n = 0; n <= nmax; ++n) {
    for (const auto& term : g[n].terms()) {
      if (term.exp.z != 0 || term.exp.y > t.max_p(n))
        throw std::domain_error("table_from_series: x^" + std::to_string(n) + " has a term outside the triangle");
      t.set(n, term.exp.y, term.coeff);
    }
  }
  return t;
}

/// Paths with no plateau of length r:
///   c_n = c_{n-1} + sum_{k=0}^{n-2} c_k c_{n-2-k} - c_{n-r-2},  c_0 = c_1 = 1.
inline std::vector<BigInt> base_column(unsigned r, std::size_t nmax) {
  if (r == 0) throw std::invalid_argument("base_column: r must be positive");
  std::vector<BigInt> c(nmax + 1);
  auto at = [&](long i) -> BigInt { return i < 0 ? BigInt(0) : c[static_cast<std::size_t>(i)]; };
  for (std::size_t n = 0; n <= nmax; ++n) {
    if (n <= 1) {
      c[n] = 1;
      continue;
    }
    BigInt v = c[n - 1];
    for (std::size_t k = 0; k + 2 <= n; ++k) v += c[k] * c[n - 2 - k];
    v -= at(static_cast<long>(n) - static_cast<long>(r) - 2);
    c[n] = v;
  }
  return c;
}

/// The r = 1 column in its split form:
///   c_n = c_{n-1} + c_{n-2} + sum_{k=2}^{n-2} c_k c_{n-k-2}.
inline std::vector<BigInt> base_column_split_form(std::size_t nmax) {
  std::vector<BigInt> c(nmax + 1);
  for (std::size_t n = 0; n <= nmax; ++n) {
    if (n <= 1) {
      c[n] = 1;
      continue;
    }
    BigInt v = c[n - 1] + c[n - 2];
    for (std::size_t k = 2; k + 2 <= n; ++k) v += c[k] * c[n - k - 2];
    c[n] = v;
  }
  return c;
}

/// Sewing-in recursion
///   c_n^p = ((n - (r+1)p) / p) c_{n-(r+2)}^{p-1} + (r+1) c_{n-(r+2)}^p,
/// seeded by base_column. Throws IntegralityViolation if a division by p is
/// inexact.
inline PlateauTable table_from_recursion(unsigned r, std::size_t nmax) {
  if (r == 0) throw std::invalid_argument("table_from_recursion: r must be positive");
  PlateauTable t(r, nmax);
  const auto base = base_column(r, nmax);
  const long step = r + 2;
  for (std::size_t n = 0; n <= nmax; ++n) {
    t.set(n, 0, base[n]);
    for (std::size_t p = 1; p <= t.max_p(n); ++p) {
      const long prev = static_cast<long>(n) - step;
      BigInt sewn = BigInt(static_cast<long>(n) - static_cast<long>((r + 1) * p)) * t.at(prev, p - 1);
      BigInt quotient, rem;
      boost::multiprecision::divide_qr(sewn, BigInt(p), quotient, rem);
      if (!rem.is_zero())
        throw IntegralityViolation("c_" + std::to_string(n) + "^" + std::to_string(p) + " (r=" + std::to_string(r) +
                                   "): " + sewn.str() + " not divisible by " + std::to_string(p));
      t.set(n, p, quotient + BigInt(r + 1) * t.at(prev, p));
    }
  }
  return t;
}

}  // namespace motzkin
