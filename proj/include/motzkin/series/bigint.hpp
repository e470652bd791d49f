#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace motzkin {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Operations every coefficient ring of a series must support beyond the
/// arithmetic operators.
template <class C>
struct coeff_traits;

template <>
struct coeff_traits<BigInt> {
  static bool is_zero(const BigInt& c) { return c.is_zero(); }

  // Sets `out = c / d` when the quotient is an integer.
  static bool try_divide(const BigInt& c, const BigInt& d, BigInt& out) {
    BigInt rem;
    boost::multiprecision::divide_qr(c, d, out, rem);
    return rem.is_zero();
  }

  static std::string to_string(const BigInt& c) { return c.str(); }
};

template <>
struct coeff_traits<BigRational> {
  static bool is_zero(const BigRational& c) { return c.is_zero(); }

  static bool try_divide(const BigRational& c, const BigInt& d, BigRational& out) {
    out = c / BigRational(d);
    return true;
  }

  static std::string to_string(const BigRational& c) {
    const BigInt& den = boost::multiprecision::denominator(c);
    if (den == 1) return boost::multiprecision::numerator(c).str();
    return boost::multiprecision::numerator(c).str() + "/" + den.str();
  }
};

inline bool is_integral(const BigRational& c) { return boost::multiprecision::denominator(c) == 1; }

}  // namespace motzkin
