#pragma once

#include <stdexcept>
#include <string>

namespace motzkin {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// series-core

/// recip/sqrt called on a series whose constant term is not the required unit.
class NonUnitConstantTerm : public Error {
 public:
  using Error::Error;
};

/// A rational coefficient failed to clear to an integer.
class NonIntegralResult : public Error {
 public:
  using Error::Error;
};

/// Diagonal substitution produced a negative power of x.
class NegativeExponent : public Error {
 public:
  using Error::Error;
};

// path-oracle

class CapExceeded : public Error {
 public:
  using Error::Error;
};

// gf-engines

/// A division by p in a plateau recursion did not come out exact.
class IntegralityViolation : public Error {
 public:
  using Error::Error;
};

/// The (numerator - sqrt(radicand)) / 2x^2 construction did not yield an
/// integer power series: the wrong root was taken or a formula is mistyped.
class BranchAssertionFailed : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// A radical closed form disagrees with its continued-fraction definition.
class ClosedFormMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace motzkin
