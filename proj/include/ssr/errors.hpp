#pragma once

#include <stdexcept>
#include <string>

namespace ssr {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parsing and input validation.
class ParseError : public Error {
 public:
  using Error::Error;
};
class InvalidParams : public Error {
 public:
  using Error::Error;
};
class LengthMismatch : public Error {
 public:
  using Error::Error;
};
class StartsWithZero : public Error {
 public:
  using Error::Error;
};
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};
class OddLength : public Error {
 public:
  using Error::Error;
};
class NotADivisor : public Error {
 public:
  using Error::Error;
};

// Run-vector class membership (M and its subsets).
class NotInM : public Error {
 public:
  using Error::Error;
};
class NotInMStar : public Error {
 public:
  using Error::Error;
};
class NotInMpPlus : public Error {
 public:
  using Error::Error;
};

// Arithmetic.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

// Period driver.
class WeightOutOfBand : public Error {
 public:
  using Error::Error;
};
class ConstantWeight : public Error {
 public:
  using Error::Error;
};
class NotNormalized : public Error {
 public:
  using Error::Error;
};

// Simulation limits.
class IterationBudgetExceeded : public Error {
 public:
  using Error::Error;
};
class StateSpaceTooLarge : public Error {
 public:
  using Error::Error;
};

/// A proved invariant failed at runtime; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require(bool condition, const char* what) {
  if (!condition) throw InternalError(std::string("internal invariant violated: ") + what);
}

}  // namespace detail

}  // namespace ssr
