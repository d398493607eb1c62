#pragma once

#include <stdexcept>
#include <string>

namespace symxform {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input size exceeds what an exhaustive algorithm will attempt (n! or 2^n blow-up).
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// A strictly dominant weight was required but entries repeat.
class DegenerateWeightError : public Error {
 public:
  using Error::Error;
};

/// Dimensions of arguments disagree, or an index set does not match.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Operator order k outside 1..n.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A function does not have the (anti)symmetry it was declared to have.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

/// A coefficient key is not (strictly) dominant.
class DominanceError : public Error {
 public:
  using Error::Error;
};

/// Strict ordered grid requested with n > N.
class EmptyGridError : public Error {
 public:
  using Error::Error;
};

/// Numeric argument outside its supported range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// The integrand is not negligible on the boundary of the truncation box.
class TruncationWarning : public Error {
 public:
  using Error::Error;
};

/// A coefficient or sample file is malformed.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace symxform
