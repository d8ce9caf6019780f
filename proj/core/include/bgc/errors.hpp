#pragma once

#include <stdexcept>
#include <string>

namespace bgc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed scalar literal or input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operand shapes or ambient dimensions disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A linear system that must be invertible is not (e.g. repeated Vandermonde nodes).
class SingularError : public Error {
 public:
  using Error::Error;
};

/// An input violates a mathematical precondition (J^2 != -I, non-positive metric, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The requested construction leaves the Gaussian rationals.
class NotRationalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bgc
