#pragma once

#include <stdexcept>
#include <string>

namespace affinv {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON or rational literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// Matrix whose last row is not (0,...,0,1).
class NotInP : public Error {
 public:
  using Error::Error;
};

class SearchExhausted : public Error {
 public:
  using Error::Error;
};

/// A symbolic construction was requested beyond the configured size bound.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// Test function does not vanish on the boundary of the integration box.
class BoundaryLeak : public Error {
 public:
  using Error::Error;
};

}  // namespace affinv
