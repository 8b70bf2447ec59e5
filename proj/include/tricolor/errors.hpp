#pragma once

#include <stdexcept>
#include <string>

namespace tricolor {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input violates the graph model (disconnected, duplicate edge, self-loop,
/// vertex out of range) or a predicate's standing assumption.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Operation requires a different structural class.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Operation requires a non-singular matrix.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds the supported enumeration size.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace tricolor
