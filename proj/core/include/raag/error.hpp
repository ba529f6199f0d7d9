#pragma once

#include <stdexcept>
#include <string>

namespace raag {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: graph files, word syntax, unknown generators.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands that do not live in the same ring (graph, domain or order mismatch),
/// or an operation the coefficient domain cannot perform.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured state budget.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace raag
