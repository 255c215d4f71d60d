#pragma once

#include <stdexcept>
#include <string>

namespace powmatch {

/// Base of every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested object exceeds the configured order cap or a search guard.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of the operation (e.g. D_n with n < 3).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed document describing something that is not a group.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a precondition, e.g. passed a matching that is invalid on the graph.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace powmatch
