#pragma once

#include <stdexcept>
#include <string>

namespace maxdrop {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A value violates an operation's precondition or a type invariant.
struct DomainError : Error {
  using Error::Error;
};

// Malformed textual input (CLI arguments, serialized values).
struct ParseError : Error {
  using Error::Error;
};

// An instance exceeds a configured resource cap.
struct ResourceLimitError : Error {
  using Error::Error;
};

}  // namespace maxdrop
