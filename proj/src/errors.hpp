#pragma once

#include <stdexcept>
#include <string>

namespace limag {

// Base class for all library failures.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic would exceed the configured magnitude bound.
struct OverflowError : Error {
  using Error::Error;
};

// Precondition violation on caller-supplied values.
struct InvalidArgumentError : Error {
  using Error::Error;
};

// Malformed input text or JSON document.
struct ParseError : Error {
  using Error::Error;
};

// An enumeration or search cap was exceeded before an answer was found.
struct CapExceededError : Error {
  using Error::Error;
};

}  // namespace limag
