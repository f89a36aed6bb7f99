#pragma once

#include <stdexcept>
#include <string>

namespace brstack {

/// Raised when an input violates an operation's precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when textual or JSON input cannot be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace brstack
