#pragma once

#include <stdexcept>
#include <string>

namespace btsie {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad or inconsistent input: malformed files, offset violations,
/// unusable configuration. Maps to CLI exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace btsie
