#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine was asked to work beyond its configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A self-check of a construction failed.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hyperlab
