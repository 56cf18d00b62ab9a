#pragma once

#include <stdexcept>
#include <string>

namespace aarp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input; `path` names the offending JSON field (e.g. `observations[1].chosen[0]`).
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Structurally valid input that violates a domain invariant.
class InvalidData : public Error {
 public:
  using Error::Error;
};

/// A transformation maps an alternative outside the (augmented) universe.
class OrbitEscape : public Error {
 public:
  using Error::Error;
};

/// An ordered-theory operation was requested on an unordered theory.
class OrderMissing : public Error {
 public:
  using Error::Error;
};

/// The theory cannot list its elements (parametric without a grid).
class NotEnumerable : public Error {
 public:
  using Error::Error;
};

class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// A search or enumeration would exceed its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition does not hold for the given input.
class PreconditionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace aarp
