#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linkinv {

/// Malformed input text; `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Structurally invalid diagram or violated precondition on user input.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation exceeded its configured budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mathematically undefined request (e.g. Cochran's invariant with lk != 0),
/// or an internal consistency check that failed.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An invariant requested outside the range where it is defined.
class UndefinedInvariant : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace linkinv
