#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gridext {

/// Two points (or a point and a shape) that do not belong to the same grid.
class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A sequence of points that is not a linear extension of its grid.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation refused because it would exceed a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what_exceeded, std::size_t cap)
      : std::runtime_error(what_exceeded + " exceeds cap of " + std::to_string(cap)),
        cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace gridext
