#pragma once

#include <stdexcept>
#include <string>

namespace affhecke {

/// Bad input to a mathematical operation (maps to CLI exit status 1).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed object failed one of its own consistency checks.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A request exceeds the configured computational bounds.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace affhecke
