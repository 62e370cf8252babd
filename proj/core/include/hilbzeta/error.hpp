#pragma once

#include <stdexcept>
#include <string>

namespace hilbzeta {

/// Malformed or mathematically invalid input (bad germ, bad flags).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed the configured size limits.
class ResourceGuard : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hilbzeta
