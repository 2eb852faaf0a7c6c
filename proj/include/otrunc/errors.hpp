#pragma once

#include <stdexcept>
#include <string>

namespace otrunc {

/// Base of the library's error taxonomy. `category()` is a stable
/// machine-readable tag; the CLI prints it as part of its one-line
/// diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& message)
      : std::runtime_error(message), category_(std::move(category)) {}
  const std::string& category() const { return category_; }

 private:
  std::string category_;
};

/// Malformed or out-of-range input data (bad algebra spec, bad
/// characteristic digits, unparsable rationals).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error("validation", message) {}
};

/// The operation is mathematically undefined for these inputs
/// (g = k, non-integral grading, negative multiplicities, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error("domain", message) {}
};

/// A stated precondition of the operation does not hold.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error("precondition", message) {}
};

/// An enumeration would exceed a configured cap. The message names the cap
/// so failures are loud and actionable instead of hanging.
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& message)
      : Error("resource", message) {}
};

/// The inputs fall in a case the engine deliberately does not cover.
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& message)
      : Error("unsupported", message) {}
};

/// 64-bit bookkeeping would wrap around.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& message)
      : Error("overflow", message) {}
};

}  // namespace otrunc
