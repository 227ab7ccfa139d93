#pragma once

#include <stdexcept>
#include <string>

namespace shor {

/// Rejected argument or malformed input. CLI maps this to exit code 2.
class InvalidInputError : public std::invalid_argument {
 public:
  explicit InvalidInputError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Order queried for a residue that is not coprime to the modulus.
class NotAUnitError : public InvalidInputError {
 public:
  explicit NotAUnitError(const std::string& what) : InvalidInputError(what) {}
};

/// Enumeration request above the configured census limit. CLI exit code 3.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Input outside the domain of a printed-theorem evaluation.
class UnsupportedCaseError : public std::domain_error {
 public:
  explicit UnsupportedCaseError(const std::string& what)
      : std::domain_error(what) {}
};

}  // namespace shor
