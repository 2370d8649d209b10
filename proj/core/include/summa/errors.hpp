#pragma once

#include <stdexcept>
#include <string>

namespace summa {

// Bad mathematical input (non-positive exponent, length mismatch, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An enumeration guard was exceeded.  Callers may retry in sampling mode
// or with a larger guard where the operation supports it.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed serialized input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A stated precondition does not hold (e.g. summing a family whose
// Cauchy check failed, absolute-continuity violations).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace summa
