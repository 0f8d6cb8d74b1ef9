#pragma once

#include <stdexcept>
#include <string>

namespace crossbessel {

enum class ErrorKind {
  kDomain,              // argument outside the supported domain
  kPrecisionExhausted,  // enclosure still too wide after the last refinement round
  kInconsistentForms,   // the two cross-product expressions gave disjoint enclosures
  kInvariantViolation,  // an exact structural check failed
  kDegenerateTriple,    // linear eliminant vanished identically
  kUnresolvedBracket,   // a sign change could not be certified
  kUnresolvedOrder,     // eigenvalue or gap enclosures still overlap
  kFormat,              // malformed serialized input
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace crossbessel
