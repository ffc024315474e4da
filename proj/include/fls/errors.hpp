#pragma once

#include <stdexcept>

namespace fls {

/// Malformed token, document, or argument text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An incidence axiom an operation relies on does not hold.
class AxiomViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A brute-force routine was asked for more work than its configured bound.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fls
