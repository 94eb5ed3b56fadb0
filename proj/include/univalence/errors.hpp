#pragma once

#include <stdexcept>
#include <string>

namespace univalence {

/// Input outside the mathematical domain of an operation (poles, |z| >= 1,
/// nonpositive denominators, overflow of a multiplier, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested variant is not implemented (e.g. a closed form that does not exist).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical procedure failed to reach its requested accuracy.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace univalence
