#pragma once

#include <stdexcept>
#include <string>

namespace lpc {

/// Parameters outside the family's domain (a <= 1, a >= b where a < b is required, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mathematical domain violations: division by an interval containing 0, sqrt of a
/// negative-touching interval, bound formulas evaluated outside their range.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid configuration such as a working precision below the supported minimum.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Caller misuse: odd certificate depth, witness outside (1, a], malformed decimals.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A certified decision could not be reached (sign-indeterminate Sturm value,
/// degenerate Schur-Cohn step, winding step not certifiable).
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent decision routes disagree, or a proven structural fact failed.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A bisection bracket whose endpoints do not classify differently.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lpc
