#pragma once

#include <stdexcept>
#include <string>

namespace bhm {

/// A caller broke a documented precondition (lengths, index ranges, sums).
class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A coefficient beyond the stored order of a truncated series was requested.
class TruncationExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The finite window of diagonal data is too short for an exact answer.
class InsufficientWindow : public std::out_of_range {
 public:
  InsufficientWindow(const std::string& what, int required, int available)
      : std::out_of_range(what + " (required " + std::to_string(required) +
                          ", available " + std::to_string(available) + ")"),
        required_(required),
        available_(available) {}

  int required() const noexcept { return required_; }
  int available() const noexcept { return available_; }

 private:
  int required_;
  int available_;
};

/// zI - B is singular at the requested point.
class EigenvalueHit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bhm
