#pragma once

#include <stdexcept>
#include <string>

namespace difftransfer {

// Invalid experiment configuration (bad field value, missing key).
// Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller broke an API precondition (cross-tape mix, dimension mismatch,
// empty dataset, ...).
class UsageError : public std::logic_error {
 public:
  explicit UsageError(const std::string& msg) : std::logic_error(msg) {}
};

// A computation produced a non-finite value. Maps to CLI exit code 3.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Mathematically undefined operation (division by zero, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace difftransfer
