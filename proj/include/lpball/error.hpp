#pragma once

#include <stdexcept>
#include <string>

namespace lpball {

/// Thrown when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown for inputs an operation deliberately does not handle (e.g. oracle
/// dimensions above 3).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace lpball
