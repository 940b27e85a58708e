#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliffgen {

/// Caller violated a documented precondition (bad dimension, even m, forbidden alpha, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numeric evaluation left the domain where the quantity is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation hit a pole (r = 0 under a negative power, division by a zero base).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Non-integer power of a base on the negative real axis.
class BranchCutError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace cliffgen
