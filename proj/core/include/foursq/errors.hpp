#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace foursq {

/// Base of every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input or intermediate value left the 64-bit working range (n <= 2^40).
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Exception-set query for a ternary form without a catalogued closed form.
class UnknownFormError : public Error {
 public:
  using Error::Error;
};

/// Constraint DSL text that does not match the grammar.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A monomial of total degree above 4 (or an exponent above 4).
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// A construction step relies on an unproven arithmetic input that failed for this n.
class HypothesisFailure : public Error {
 public:
  using Error::Error;
};

/// A checkpoint belongs to a different scan configuration.
class CheckpointMismatch : public Error {
 public:
  using Error::Error;
};

/// A checkpoint file cannot be parsed or is internally inconsistent.
class CorruptCheckpoint : public Error {
 public:
  using Error::Error;
};

/// b-file rows that are not contiguous and ascending.
class NonContiguousRows : public Error {
 public:
  using Error::Error;
};

}  // namespace foursq
