#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcw {

/// Raised when an operation is called outside its documented domain
/// (non-Christoffel input to a Christoffel routine, length mismatch, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Slope requested for the empty word.
class UndefinedSlopeError : public ContractError {
 public:
  UndefinedSlopeError() : ContractError("slope is undefined for the empty word") {}
};

/// Textual word contained something other than '0' or '1'.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, char found)
      : std::invalid_argument("invalid symbol '" + std::string(1, found) + "' at position " +
                              std::to_string(position)),
        position_(position) {}

  /// One-based column of the offending character, as shown in the message.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An enumeration would exceed the configured size cap.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dcw
