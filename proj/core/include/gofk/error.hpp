#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gofk {

enum class ErrorKind {
  kInvalidFraction,
  kOddFormRequired,
  kDegenerateContinuedFraction,
  kInvalidSlope,
  kParse,
  kOverflow,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this type. `what()` carries a
// human readable message that names the offending value.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Braid-word syntax errors also record the character offset of the bad token.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorKind::kParse, message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gofk
