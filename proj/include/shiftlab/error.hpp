#ifndef SHIFTLAB_ERROR_HPP
#define SHIFTLAB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shiftlab {

enum class ErrorCode {
  parse = 1,
  alphabet_mismatch = 2,
  invalid_argument = 3,
  limit_exceeded = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the text readers; line is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::parse,
              line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace shiftlab

#endif
