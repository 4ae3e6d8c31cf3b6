#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fpg {

enum class ErrorKind {
  InvalidInput,
  Disconnected,
  CosetLimitExceeded,
  FreeRankMismatch,
  InputTooLarge,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so the
// command line front end can map it to a stable machine-readable record.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void invalid_input(const std::string& message) {
  throw Error(ErrorKind::InvalidInput, message);
}

}  // namespace fpg
