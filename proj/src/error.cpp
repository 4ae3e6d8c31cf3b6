#include "fpg/error.hpp"

namespace fpg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
      return "InvalidInput";
    case ErrorKind::Disconnected:
      return "Disconnected";
    case ErrorKind::CosetLimitExceeded:
      return "CosetLimitExceeded";
    case ErrorKind::FreeRankMismatch:
      return "FreeRankMismatch";
    case ErrorKind::InputTooLarge:
      return "InputTooLarge";
    case ErrorKind::ParseError:
      return "ParseError";
  }
  return "Unknown";
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorKind::ParseError,
            std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace fpg
