// error.hpp — exception type shared by every specsat module.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specsat {

enum class ErrorKind {
  kInvalidArgument,
  kUnsupportedSize,
  kParseError,
  kOverflow,
  kDivergenceRisk,
  kUnsupportedRegime,
  kNumeric,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the graph6 reader; `offset` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::kParseError, what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) fail(kind, what);
}

}  // namespace specsat
