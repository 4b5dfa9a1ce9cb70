#pragma once

#include <stdexcept>
#include <string>

namespace wavekit {

// Caller-side misuse of the library API (mismatched rings, bad arguments).
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// A pipeline precondition that input data failed to meet (d != 1, bad rank, ...).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Text input rejected by a parser. Carries a stable machine-readable code
// plus 1-based line/column of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string code, int line, int column, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)), line_(line), column_(column) {}

  const std::string& code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string code_;
  int line_;
  int column_;
};

}  // namespace wavekit
