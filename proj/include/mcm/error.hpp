#pragma once

#include <stdexcept>
#include <string>

namespace mcm {

// Error categories; the CLI maps these onto process exit codes.
enum class ErrorKind {
  io,                // unreadable/unwritable files
  parse,             // malformed file contents
  invalid_argument,  // bad parameters or shape mismatches
  infeasible,        // training problem has no solution
  degenerate,        // solution exists but is numerically unusable
  numeric            // solver breakdown, iteration limits, all-failed sweeps
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace mcm
