#pragma once

#include <stdexcept>
#include <string>

namespace marp {

// Error categories map 1:1 onto CLI exit codes (see tools/marp_cli.cpp):
// usage(2), validation(3), size_limit(4), io(5).
enum class ErrorKind {
  invalid_argument,    // bad value passed to a library call
  invalid_parameter,   // bad configuration (flag-level mistakes)
  validation,          // structurally well-formed input violating an invariant
  parse,               // malformed file content
  no_path,             // disconnected endpoints during route construction
  size_limit,          // problem exceeds an exact-solver budget
  insufficient_data,   // not enough points for the requested analysis
  empty_selection,     // metric undefined on an empty selection
  io,                  // filesystem failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace marp
