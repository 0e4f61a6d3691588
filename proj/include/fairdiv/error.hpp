#pragma once

#include <stdexcept>
#include <string>

namespace fairdiv {

// Error categories; the CLI maps them onto its exit-code protocol
// (parse/usage/dimension/domain -> 2, guard/budget -> 3, internal -> 4).
enum class ErrorKind {
  parse,      // malformed input file or value
  usage,      // bad command-line usage
  dimension,  // instance/allocation size mismatch
  domain,     // well-formed input outside the model (e.g. single-valued agent)
  guard,      // precondition that calls for a different algorithm
  budget,     // enumeration would exceed the configured budget
  internal,   // broken invariant; always a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace fairdiv
