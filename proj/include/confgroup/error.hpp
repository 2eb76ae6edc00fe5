#pragma once

#include <stdexcept>
#include <string>

namespace confgroup {

/// Failure category; the CLI maps these onto exit codes.
enum class ErrorKind {
  input,   // malformed documents, invalid tables, bad arguments
  domain,  // classification outside a partition's domain, wrong engine
  budget,  // enumeration would exceed the configured budget
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_input(const std::string& message) {
  throw Error(ErrorKind::input, message);
}

[[noreturn]] inline void fail_domain(const std::string& message) {
  throw Error(ErrorKind::domain, message);
}

[[noreturn]] inline void fail_budget(const std::string& message) {
  throw Error(ErrorKind::budget, message);
}

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::input:
      return "input";
    case ErrorKind::domain:
      return "domain";
    case ErrorKind::budget:
      return "budget";
  }
  return "unknown";
}

}  // namespace confgroup
