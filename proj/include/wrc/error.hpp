#pragma once

#include <stdexcept>
#include <string>

namespace wrc {

// Violation of an operation's precondition or domain contract. `name` is the
// stable machine-readable error name reported by the CLI (exit code 2).
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Malformed textual input (CLI usage error, exit code 1).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& detail)
      : std::runtime_error("parse error: " + detail) {}
};

}  // namespace wrc
