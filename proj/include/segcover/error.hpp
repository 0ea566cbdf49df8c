#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace segcover {

// Caller broke a documented precondition (capacity mismatch, bad id, bad
// parameter). The CLI maps this to exit code 3.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed instance file. Carries the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// An internal invariant that should be impossible to violate was violated,
// e.g. an infeasible partial cover handed to a merge.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace segcover
