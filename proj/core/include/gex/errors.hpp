#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gex {

// Domain violation: bad arguments, mismatched field/rank, unsupported input.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation refused to run past its configured size budget.  Callers see
// the budget in the message; nothing is silently truncated.
struct budget_error : error {
  using error::error;
};

// Rejected text input; pos is a 0-based offset into the input string.
struct parse_error : error {
  parse_error(const std::string& what, std::size_t position)
      : error(what + " (at offset " + std::to_string(position) + ")"), pos(position) {}
  std::size_t pos;
};

}  // namespace gex
