#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace modc {

// Malformed input value: bad bit string, empty cycle, invalid encoding.
class argument_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in an expression or pattern; position is 1-based.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(message + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A construction exceeded the state budget or the component cap.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent algorithms for the same value disagreed, or a structural
// guarantee was violated. Always an implementation bug, never valid-input
// behavior.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A randomized generator exhausted its rejection budget.
class generator_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline std::atomic<std::uint64_t>& state_budget_storage() {
  static std::atomic<std::uint64_t> budget{1'000'000};
  return budget;
}
}  // namespace detail

// Cap on the number of states any product-style construction may
// materialize before trimming.
inline std::uint64_t state_budget() { return detail::state_budget_storage().load(); }
inline void set_state_budget(std::uint64_t n) { detail::state_budget_storage().store(n); }

}  // namespace modc
