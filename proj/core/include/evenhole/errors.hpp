#ifndef EVENHOLE_ERRORS_HPP
#define EVENHOLE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evenhole {

/// Caller handed us something outside an operation's domain (bad node id,
/// malformed witness, duplicate terminals, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the text readers. Carries the 1-based line and the byte offset
/// into the input where decoding stopped.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t offset)
      : InputError(what + " (line " + std::to_string(line) + ", offset " +
                   std::to_string(offset) + ")"),
        line_(line),
        offset_(offset) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

/// An exponential search hit its configured expansion budget. Never a
/// verdict: callers must treat the question as unanswered.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural invariant the algorithm relies on did not hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace evenhole

#endif  // EVENHOLE_ERRORS_HPP
