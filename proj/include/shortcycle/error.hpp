#pragma once

#include <stdexcept>
#include <string>

namespace shortcycle {

// Thrown for violated preconditions and malformed inputs. Internal invariant
// failures use std::logic_error instead so tests can tell the two apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input-file problems carry the 1-based line they were detected on.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

[[noreturn]] inline void invariant_failed(const char* what) {
  throw std::logic_error(std::string("internal invariant violated: ") + what);
}

}  // namespace detail

#define SHORTCYCLE_ENSURE(cond, what)                 \
  do {                                                \
    if (!(cond)) ::shortcycle::detail::invariant_failed(what); \
  } while (0)

}  // namespace shortcycle
