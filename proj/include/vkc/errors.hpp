#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vkc {

/// Malformed textual input. `position` is a byte offset (or line number for
/// line-oriented formats, see `what()`).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called with arguments outside its contract.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// State sum refused because the diagram has too many chords.
class StateLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction produced a result its own postcondition rejects.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace vkc
