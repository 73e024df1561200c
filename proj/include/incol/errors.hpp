#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace incol {

/// Rejected graph construction (self-loop, duplicate edge, bad vertex, bad family parameter).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `offset` is the byte position where decoding failed.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An exact solver refused an instance beyond its configured size guard.
class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coloring does not assign a color to every arc.
class IncompleteColoringError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A constructed object failed its own certificate check. Always a bug.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace incol
