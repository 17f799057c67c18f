#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orelab {

/// A precondition on an argument was violated (bad vertex id, non-edge, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input exceeds a configured cap of an exponential procedure.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed serialized input. `offset` is the byte position of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace orelab
