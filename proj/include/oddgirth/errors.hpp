#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oddgirth {

/// Malformed graph6 or edge-list input. `position` is a byte offset
/// (graph6) or a 1-based line number (edge list).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class GenerationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Input that violates a structural precondition (disconnected graph,
/// degenerate spectrum, order out of range).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace oddgirth
