#pragma once

#include <stdexcept>
#include <string>

namespace snlab {

// Invalid argument or violated operation precondition on caller-supplied data.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Structural precondition failure, e.g. contracting cycles that share vertices.
class StructureError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A hard size cap was exceeded (matching enumeration, enumeration order, ...).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed text input. `line` is 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace snlab
