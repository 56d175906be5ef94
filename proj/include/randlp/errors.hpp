#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace randlp {

// Precondition or argument violation (bad universe, k outside (0,n), ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but outside what an operation supports,
// e.g. positive body atoms handed to the two-literal translator.
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Model parameters for which a quantity is undefined (c1 = 0 has no alpha).
class UnsupportedParameters : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Brute-force enumeration refused because the universe is too large.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t n, std::size_t cap)
      : std::runtime_error("universe size " + std::to_string(n) +
                           " exceeds brute-force cap " + std::to_string(cap)),
        n_(n),
        cap_(cap) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace randlp
