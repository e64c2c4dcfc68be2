#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace recnum {

// Budget or capacity violation: sieve budget exceeded, divisor cap exceeded,
// or an intermediate value that will not fit the declared integer width.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed external input (b-files). Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace recnum
