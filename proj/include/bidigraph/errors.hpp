#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bidi {

/// Bad input: unknown names, malformed walks, unparsable documents.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A .bdg syntax error; carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An operation was asked for outside the regime where it is well defined.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An enumeration cap or an oracle size guard was hit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bidi
