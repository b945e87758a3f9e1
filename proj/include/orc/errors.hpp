#pragma once

#include <stdexcept>
#include <string>

namespace orc {

/// Malformed caller input: bad vertex ids, self-loops, unparsable text, unknown catalog names.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Edge-list parse failure at a specific 1-based line.
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Well-formed input outside an operation's mathematical domain
/// (disconnected pairs, unmet hypotheses of an estimate, non-regular gadgets handed to König).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A construction contradicted the counting argument it implements. Always a bug.
class TheoremContradiction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A generator's built-in self-check failed.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace orc
