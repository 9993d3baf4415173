#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sct {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two graphs (or a word of graphs) whose endpoints do not line up.
class ComposabilityError : public Error {
 public:
  using Error::Error;
};

/// An argument outside the domain of an operation (i >= j, k out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A size-change graph that violates its structural invariants.
class InvalidGraphError : public Error {
 public:
  using Error::Error;
};

/// Input that is well formed but that an operation cannot handle.
class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph-set JSON. `pointer()` is a JSON pointer to the offending value.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : Error(pointer + ": " + message), pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

struct SourceLoc {
  std::size_t line = 0;
  std::size_t column = 0;

  // Locations never take part in AST equality.
  friend bool operator==(const SourceLoc&, const SourceLoc&) { return true; }
};

struct Diagnostic {
  SourceLoc loc;
  std::string message;

  std::string str() const {
    std::ostringstream os;
    os << loc.line << ":" << loc.column << ": " << message;
    return os.str();
  }
};

/// Lexical, syntax and validation errors of program text.
class ParseError : public Error {
 public:
  explicit ParseError(std::vector<Diagnostic> diags)
      : Error(render(diags)), diagnostics_(std::move(diags)) {}

  const std::vector<Diagnostic>& diagnostics() const noexcept {
    return diagnostics_;
  }

 private:
  static std::string render(const std::vector<Diagnostic>& diags) {
    std::string out;
    for (const auto& d : diags) {
      if (!out.empty()) out += '\n';
      out += d.str();
    }
    return out;
  }

  std::vector<Diagnostic> diagnostics_;
};

}  // namespace sct
