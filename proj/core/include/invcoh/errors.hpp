#pragma once

#include <stdexcept>
#include <string>

namespace invcoh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Lexical or grammatical error in an input text; carries 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  int line;
  int column;
};

class EvalError : public Error {
 public:
  using Error::Error;
};

class UnboundParameter : public EvalError {
 public:
  explicit UnboundParameter(const std::string& name)
      : EvalError("unbound parameter '" + name + "'"), name(name) {}
  std::string name;
};

class DivisionByZero : public EvalError {
 public:
  DivisionByZero() : EvalError("division by zero") {}
};

/// Semantic error in structure equations or complexes.
class StructureError : public Error {
 public:
  using Error::Error;
};

class NonIntegrable : public StructureError {
 public:
  explicit NonIntegrable(const std::string& obstruction)
      : StructureError("complex structure is not integrable; (0,2) obstruction: " +
                       obstruction),
        obstruction(obstruction) {}
  std::string obstruction;
};

class SingularChange : public StructureError {
 public:
  SingularChange() : StructureError("coframe change is singular at the given parameters") {}
};

}  // namespace invcoh
