#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bdg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Formula syntax error. `column` is 1-based within the parsed text.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " at column " + std::to_string(column)), column(column) {}
  std::size_t column;
};

struct UndeclaredAtom : Error {
  explicit UndeclaredAtom(const std::string& name)
      : Error("undeclared atom '" + name + "'"), name(name) {}
  std::string name;
};

// Spec DSL error with 1-based line/column.
struct SpecError : Error {
  SpecError(const std::string& what, std::size_t line, std::size_t column = 0)
      : Error("line " + std::to_string(line) +
              (column ? ":" + std::to_string(column) : std::string()) + ": " +
              what),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

struct VocabularyOverflow : Error {
  using Error::Error;
};

// An enumeration (decisions, profiles, goal sets) would exceed its cap.
struct BoundExceeded : Error {
  using Error::Error;
};

struct InfeasibleProfile : Error {
  using Error::Error;
};

struct NotUClosed : Error {
  using Error::Error;
};

struct CrossAgentRule : Error {
  using Error::Error;
};

}  // namespace bdg
