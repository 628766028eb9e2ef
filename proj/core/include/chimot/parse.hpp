#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "chimot/expr.hpp"

namespace chimot {

// Syntax or arity failure, with a 1-based source position.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

// Reads one space expression.  Whitespace-insensitive; '#' starts a comment
// running to end of line.  Throws ParseError; performs no semantic
// validation beyond constructor arity and argument shape (see validate()).
SpaceExpr parse(std::string_view text);

// Same, for a .chi file holding one expression.
SpaceExpr parse_file(const std::string& path);

}  // namespace chimot
