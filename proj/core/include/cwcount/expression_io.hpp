#ifndef CWCOUNT_EXPRESSION_IO_HPP
#define CWCOUNT_EXPRESSION_IO_HPP

#include <stdexcept>
#include <string>

#include "cwcount/expression.hpp"

namespace cwcount {

// Concrete syntax, one term per file:
//   expr := "(v" INT ")" | "(ren" INT INT expr ")"
//         | "(u" expr expr ")" | "(e" INT INT expr ")"
// ";" starts a comment running to end of line.  A comment of the form
// ";width INT" before the term declares the label width; the effective width
// is max(declared, max label in the term), and a declaration below the max
// label is an error.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ParseResult {
  ExprPtr expr;
  int width;
};

ParseResult parse_expression(const std::string& text);
ParseResult load_expression_file(const std::string& path);

// Single line, no width header; parse(serialize(e)) is structurally e.
std::string serialize_expression(const ExprPtr& expr);

}  // namespace cwcount

#endif  // CWCOUNT_EXPRESSION_IO_HPP
