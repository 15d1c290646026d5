#include "cwcount/expression_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cwcount {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  // Consumes whitespace and comments; a ";width INT" comment seen before the
  // term is the width declaration.
  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        size_t comment_start = pos_;
        int comment_line = line_, comment_col = col_;
        std::string body;
        while (pos_ < text_.size() && text_[pos_] != '\n') {
          body.push_back(text_[pos_]);
          advance();
        }
        maybe_width_directive(body, comment_start, comment_line, comment_col);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  bool eof() {
    skip_blank();
    return pos_ >= text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_blank();
    if (peek() != c) {
      fail(std::string("expected '") + c + "'" +
           (pos_ >= text_.size() ? " before end of input" : ""));
    }
    advance();
  }

  std::string word() {
    skip_blank();
    std::string w;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' ||
          c == ';') {
        break;
      }
      w.push_back(c);
      advance();
    }
    if (w.empty()) fail("expected a token");
    return w;
  }

  int label() {
    skip_blank();
    int at_line = line_, at_col = col_;
    std::string w = word();
    size_t idx = 0;
    long value = 0;
    try {
      value = std::stol(w, &idx);
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got '" + w + "'", at_line, at_col);
    }
    if (idx != w.size()) {
      throw ParseError("expected an integer, got '" + w + "'", at_line, at_col);
    }
    if (value < 1) {
      throw ParseError("label must be >= 1, got " + w, at_line, at_col);
    }
    return static_cast<int>(value);
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, col_);
  }

  void mark_term_started() { term_started_ = true; }
  int declared_width() const { return declared_width_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void maybe_width_directive(const std::string& body, size_t, int comment_line,
                             int comment_col) {
    std::istringstream in(body.substr(1));
    std::string head;
    if (!(in >> head) || head != "width") return;
    if (term_started_) return;
    if (declared_width_ >= 0) {
      throw ParseError("duplicate width declaration", comment_line, comment_col);
    }
    long value = 0;
    if (!(in >> value) || value < 1) {
      throw ParseError("width declaration needs a positive integer",
                       comment_line, comment_col);
    }
    std::string rest;
    if (in >> rest) {
      throw ParseError("trailing content in width declaration", comment_line,
                       comment_col);
    }
    declared_width_ = static_cast<int>(value);
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  bool term_started_ = false;
  int declared_width_ = -1;
};

ExprPtr parse_term(Scanner& s) {
  s.expect('(');
  s.mark_term_started();
  int op_line = s.line(), op_col = s.col();
  std::string op = s.word();
  ExprPtr out;
  if (op == "v") {
    out = Expr::singleton(s.label());
  } else if (op == "ren") {
    int from_line = s.line(), from_col = s.col();
    int from = s.label();
    int to = s.label();
    if (from == to) {
      throw ParseError("rename with equal labels", from_line, from_col);
    }
    out = Expr::rename(from, to, parse_term(s));
  } else if (op == "u") {
    ExprPtr left = parse_term(s);
    out = Expr::disjoint_union(std::move(left), parse_term(s));
  } else if (op == "e") {
    int a_line = s.line(), a_col = s.col();
    int a = s.label();
    int b = s.label();
    if (a == b) {
      throw ParseError("edge between a label and itself", a_line, a_col);
    }
    out = Expr::edge_create(a, b, parse_term(s));
  } else {
    throw ParseError("unknown operator '" + op + "'", op_line, op_col);
  }
  s.expect(')');
  return out;
}

}  // namespace

ParseResult parse_expression(const std::string& text) {
  Scanner s(text);
  ExprPtr expr = parse_term(s);
  if (!s.eof()) s.fail("trailing content after the term");
  int width = expr->max_label();
  if (s.declared_width() >= 0) {
    if (s.declared_width() < width) {
      throw ParseError("declared width " + std::to_string(s.declared_width()) +
                           " is below the maximum label " +
                           std::to_string(width),
                       1, 1);
    }
    width = s.declared_width();
  }
  return {std::move(expr), width};
}

ParseResult load_expression_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_expression(buf.str());
}

namespace {

void serialize_into(const ExprPtr& e, std::string& out) {
  switch (e->kind()) {
    case ExprKind::Singleton:
      out += "(v " + std::to_string(e->label_a()) + ")";
      return;
    case ExprKind::Rename:
      out += "(ren " + std::to_string(e->label_a()) + " " +
             std::to_string(e->label_b()) + " ";
      serialize_into(e->left(), out);
      out += ")";
      return;
    case ExprKind::Union:
      out += "(u ";
      serialize_into(e->left(), out);
      out += " ";
      serialize_into(e->right(), out);
      out += ")";
      return;
    case ExprKind::EdgeCreate:
      out += "(e " + std::to_string(e->label_a()) + " " +
             std::to_string(e->label_b()) + " ";
      serialize_into(e->left(), out);
      out += ")";
      return;
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace

std::string serialize_expression(const ExprPtr& expr) {
  if (!expr) throw std::invalid_argument("serialize_expression: null term");
  std::string out;
  serialize_into(expr, out);
  return out;
}

}  // namespace cwcount
