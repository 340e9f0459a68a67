#include "defectforms/parse.hpp"

#include <cctype>

namespace defectforms {

std::vector<Token> tokenize(std::string_view text, SourcePos origin) {
  std::vector<Token> out;
  int line = origin.line;
  int col = origin.column;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    std::size_t start = i;
    int start_col = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Token::Kind::Number, std::string(text.substr(start, i - start)), line, start_col});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      out.push_back({Token::Kind::Ident, std::string(text.substr(start, i - start)), line, start_col});
    } else if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
      ++i;
      out.push_back({Token::Kind::Symbol, std::string(1, c), line, start_col});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    col += static_cast<int>(i - start);
  }
  out.push_back({Token::Kind::End, "end of input", line, col});
  return out;
}

const VariableTable& coordinate_variables() {
  static const VariableTable table{{"x", 0}, {"x1", 0}, {"y", 1}, {"x2", 1}, {"z", 2}, {"x3", 2}};
  return table;
}

namespace {

struct ScalarSemantics {
  using Value = ScalarField;
  const VariableTable& vars;

  Value number(const Rational& r) { return r; }
  Value ident(const Token& t) {
    auto it = vars.find(t.text);
    if (it == vars.end()) throw ParseError("unknown variable '" + t.text + "'", t.line, t.column);
    return ScalarField::coordinate(it->second);
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b) { return a * b; }
  Value div(const Value& a, const Value& b) { return a / b; }
  Value neg(const Value& a) { return -a; }
  Value power(const Value& a, unsigned e) { return a.pow(e); }
  Value wedge(const Value&, const Value&) { throw DomainError("exponent must be a non-negative integer literal"); }
  bool scalar(const Value&) { return true; }
};

}  // namespace

ScalarField parse_scalar(std::string_view text, const VariableTable& vars, SourcePos origin) {
  ScalarSemantics sem{vars};
  detail::ExpressionParser<ScalarSemantics> parser(tokenize(text, origin), sem);
  return parser.parse_all();
}

}  // namespace defectforms
