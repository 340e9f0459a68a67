#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "defectforms/errors.hpp"
#include "defectforms/scalar_field.hpp"

namespace defectforms {

/// Location of the first character of a text fragment inside a larger file.
struct SourcePos {
  int line = 1;
  int column = 1;
};

struct Token {
  enum class Kind { Number, Ident, Symbol, End };
  Kind kind;
  std::string text;
  int line;
  int column;
};

/// Splits expression text into integer literals, identifiers and the
/// one-character symbols + - * / ^ ( ) ,. Throws ParseError on anything else.
std::vector<Token> tokenize(std::string_view text, SourcePos origin = {});

/// Identifier -> coordinate axis (0-based) used when parsing scalars.
using VariableTable = std::map<std::string, int, std::less<>>;

/// x|x1, y|x2, z|x3.
const VariableTable& coordinate_variables();

/// Parses the scalar grammar: integers, p/q, variables, + - * / ^ and
/// parentheses, where ^ takes a non-negative integer literal.
ScalarField parse_scalar(std::string_view text, const VariableTable& vars = coordinate_variables(),
                         SourcePos origin = {});

namespace detail {

/// Precedence-climbing parser shared by the scalar and form grammars.
///
/// Sem supplies the value type and its operations:
///   Value number(const Rational&), Value ident(const Token&),
///   add, sub, mul, div, neg, power(Value, unsigned), wedge(Value, Value),
///   bool scalar(const Value&).
/// Operations may throw Error; the message is re-thrown as a ParseError at
/// the operator token.
template <class Sem>
class ExpressionParser {
 public:
  using Value = typename Sem::Value;

  ExpressionParser(std::vector<Token> tokens, Sem& sem) : tokens_(std::move(tokens)), sem_(sem) {}

  Value parse_all() {
    Value v = expression();
    if (peek().kind != Token::Kind::End) fail(peek(), "unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool at(const char* symbol) const {
    return peek().kind == Token::Kind::Symbol && peek().text == symbol;
  }

  [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw ParseError(msg, t.line, t.column); }

  template <class F>
  Value guarded(const Token& t, F&& f) {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(t, e.what());
    }
  }

  Value expression() {
    Value v = product();
    while (at("+") || at("-")) {
      const Token& op = next();
      Value rhs = product();
      v = guarded(op, [&] { return op.text == "+" ? sem_.add(v, rhs) : sem_.sub(v, rhs); });
    }
    return v;
  }

  Value product() {
    Value v = unary();
    while (at("*") || at("/")) {
      const Token& op = next();
      Value rhs = unary();
      v = guarded(op, [&] { return op.text == "*" ? sem_.mul(v, rhs) : sem_.div(v, rhs); });
    }
    return v;
  }

  Value unary() {
    if (at("-")) {
      const Token& op = next();
      Value v = unary();
      return guarded(op, [&] { return sem_.neg(v); });
    }
    if (at("+")) {
      next();
      return unary();
    }
    return wedge_or_power();
  }

  // '^' binds tighter than '*': an integer literal exponent on a scalar is a
  // power, anything else is a wedge product (left associative).
  Value wedge_or_power() {
    Value v = primary();
    while (at("^")) {
      const Token& op = next();
      if (peek().kind == Token::Kind::Number && sem_.scalar(v)) {
        const Token& n = next();
        unsigned e = 0;
        try {
          e = static_cast<unsigned>(std::stoul(n.text));
        } catch (const std::exception&) {
          fail(n, "exponent out of range");
        }
        if (e > 64) fail(n, "exponent too large");
        v = guarded(op, [&] { return sem_.power(v, e); });
        continue;
      }
      Value rhs = primary();
      v = guarded(op, [&] { return sem_.wedge(v, rhs); });
    }
    return v;
  }

  Value primary() {
    const Token& t = next();
    switch (t.kind) {
      case Token::Kind::Number:
        return guarded(t, [&] { return sem_.number(Rational::parse(t.text)); });
      case Token::Kind::Ident:
        return guarded(t, [&] { return sem_.ident(t); });
      case Token::Kind::Symbol:
        if (t.text == "(") {
          Value v = expression();
          if (!at(")")) fail(peek(), "expected ')'");
          next();
          return v;
        }
        fail(t, "unexpected '" + t.text + "'");
      case Token::Kind::End:
        fail(t, "unexpected end of expression");
    }
    fail(t, "unexpected token");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Sem& sem_;
};

}  // namespace detail
}  // namespace defectforms
