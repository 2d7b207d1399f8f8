#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gg/errors.hpp"
#include "gg/scalar.hpp"

namespace gg {

struct Token {
  enum class Kind { integer, identifier, punct, newline, end };
  Kind kind = Kind::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;

  bool is(std::string_view punct) const { return kind == Kind::punct && text == punct; }
  bool is_word(std::string_view word) const { return kind == Kind::identifier && text == word; }
};

/// Splits text into integers, identifiers, punctuation (`->` is one token)
/// and newlines. `#` starts a comment that runs to the end of the line.
std::vector<Token> tokenize(std::string_view text);

[[noreturn]] inline void fail_at(const Token& t, const std::string& what) {
  throw ParseError(what, t.line, t.column);
}

/// Cursor over a token vector.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool accept(std::string_view punct) {
    if (!peek().is(punct)) return false;
    next();
    return true;
  }
  const Token& expect(std::string_view punct) {
    if (!peek().is(punct)) fail_at(peek(), "expected '" + std::string(punct) + "', found " + describe(peek()));
    return next();
  }
  const Token& expect_identifier(std::string_view what = "identifier") {
    if (peek().kind != Token::Kind::identifier) fail_at(peek(), "expected " + std::string(what) + ", found " + describe(peek()));
    return next();
  }
  void skip_newlines() {
    while (peek().kind == Token::Kind::newline) next();
  }
  bool at_end() const { return peek().kind == Token::Kind::end; }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Token::Kind::end: return "end of input";
      case Token::Kind::newline: return "end of line";
      default: return "'" + t.text + "'";
    }
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// Recursive-descent parser for the expression grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' nonneg-integer)?     (or base '^' base: wedge, when supported)
///   base   := rational | 'i' | identifier | '(' expr ')' | '-' factor
///
/// Values are built by a semantics policy providing number, imaginary,
/// identifier, add, sub, mul, div, neg, power and wedge.
template <class Semantics>
class ExpressionParser {
 public:
  using Value = typename Semantics::Value;

  ExpressionParser(TokenStream& in, Semantics& sem) : in_(in), sem_(sem) {}

  Value expr() {
    Value lhs = term();
    while (in_.peek().is("+") || in_.peek().is("-")) {
      const Token op = in_.next();
      Value rhs = term();
      lhs = op.text == "+" ? sem_.add(std::move(lhs), std::move(rhs), op) : sem_.sub(std::move(lhs), std::move(rhs), op);
    }
    return lhs;
  }

 private:
  Value term() {
    Value lhs = factor();
    while (in_.peek().is("*") || in_.peek().is("/")) {
      const Token op = in_.next();
      Value rhs = factor();
      lhs = op.text == "*" ? sem_.mul(std::move(lhs), std::move(rhs), op) : sem_.div(std::move(lhs), std::move(rhs), op);
    }
    return lhs;
  }

  Value factor() {
    Value b = base();
    if (in_.peek().is("^")) {
      const Token op = in_.next();
      if (in_.peek().kind == Token::Kind::integer) {
        const Token e = in_.next();
        if (e.text.size() > 6) fail_at(e, "exponent too large");
        return sem_.power(std::move(b), static_cast<std::uint32_t>(std::stoul(e.text)), op);
      }
      if (in_.peek().is("-")) fail_at(in_.peek(), "exponent must be a nonnegative integer");
      return sem_.wedge(std::move(b), base(), op);
    }
    return b;
  }

  Value base() {
    const Token& t = in_.peek();
    if (t.kind == Token::Kind::integer) {
      const Token num = in_.next();
      mpq_class value(num.text);
      // integer '/' positive-integer is a single rational literal
      if (in_.peek().is("/") && in_.peek(1).kind == Token::Kind::integer) {
        const Token slash = in_.next();
        const Token den = in_.next();
        mpz_class d(den.text);
        if (d == 0) fail_at(slash, "division by syntactic zero literal");
        value = mpq_class(mpz_class(num.text), d);
        value.canonicalize();
      }
      return sem_.number(value, num);
    }
    if (t.kind == Token::Kind::identifier) {
      const Token id = in_.next();
      if (id.text == "i") return sem_.imaginary(id);
      return sem_.identifier(id);
    }
    if (t.is("(")) {
      in_.next();
      Value v = expr();
      in_.expect(")");
      return v;
    }
    if (t.is("-")) {
      const Token op = in_.next();
      return sem_.neg(factor(), op);
    }
    fail_at(t, "unexpected " + TokenStream::describe(t));
  }

  TokenStream& in_;
  Semantics& sem_;
};

/// Parses a scalar expression whose identifiers are the given coordinates or `i`.
Scalar parse_scalar(std::string_view text, const std::vector<std::string>& coords);

}  // namespace gg
