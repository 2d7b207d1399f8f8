#include "gg/parse.hpp"

#include <algorithm>
#include <cctype>

namespace gg {

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t k = 0;
  auto push = [&](Token::Kind kind, std::string s, std::size_t c) { out.push_back({kind, std::move(s), line, c}); };
  while (k < text.size()) {
    const char ch = text[k];
    if (ch == '\n') {
      push(Token::Kind::newline, "\n", col);
      ++line;
      col = 1;
      ++k;
      continue;
    }
    if (ch == '#') {
      while (k < text.size() && text[k] != '\n') ++k;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++k;
      ++col;
      continue;
    }
    const std::size_t start = k;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      push(Token::Kind::integer, std::string(text.substr(start, k - start)), col);
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      while (k < text.size() && (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == '_')) ++k;
      push(Token::Kind::identifier, std::string(text.substr(start, k - start)), col);
    } else if (ch == '-' && k + 1 < text.size() && text[k + 1] == '>') {
      k += 2;
      push(Token::Kind::punct, "->", col);
    } else if (std::string_view("+-*/^()[]{}:;,=").find(ch) != std::string_view::npos) {
      ++k;
      push(Token::Kind::punct, std::string(1, ch), col);
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
    }
    col += k - start;
  }
  out.push_back({Token::Kind::end, "", line, col});
  return out;
}

namespace {

struct ScalarSemantics {
  using Value = Scalar;
  const std::vector<std::string>& coords;

  Value number(const mpq_class& q, const Token&) { return Scalar(GaussianRational(q)); }
  Value imaginary(const Token&) { return imaginary_unit(); }
  Value identifier(const Token& t) {
    if (std::find(coords.begin(), coords.end(), t.text) == coords.end()) fail_at(t, "unknown identifier '" + t.text + "'");
    return coordinate(t.text);
  }
  Value add(Value a, Value b, const Token&) { return a + b; }
  Value sub(Value a, Value b, const Token&) { return a - b; }
  Value mul(Value a, Value b, const Token&) { return a * b; }
  Value div(Value a, Value b, const Token& op) {
    if (b.is_zero()) fail_at(op, "division by zero");
    return a / b;
  }
  Value neg(Value a, const Token&) { return -a; }
  Value power(Value a, std::uint32_t e, const Token&) { return a.pow(e); }
  Value wedge(Value, Value, const Token& op) { fail_at(op, "exponent must be a nonnegative integer"); }
};

}  // namespace

Scalar parse_scalar(std::string_view text, const std::vector<std::string>& coords) {
  TokenStream in(tokenize(text));
  in.skip_newlines();
  ScalarSemantics sem{coords};
  ExpressionParser<ScalarSemantics> parser(in, sem);
  Scalar value = parser.expr();
  in.skip_newlines();
  if (!in.at_end()) fail_at(in.peek(), "unexpected " + TokenStream::describe(in.peek()));
  return value;
}

}  // namespace gg
