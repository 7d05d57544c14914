#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flatcheck/errors.hpp"
#include "flatcheck/polyring.hpp"

namespace flatcheck {

enum class TokenKind {
  identifier,
  integer,
  plus,
  minus,
  star,
  slash,
  caret,
  lparen,
  rparen,
  lbracket,
  rbracket,
  comma,
  semicolon,
  equals,
  end,
};

struct Token {
  TokenKind kind;
  std::string text;
  SourceSpan span;
};

std::string describe(TokenKind kind);

/// Splits text into tokens. `#` and `//` start comments running to the end
/// of the line. Decimal points are rejected: coefficients must be rational.
std::vector<Token> tokenize(std::string_view text);

/// Recursive-descent parser for polynomial expressions over a fixed ring,
/// reading from a token stream shared with the caller.
///
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor | <factor after an integer>)*
///   factor  := ('+'|'-') factor | unary ['^' integer]
///   unary   := integer | identifier | '(' expr ')'
///
/// Division is allowed only by nonzero constants, which is how rational
/// coefficients `p/q` are written.
class ExpressionParser {
 public:
  ExpressionParser(const std::vector<Token>& tokens, std::size_t& pos, RingPtr ring);

  Polynomial parse_expression();

 private:
  Polynomial parse_term();
  Polynomial parse_factor();
  Polynomial parse_unary();
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  const std::vector<Token>& tokens_;
  std::size_t& pos_;
  RingPtr ring_;
};

/// Parses one polynomial, e.g. "4*y1^3 + 27*y2^2".
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace flatcheck
