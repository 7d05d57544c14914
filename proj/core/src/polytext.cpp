#include "flatcheck/polytext.hpp"

#include <cctype>

namespace flatcheck {

std::string describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::identifier: return "identifier";
    case TokenKind::integer: return "integer";
    case TokenKind::plus: return "'+'";
    case TokenKind::minus: return "'-'";
    case TokenKind::star: return "'*'";
    case TokenKind::slash: return "'/'";
    case TokenKind::caret: return "'^'";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::lbracket: return "'['";
    case TokenKind::rbracket: return "']'";
    case TokenKind::comma: return "','";
    case TokenKind::semicolon: return "';'";
    case TokenKind::equals: return "'='";
    case TokenKind::end: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto span_at = [&](std::size_t start, std::size_t start_col, std::size_t len) {
    return SourceSpan{line, start_col, start, len};
  };
  auto bump = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n' || c == ' ' || c == '\t' || c == '\r') {
      bump(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
      while (i < text.size() && text[i] != '\n') bump(1);
      continue;
    }
    const std::size_t start = i, start_col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back(Token{TokenKind::identifier, std::string(text.substr(i, j - i)),
                          span_at(start, start_col, j - i)});
      bump(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && (text[j] == '.' || text[j] == 'e' || text[j] == 'E') &&
          j + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
        throw ParseError(span_at(start, start_col, j - i + 1),
                         "floating-point coefficients are not supported; write p/q");
      }
      out.push_back(Token{TokenKind::integer, std::string(text.substr(i, j - i)),
                          span_at(start, start_col, j - i)});
      bump(j - i);
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::plus; break;
      case '-': kind = TokenKind::minus; break;
      case '*': kind = TokenKind::star; break;
      case '/': kind = TokenKind::slash; break;
      case '^': kind = TokenKind::caret; break;
      case '(': kind = TokenKind::lparen; break;
      case ')': kind = TokenKind::rparen; break;
      case '[': kind = TokenKind::lbracket; break;
      case ']': kind = TokenKind::rbracket; break;
      case ',': kind = TokenKind::comma; break;
      case ';': kind = TokenKind::semicolon; break;
      case '=': kind = TokenKind::equals; break;
      case '.':
        throw ParseError(span_at(start, start_col, 1),
                         "floating-point coefficients are not supported; write p/q");
      default:
        throw ParseError(span_at(start, start_col, 1),
                         std::string("unexpected character '") + c + "'");
    }
    out.push_back(Token{kind, std::string(1, c), span_at(start, start_col, 1)});
    bump(1);
  }
  out.push_back(Token{TokenKind::end, "", SourceSpan{line, col, text.size(), 0}});
  return out;
}

ExpressionParser::ExpressionParser(const std::vector<Token>& tokens, std::size_t& pos, RingPtr ring)
    : tokens_(tokens), pos_(pos), ring_(std::move(ring)) {}

Polynomial ExpressionParser::parse_expression() {
  Polynomial result = parse_term();
  while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
    const bool minus = advance().kind == TokenKind::minus;
    Polynomial rhs = parse_term();
    if (minus) {
      result -= rhs;
    } else {
      result += rhs;
    }
  }
  return result;
}

Polynomial ExpressionParser::parse_term() {
  bool after_integer = peek().kind == TokenKind::integer;
  Polynomial result = parse_factor();
  while (true) {
    const Token& t = peek();
    if (t.kind == TokenKind::star) {
      advance();
      after_integer = peek().kind == TokenKind::integer;
      result *= parse_factor();
    } else if (t.kind == TokenKind::slash) {
      const SourceSpan at = advance().span;
      after_integer = peek().kind == TokenKind::integer;
      Polynomial divisor = parse_factor();
      auto c = divisor.constant_value();
      if (!c) throw ParseError(at, "division is only allowed by a rational constant");
      if (sgn(*c) == 0) throw ParseError(at, "division by zero");
      result = result.scaled(1 / *c);
    } else if (after_integer && t.kind == TokenKind::identifier) {
      // "4y1" reads as 4*y1.
      after_integer = false;
      result *= parse_factor();
    } else {
      return result;
    }
  }
}

Polynomial ExpressionParser::parse_factor() {
  if (peek().kind == TokenKind::plus) {
    advance();
    return parse_factor();
  }
  if (peek().kind == TokenKind::minus) {
    advance();
    return -parse_factor();
  }
  Polynomial base = parse_unary();
  if (peek().kind == TokenKind::caret) {
    advance();
    const Token& e = peek();
    if (e.kind != TokenKind::integer) {
      throw ParseError(e.span, "exponent must be a non-negative integer", {describe(TokenKind::integer)});
    }
    advance();
    if (e.text.size() > 6) throw ParseError(e.span, "exponent too large");
    base = base.pow(static_cast<unsigned>(std::stoul(e.text)));
  }
  return base;
}

Polynomial ExpressionParser::parse_unary() {
  const Token& t = peek();
  switch (t.kind) {
    case TokenKind::integer: {
      advance();
      return Polynomial::constant(ring_, Rational(Integer(t.text)));
    }
    case TokenKind::identifier: {
      auto idx = ring_->index_of(t.text);
      if (!idx) {
        throw ParseError(t.span, "unknown variable '" + t.text + "' in " + ring_->describe());
      }
      advance();
      return Polynomial::variable(ring_, *idx);
    }
    case TokenKind::lparen: {
      advance();
      Polynomial inner = parse_expression();
      if (peek().kind != TokenKind::rparen) {
        throw ParseError(peek().span, "unbalanced parenthesis",
                         {describe(TokenKind::rparen), "operator"});
      }
      advance();
      return inner;
    }
    default:
      throw ParseError(t.span, "expected a polynomial term",
                       {describe(TokenKind::integer), "variable", describe(TokenKind::lparen)});
  }
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  const auto tokens = tokenize(text);
  std::size_t pos = 0;
  ExpressionParser parser(tokens, pos, ring);
  Polynomial p = parser.parse_expression();
  if (tokens[pos].kind != TokenKind::end) {
    throw ParseError(tokens[pos].span, "unexpected " + describe(tokens[pos].kind),
                     {"operator", describe(TokenKind::end)});
  }
  return p;
}

}  // namespace flatcheck
