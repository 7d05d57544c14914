#include "flatcheck/dsl.hpp"

#include <set>

#include "flatcheck/polytext.hpp"

namespace flatcheck {

namespace {

struct RingSpec {
  RingPtr ring;
  SourceSpan span;
};

class ProblemParser {
 public:
  ProblemParser(std::string_view text, const DecompositionOptions& options)
      : tokens_(tokenize(text)), options_(options) {}

  ProblemFile parse() {
    while (peek().kind != TokenKind::end) statement();
    return std::move(file_);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  const Token& expect(TokenKind kind, const std::string& what = "") {
    if (peek().kind != kind) {
      throw ParseError(peek().span,
                       "unexpected " + (peek().kind == TokenKind::end
                                            ? describe(TokenKind::end)
                                            : "'" + peek().text + "'") +
                           (what.empty() ? "" : " in " + what),
                       {describe(kind)});
    }
    return advance();
  }

  void expect_keyword(const std::string& word) {
    if (peek().kind != TokenKind::identifier || peek().text != word)
      throw ParseError(peek().span, "unexpected '" + peek().text + "'", {"'" + word + "'"});
    advance();
  }

  void declare(const std::string& kind, const Token& name) {
    for (const auto& d : file_.declarations) {
      if (d.name == name.text && kind != "option" && kind != "assert")
        throw VariableClash(name.span, "'" + name.text + "' is already declared at line " +
                                           std::to_string(d.span.line));
      if (d.kind == kind && (kind == "ring" || kind == "module" || kind == "cover"))
        throw VariableClash(name.span, "a " + kind + " is already declared at line " +
                                           std::to_string(d.span.line));
      if (d.kind == kind && (kind == "option" || kind == "assert") && d.name == name.text)
        throw VariableClash(name.span, "duplicate " + kind + " '" + name.text + "'");
    }
    file_.declarations.push_back(Declaration{kind, name.text, name.span});
  }

  void statement() {
    const Token& head = peek();
    if (head.kind != TokenKind::identifier)
      throw ParseError(head.span, "expected a declaration",
                       {"'ring'", "'module'", "'cover'", "'ideal'", "'option'", "'assert'"});
    if (head.text == "ring") {
      ring_statement();
    } else if (head.text == "module" || head.text == "cover") {
      over_statement(head.text);
    } else if (head.text == "ideal") {
      ideal_statement();
    } else if (head.text == "option") {
      option_statement();
    } else if (head.text == "assert") {
      assert_statement();
    } else {
      throw ParseError(head.span, "unknown declaration '" + head.text + "'",
                       {"'ring'", "'module'", "'cover'", "'ideal'", "'option'", "'assert'"});
    }
    expect(TokenKind::semicolon, "declaration");
  }

  RingSpec ring_literal() {
    const Token& q = peek();
    if (q.kind != TokenKind::identifier || q.text != "Q")
      throw ParseError(q.span, "only rings over Q are supported", {"'Q'"});
    advance();
    expect(TokenKind::lbracket, "ring");
    std::vector<std::string> names;
    std::set<std::string> seen;
    while (true) {
      const Token& v = expect(TokenKind::identifier, "variable list");
      if (!seen.insert(v.text).second)
        throw VariableClash(v.span, "variable '" + v.text + "' is declared twice");
      names.push_back(v.text);
      if (peek().kind == TokenKind::comma) {
        advance();
        continue;
      }
      if (peek().kind == TokenKind::rbracket) break;
      throw ParseError(peek().span, "unexpected '" + peek().text + "' in variable list",
                       {describe(TokenKind::comma), describe(TokenKind::rbracket)});
    }
    advance();
    return RingSpec{PolyRing::make(std::move(names)), q.span};
  }

  std::vector<Polynomial> generator_list(const RingPtr& ring) {
    expect(TokenKind::lparen, "generator list");
    std::vector<Polynomial> gens;
    if (peek().kind == TokenKind::rparen) {
      advance();
      return gens;
    }
    while (true) {
      ExpressionParser expr(tokens_, pos_, ring);
      gens.push_back(expr.parse_expression());
      if (peek().kind == TokenKind::comma) {
        advance();
        continue;
      }
      if (peek().kind == TokenKind::rparen) break;
      throw ParseError(peek().span, "unexpected '" + peek().text + "' in generator list",
                       {describe(TokenKind::comma), describe(TokenKind::rparen), "operator"});
    }
    advance();
    return gens;
  }

  /// "Q[...] [/ (...) | / radical(...)]"
  Ideal quotient_literal() {
    auto spec = ring_literal();
    if (peek().kind != TokenKind::slash) return Ideal(spec.ring);
    advance();
    if (peek().kind == TokenKind::identifier && peek().text == "radical") {
      advance();
      Ideal raw(spec.ring, generator_list(spec.ring));
      if (raw.is_unit()) return raw;
      return radical_and_minimal(raw, options_).radical.canonical();
    }
    if (peek().kind != TokenKind::lparen)
      throw ParseError(peek().span, "unexpected '" + peek().text + "'",
                       {describe(TokenKind::lparen), "'radical'"});
    return Ideal(spec.ring, generator_list(spec.ring));
  }

  void ring_statement() {
    advance();
    const Token& name = expect(TokenKind::identifier, "ring declaration");
    declare("ring", name);
    expect(TokenKind::equals, "ring declaration");
    const SourceSpan at = peek().span;
    Ideal q = quotient_literal();
    if (q.is_unit()) throw ParseError(at, "the base ideal is the unit ideal");
    file_.base = BaseRing::make(std::move(q));
    base_name_ = name.text;
  }

  void over_statement(const std::string& kind) {
    advance();
    const Token& name = expect(TokenKind::identifier, kind + " declaration");
    declare(kind, name);
    expect_keyword("over");
    const Token& ring = expect(TokenKind::identifier, kind + " declaration");
    if (!file_.base || ring.text != base_name_)
      throw ParseError(ring.span, "unknown base ring '" + ring.text + "'",
                       {base_name_.empty() ? "a declared ring" : "'" + base_name_ + "'"});
    expect(TokenKind::equals, kind + " declaration");
    const SourceSpan at = peek().span;
    Ideal ideal = quotient_literal();
    try {
      if (kind == "module")
        file_.module = ModuleSpec::make(*file_.base, std::move(ideal));
      else
        file_.cover = RegularCover::make(*file_.base, std::move(ideal));
    } catch (const VariableClash& e) {
      throw VariableClash(at, e.what());
    }
  }

  void ideal_statement() {
    advance();
    const Token& name = expect(TokenKind::identifier, "ideal declaration");
    declare("ideal", name);
    expect(TokenKind::equals, "ideal declaration");
    file_.ideals.emplace_back(name.text, quotient_literal());
  }

  void option_statement() {
    advance();
    const Token& name = expect(TokenKind::identifier, "option");
    if (name.text != "power") throw ParseError(name.span, "unknown option '" + name.text + "'", {"'power'"});
    declare("option", name);
    expect(TokenKind::equals, "option");
    const Token& value = expect(TokenKind::integer, "option");
    if (value.text.size() > 4 || std::stoi(value.text) < 1)
      throw ParseError(value.span, "power must be an integer between 1 and 9999");
    file_.power = std::stoi(value.text);
  }

  void assert_statement() {
    advance();
    const Token& name = expect(TokenKind::identifier, "assertion");
    if (name.text != "analytically_irreducible" && name.text != "source_regular")
      throw ParseError(name.span, "unknown assertion '" + name.text + "'",
                       {"'analytically_irreducible'", "'source_regular'"});
    declare("assert", name);
    file_.assertions.insert(name.text);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  DecompositionOptions options_;
  ProblemFile file_;
  std::string base_name_;
};

}  // namespace

const Declaration* ProblemFile::find(const std::string& kind) const {
  for (const auto& d : declarations)
    if (d.kind == kind) return &d;
  return nullptr;
}

FlatnessProblem ProblemFile::problem(const DecompositionOptions& options,
                                     const std::set<std::string>& waivers) const {
  if (!base) throw InvalidInput("the problem file declares no base ring");
  if (!module) throw InvalidInput("the problem file declares no module");
  return FlatnessProblem{*base, *module, cover, power, assertions, waivers, false, options};
}

ProblemFile parse_problem(std::string_view text, const DecompositionOptions& options) {
  return ProblemParser(text, options).parse();
}

Ideal parse_ideal(std::string_view text, const RingPtr& ring) {
  const auto tokens = tokenize(text);
  std::size_t pos = 0;
  const bool wrapped = tokens[0].kind == TokenKind::lparen;
  std::size_t depth = 0;
  // A leading '(' wraps the whole list only if it closes at the very end.
  bool whole = false;
  if (wrapped) {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].kind == TokenKind::lparen) ++depth;
      if (tokens[i].kind == TokenKind::rparen && --depth == 0) {
        whole = tokens[i + 1].kind == TokenKind::end;
        break;
      }
    }
  }
  if (whole) ++pos;
  std::vector<Polynomial> gens;
  const TokenKind close = whole ? TokenKind::rparen : TokenKind::end;
  if (tokens[pos].kind != close) {
    while (true) {
      ExpressionParser expr(tokens, pos, ring);
      gens.push_back(expr.parse_expression());
      if (tokens[pos].kind == TokenKind::comma) {
        ++pos;
        continue;
      }
      break;
    }
  }
  if (tokens[pos].kind != close)
    throw ParseError(tokens[pos].span, "unexpected " + describe(tokens[pos].kind),
                     {describe(TokenKind::comma), describe(close)});
  if (whole) ++pos;
  if (tokens[pos].kind != TokenKind::end)
    throw ParseError(tokens[pos].span, "trailing input", {describe(TokenKind::end)});
  return Ideal(ring, std::move(gens));
}

}  // namespace flatcheck
