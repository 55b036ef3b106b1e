#include "ccsp/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace ccsp {

ParseError::ParseError(std::size_t position, std::string expected, std::string found)
    : std::runtime_error("parse error at offset " + std::to_string(position) + ": expected " + expected +
                         ", found " + found),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok {
  Ident,
  Skip,
  Throw,
  Yield,
  SkipP,
  ThrowW,
  YieldD,
  Semi,
  Par,
  Choice,
  Interrupt,
  Percent,
  LBracket,
  RBracket,
  LParen,
  RParen,
  End,
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto at = [&](std::size_t k) { return k < src.size() ? src[k] : '\0'; };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      while (i < src.size() && src[i] == '\'') ++i;
      std::string word(src.substr(start, i - start));
      Tok kind = Tok::Ident;
      if (word == "SKIP") kind = Tok::Skip;
      else if (word == "THROW") kind = Tok::Throw;
      else if (word == "YIELD") kind = Tok::Yield;
      else if (word == "SKIPP") kind = Tok::SkipP;
      else if (word == "THROWW") kind = Tok::ThrowW;
      else if (word == "YIELDD") kind = Tok::YieldD;
      out.push_back({kind, start, std::move(word)});
      continue;
    }
    auto two = [&](char a, char b) { return c == a && at(i + 1) == b; };
    if (two('|', '|')) {
      out.push_back({Tok::Par, start, "||"});
      i += 2;
    } else if (two('|', '>')) {
      out.push_back({Tok::Interrupt, start, "|>"});
      i += 2;
    } else if (two('[', ']')) {
      out.push_back({Tok::Choice, start, "[]"});
      i += 2;
    } else if (c == ';') {
      out.push_back({Tok::Semi, start, ";"});
      ++i;
    } else if (c == '%') {
      out.push_back({Tok::Percent, start, "%"});
      ++i;
    } else if (c == '[') {
      out.push_back({Tok::LBracket, start, "["});
      ++i;
    } else if (c == ']') {
      out.push_back({Tok::RBracket, start, "]"});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::LParen, start, "("});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, start, ")"});
      ++i;
    } else {
      std::size_t len = 1;
      while (start + len < src.size() && !std::isspace(static_cast<unsigned char>(src[start + len])) &&
             std::isalnum(static_cast<unsigned char>(src[start + len])))
        ++len;
      throw ParseError(start, "a process term", "'" + std::string(src.substr(start, len)) + "'");
    }
  }
  out.push_back({Tok::End, src.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  StdTerm standard_top() {
    auto t = standard();
    expect_end("an operator or end of input");
    return t;
  }

  CompTerm compensable_top() {
    auto t = compensable();
    expect_end("a compensable operator or end of input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& advance() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::string expected) const { throw ParseError(peek().pos, std::move(expected), describe(peek())); }

  void expect(Tok k, std::string_view what) {
    if (!at(k)) fail(std::string(what));
    advance();
  }

  void expect_end(std::string_view what) {
    if (at(Tok::Percent)) fail("an operator (compensation pairs do not associate)");
    if (at(Tok::Interrupt)) fail("a compensable operator (|> applies to standard processes only)");
    if (!at(Tok::End)) fail(std::string(what));
  }

  // std := par ; par := cho ("||" cho)* ; cho := int ("[]" int)* ;
  // int := seq ("|>" seq)* ; seq := atom (";" atom)*
  StdTerm standard() { return std_par(); }

  StdTerm std_par() {
    auto t = std_choice();
    while (at(Tok::Par)) {
      advance();
      t = StdTerm::par(std::move(t), std_choice());
    }
    return t;
  }

  StdTerm std_choice() {
    auto t = std_interrupt();
    while (at(Tok::Choice)) {
      advance();
      t = StdTerm::choice(std::move(t), std_interrupt());
    }
    return t;
  }

  StdTerm std_interrupt() {
    auto t = std_seq();
    while (at(Tok::Interrupt)) {
      advance();
      t = StdTerm::interrupt(std::move(t), std_seq());
    }
    return t;
  }

  StdTerm std_seq() {
    auto t = std_operand();
    while (at(Tok::Semi)) {
      advance();
      t = StdTerm::seq(std::move(t), std_operand());
    }
    return t;
  }

  // A standard atom in standard context: a following `%` would make it a pair.
  StdTerm std_operand() {
    auto t = std_atom();
    if (at(Tok::Percent)) fail("a standard operator (compensation pair where a standard term is required)");
    return t;
  }

  StdTerm std_atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Ident:
        advance();
        return StdTerm::atom(Event(tok.text));
      case Tok::Skip:
        advance();
        return StdTerm::skip();
      case Tok::Throw:
        advance();
        return StdTerm::throw_();
      case Tok::Yield:
        advance();
        return StdTerm::yield();
      case Tok::LParen: {
        advance();
        auto t = standard();
        expect(Tok::RParen, "')'");
        return t;
      }
      case Tok::LBracket: {
        advance();
        auto body = compensable();
        expect(Tok::RBracket, "']'");
        return StdTerm::block(std::move(body));
      }
      case Tok::SkipP:
      case Tok::ThrowW:
      case Tok::YieldD:
        fail("a standard term (compensable constant where a standard term is required)");
      default:
        fail("a standard term");
    }
  }

  CompTerm compensable() { return comp_par(); }

  CompTerm comp_par() {
    auto t = comp_choice();
    while (at(Tok::Par)) {
      advance();
      t = CompTerm::par(std::move(t), comp_choice());
    }
    return t;
  }

  CompTerm comp_choice() {
    auto t = comp_seq();
    while (at(Tok::Choice)) {
      advance();
      t = CompTerm::choice(std::move(t), comp_seq());
    }
    return t;
  }

  CompTerm comp_seq() {
    auto t = comp_atom();
    while (at(Tok::Semi)) {
      advance();
      t = CompTerm::seq(std::move(t), comp_atom());
    }
    return t;
  }

  // pair := stdatom "%" stdatom | SKIPP | THROWW | YIELDD | "(" comp ")"
  CompTerm comp_atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::SkipP:
      case Tok::ThrowW:
      case Tok::YieldD:
        advance();
        return desugar_alias(tok.text);
      case Tok::LParen: {
        // Either a parenthesised standard operand of `%` or a grouped
        // compensable term; try the pair reading first.
        std::size_t saved = pos_;
        std::optional<ParseError> first_error;
        try {
          return pair();
        } catch (const ParseError& e) {
          first_error = e;
        }
        pos_ = saved;
        try {
          advance();
          auto t = compensable();
          expect(Tok::RParen, "')'");
          return t;
        } catch (const ParseError& e) {
          if (first_error->position() > e.position()) throw *first_error;
          throw;
        }
      }
      default:
        return pair();
    }
  }

  CompTerm pair() {
    auto fwd = std_atom();
    if (!at(Tok::Percent)) fail("'%' (standard term where a compensable term is required)");
    advance();
    auto comp = std_atom();
    return CompTerm::pair(std::move(fwd), std::move(comp));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

StdTerm parse_standard(std::string_view text) { return Parser(lex(text)).standard_top(); }

CompTerm parse_compensable(std::string_view text) { return Parser(lex(text)).compensable_top(); }

AnyTerm parse_term(std::string_view text, TermKind kind) {
  if (kind == TermKind::Standard) return parse_standard(text);
  return parse_compensable(text);
}

}  // namespace ccsp
