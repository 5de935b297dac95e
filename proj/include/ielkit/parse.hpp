#pragma once

#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ielkit/errors.hpp"
#include "ielkit/formula.hpp"

namespace ielkit {

// Concrete grammar (ASCII aliases accepted everywhere; UTF-8 input):
//
//   formula := or ("->" formula)?                 right-associative
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "~" unary | "K" unary | "[]" unary | "V" unary
//            | term ":" unary | atom | "_|_" | "(" formula ")"
//   term    := tapp ("+" tapp)* ; tapp := tbang ("*" tbang)*
//   tbang   := "!" tbang | ident | "(" term ")"
//
// "~"/"!"/modalities and t:A bind tightest, then "&", then "|", then "->".
// Unicode aliases: ⊥ □ ¬ ∧ ∨ → · ⇒.
//
// Identifiers start with a lowercase letter. Whether an identifier in term
// position is a proof variable or a proof constant is decided by declaration
// (ParseOptions), with a late-alphabet default: u,v,w,x,y,z start variables.

struct ParseOptions {
  std::set<std::string> variables;  // declared proof variables
  std::set<std::string> constants;  // declared proof constants

  bool is_variable(const std::string& name) const {
    if (variables.count(name)) return true;
    if (constants.count(name)) return false;
    return name[0] >= 'u' && name[0] <= 'z';
  }
};

namespace detail {

enum class Tok : std::uint8_t {
  Ident, Bot, And, Or, Imp, Not, KnowOp, BoxOp, VerOp,
  Colon, Star, Plus, Bang, LParen, RParen, Comma, SeqArrow, End
};

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { tokenize(); }

  const std::vector<Token>& tokens() const { return toks_; }

 private:
  std::string_view src_;
  std::size_t i_ = 0;
  std::size_t line_ = 1, col_ = 1;
  std::vector<Token> toks_;

  SourcePos here() const { return SourcePos{i_, line_, col_}; }

  bool starts_with(std::string_view s) const { return src_.substr(i_).substr(0, s.size()) == s; }

  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n && i_ < src_.size(); ++k, ++i_) {
      if (src_[i_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  void push(Tok t, std::string text, SourcePos p) { toks_.push_back(Token{t, std::move(text), p}); }

  void tokenize() {
    while (i_ < src_.size()) {
      char c = src_[i_];
      SourcePos p = here();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance(1);
        continue;
      }
      // multi-char ASCII tokens first
      if (starts_with("_|_")) { push(Tok::Bot, "_|_", p); advance(3); continue; }
      if (starts_with("->")) { push(Tok::Imp, "->", p); advance(2); continue; }
      if (starts_with("=>")) { push(Tok::SeqArrow, "=>", p); advance(2); continue; }
      if (starts_with("[]")) { push(Tok::BoxOp, "[]", p); advance(2); continue; }
      // UTF-8 aliases
      if (starts_with("⊥")) { push(Tok::Bot, "_|_", p); advance(3); continue; }      // ⊥
      if (starts_with("□")) { push(Tok::BoxOp, "[]", p); advance(3); continue; }     // □
      if (starts_with("¬")) { push(Tok::Not, "~", p); advance(2); continue; }        // ¬
      if (starts_with("∧")) { push(Tok::And, "&", p); advance(3); continue; }        // ∧
      if (starts_with("∨")) { push(Tok::Or, "|", p); advance(3); continue; }         // ∨
      if (starts_with("→")) { push(Tok::Imp, "->", p); advance(3); continue; }       // →
      if (starts_with("⇒")) { push(Tok::SeqArrow, "=>", p); advance(3); continue; }  // ⇒
      if (starts_with("·")) { push(Tok::Star, "*", p); advance(2); continue; }       // ·
      switch (c) {
        case '&': push(Tok::And, "&", p); advance(1); continue;
        case '|': push(Tok::Or, "|", p); advance(1); continue;
        case '~': push(Tok::Not, "~", p); advance(1); continue;
        case 'K': push(Tok::KnowOp, "K", p); advance(1); continue;
        case 'V': push(Tok::VerOp, "V", p); advance(1); continue;
        case ':': push(Tok::Colon, ":", p); advance(1); continue;
        case '*': push(Tok::Star, "*", p); advance(1); continue;
        case '+': push(Tok::Plus, "+", p); advance(1); continue;
        case '!': push(Tok::Bang, "!", p); advance(1); continue;
        case '(': push(Tok::LParen, "(", p); advance(1); continue;
        case ')': push(Tok::RParen, ")", p); advance(1); continue;
        case ',': push(Tok::Comma, ",", p); advance(1); continue;
        default: break;
      }
      if (c >= 'a' && c <= 'z') {
        std::size_t j = i_ + 1;
        while (j < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
          ++j;
        std::string name(src_.substr(i_, j - i_));
        push(Tok::Ident, std::move(name), p);
        advance(j - i_);
        continue;
      }
      throw ParseError(std::string("unexpected character '") + c + "'", p);
    }
    toks_.push_back(Token{Tok::End, "", here()});
  }
};

class Parser {
 public:
  Parser(std::string_view src, const ParseOptions& opts) : lex_(src), opts_(opts) {}

  Formula formula_then_end() {
    Formula f = parse_formula();
    expect(Tok::End, "end of input");
    return f;
  }

  ProofTerm term_then_end() {
    ProofTerm t = parse_term();
    expect(Tok::End, "end of input");
    return t;
  }

  std::pair<std::vector<Formula>, std::vector<Formula>> sequent_then_end() {
    std::vector<Formula> ant, succ;
    if (peek().kind != Tok::SeqArrow) ant = formula_list();
    expect(Tok::SeqArrow, "'=>'");
    if (peek().kind != Tok::End) succ = formula_list();
    expect(Tok::End, "end of input");
    return {std::move(ant), std::move(succ)};
  }

 private:
  Lexer lex_;
  const ParseOptions& opts_;
  std::size_t pos_ = 0;

  const Token& peek() const { return lex_.tokens()[pos_]; }
  const Token& next() { return lex_.tokens()[pos_++]; }
  void expect(Tok t, const std::string& what) {
    if (peek().kind != t)
      throw ParseError("expected " + what + ", found '" + describe(peek()) + "'", peek().pos);
    ++pos_;
  }
  static std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : t.text; }

  std::vector<Formula> formula_list() {
    std::vector<Formula> out;
    out.push_back(parse_formula());
    while (peek().kind == Tok::Comma) {
      next();
      out.push_back(parse_formula());
    }
    return out;
  }

  Formula parse_formula() {  // ->, right-associative
    Formula l = parse_or();
    if (peek().kind == Tok::Imp) {
      next();
      return Formula::implies(std::move(l), parse_formula());
    }
    return l;
  }

  Formula parse_or() {
    Formula l = parse_and();
    while (peek().kind == Tok::Or) {
      next();
      l = Formula::lor(std::move(l), parse_and());
    }
    return l;
  }

  Formula parse_and() {
    Formula l = parse_unary();
    while (peek().kind == Tok::And) {
      next();
      l = Formula::land(std::move(l), parse_unary());
    }
    return l;
  }

  Formula parse_unary() {
    switch (peek().kind) {
      case Tok::Not: next(); return Formula::neg(parse_unary());
      case Tok::KnowOp: next(); return Formula::know(parse_unary());
      case Tok::BoxOp: next(); return Formula::box(parse_unary());
      case Tok::VerOp: next(); return Formula::ver(parse_unary());
      case Tok::Bot: next(); return Formula::bottom();
      default: break;
    }
    // A leading identifier, '!' or '(' may open a proof term ("t:A") or a
    // plain formula; parse a term speculatively and fall back when no ':'
    // follows a bare identifier.
    if (peek().kind == Tok::Ident || peek().kind == Tok::Bang || peek().kind == Tok::LParen) {
      std::size_t save = pos_;
      std::optional<ProofTerm> t;
      try {
        t = parse_term();
      } catch (const ParseError&) {
        t.reset();
      }
      if (t && peek().kind == Tok::Colon) {
        next();
        return Formula::evid(std::move(*t), parse_unary());
      }
      if (t && !t->is_leaf())
        throw ParseError("expected ':' after proof term, found '" + describe(peek()) + "'",
                         peek().pos);
      pos_ = save;
    }
    if (peek().kind == Tok::Ident) return Formula::atom(next().text);
    if (peek().kind == Tok::LParen) {
      next();
      Formula f = parse_formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    throw ParseError("expected a formula, found '" + describe(peek()) + "'", peek().pos);
  }

  ProofTerm parse_term() {  // +, left-associative
    ProofTerm l = parse_term_app();
    while (peek().kind == Tok::Plus) {
      next();
      l = ProofTerm::plus(std::move(l), parse_term_app());
    }
    return l;
  }

  ProofTerm parse_term_app() {  // *, left-associative
    ProofTerm l = parse_term_unary();
    while (peek().kind == Tok::Star) {
      next();
      l = ProofTerm::app(std::move(l), parse_term_unary());
    }
    return l;
  }

  ProofTerm parse_term_unary() {
    if (peek().kind == Tok::Bang) {
      next();
      return ProofTerm::bang(parse_term_unary());
    }
    if (peek().kind == Tok::Ident) {
      std::string name = next().text;
      return opts_.is_variable(name) ? ProofTerm::var(name) : ProofTerm::constant(name);
    }
    if (peek().kind == Tok::LParen) {
      next();
      ProofTerm t = parse_term();
      expect(Tok::RParen, "')'");
      return t;
    }
    throw ParseError("expected a proof term, found '" + describe(peek()) + "'", peek().pos);
  }
};

}  // namespace detail

// Parse a formula of the given object language. Rejects both syntax errors
// (with source position) and constructors foreign to the language.
inline Formula parse(std::string_view text, Language lang, const ParseOptions& opts = {}) {
  detail::Parser p(text, opts);
  Formula f = p.formula_then_end();
  require_language(f, lang, "parse");
  return f;
}

// Parse a formula of any of the three languages (no membership check).
inline Formula parse_any(std::string_view text, const ParseOptions& opts = {}) {
  detail::Parser p(text, opts);
  return p.formula_then_end();
}

inline ProofTerm parse_term(std::string_view text, const ParseOptions& opts = {}) {
  detail::Parser p(text, opts);
  return p.term_then_end();
}

// "A1, A2 => B1, B2"; either side may be empty.
inline std::pair<std::vector<Formula>, std::vector<Formula>> parse_sequent_parts(
    std::string_view text, const ParseOptions& opts = {}) {
  detail::Parser p(text, opts);
  return p.sequent_then_end();
}

}  // namespace ielkit
