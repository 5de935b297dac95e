#pragma once

#include <string>

#include "ielkit/formula.hpp"

namespace ielkit {

struct PrintOptions {
  bool neg_abbrev = true;  // render A -> _|_ as ~A
  bool unicode = false;    // unicode connectives instead of ASCII aliases
};

namespace detail {

// Precedence levels: -> is 1 (right-assoc), | is 2, & is 3, prefix/":" is 4,
// atoms are 5. A child is parenthesized when its level is below the context.
inline int formula_level(const Formula& f, const PrintOptions& o) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bottom: return 5;
    case Kind::Implies: return (o.neg_abbrev && f.is_neg()) ? 4 : 1;
    case Kind::Or: return 2;
    case Kind::And: return 3;
    default: return 4;
  }
}

inline int term_level(const ProofTerm& t) {
  switch (t.kind()) {
    case TermKind::Plus: return 1;
    case TermKind::App: return 2;
    case TermKind::Bang: return 3;
    default: return 4;
  }
}

// "K p", "K (p -> q)", "V _|_" get a space; "V[]p", "K~p" fuse cleanly.
inline std::string letter_prefix(const char* op, const std::string& body) {
  char c = body.empty() ? ' ' : body[0];
  bool space = (c >= 'a' && c <= 'z') || c == '_' || c == '(';
  return std::string(op) + (space ? " " : "") + body;
}

inline std::string print_term_at(const ProofTerm& t, int min_level) {
  std::string s;
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Const: s = t.name(); break;
    case TermKind::Bang: s = "!" + print_term_at(t.left(), 3); break;
    case TermKind::App: s = print_term_at(t.left(), 2) + " * " + print_term_at(t.right(), 3); break;
    case TermKind::Plus: s = print_term_at(t.left(), 1) + " + " + print_term_at(t.right(), 2); break;
  }
  return term_level(t) < min_level ? "(" + s + ")" : s;
}

inline std::string print_at(const Formula& f, int min_level, const PrintOptions& o) {
  std::string s;
  switch (f.kind()) {
    case Kind::Atom: s = f.atom_name(); break;
    case Kind::Bottom: s = o.unicode ? "⊥" : "_|_"; break;
    case Kind::And:
      s = print_at(f.left(), 3, o) + (o.unicode ? " ∧ " : " & ") + print_at(f.right(), 4, o);
      break;
    case Kind::Or:
      s = print_at(f.left(), 2, o) + (o.unicode ? " ∨ " : " | ") + print_at(f.right(), 3, o);
      break;
    case Kind::Implies:
      if (o.neg_abbrev && f.is_neg()) {
        s = (o.unicode ? "¬" : "~") + print_at(f.left(), 4, o);
      } else {
        s = print_at(f.left(), 2, o) + (o.unicode ? " → " : " -> ") + print_at(f.right(), 1, o);
      }
      break;
    case Kind::Know: {
      std::string b = print_at(f.body(), 4, o);
      s = letter_prefix("K", b);
      break;
    }
    case Kind::Ver: {
      std::string b = print_at(f.body(), 4, o);
      s = letter_prefix("V", b);
      break;
    }
    case Kind::Box: s = (o.unicode ? "□" : "[]") + print_at(f.body(), 4, o); break;
    case Kind::Evid: {
      std::string t = print_term_at(f.term(), 3);  // parenthesize + and *
      s = t + ":" + print_at(f.body(), 4, o);
      break;
    }
  }
  return formula_level(f, o) < min_level ? "(" + s + ")" : s;
}

}  // namespace detail

// Minimal-parentheses rendering; parse(print(f), lang(f)) == f.
inline std::string print(const Formula& f, const PrintOptions& o = {}) {
  return detail::print_at(f, 0, o);
}

inline std::string print(const ProofTerm& t) { return detail::print_term_at(t, 0); }

}  // namespace ielkit
