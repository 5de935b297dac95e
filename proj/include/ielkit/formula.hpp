#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ielkit/errors.hpp"

namespace ielkit {

namespace detail {
inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Proof terms: x | c | t*s | t+s | !t
// Immutable shared trees; cheap to copy, safe to share across threads.
// ---------------------------------------------------------------------------

enum class TermKind : std::uint8_t { Var, Const, App, Plus, Bang };

class ProofTerm {
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    TermKind kind;
    std::string name;
    NodePtr left, right;
    std::size_t hash;
  };

 public:
  ProofTerm() = default;

  static ProofTerm var(std::string name) { return make(TermKind::Var, std::move(name), nullptr, nullptr); }
  static ProofTerm constant(std::string name) { return make(TermKind::Const, std::move(name), nullptr, nullptr); }
  static ProofTerm app(const ProofTerm& l, const ProofTerm& r) { return make(TermKind::App, "", l.node_, r.node_); }
  static ProofTerm plus(const ProofTerm& l, const ProofTerm& r) { return make(TermKind::Plus, "", l.node_, r.node_); }
  static ProofTerm bang(const ProofTerm& t) { return make(TermKind::Bang, "", t.node_, nullptr); }

  bool empty() const { return node_ == nullptr; }
  explicit operator bool() const { return node_ != nullptr; }

  TermKind kind() const { return node()->kind; }
  const std::string& name() const { return node()->name; }
  ProofTerm left() const { return ProofTerm(node()->left); }
  ProofTerm right() const { return ProofTerm(node()->right); }
  std::size_t hash() const { return node_ ? node_->hash : 0; }

  bool is_leaf() const { return kind() == TermKind::Var || kind() == TermKind::Const; }

  // A term is ground iff it contains no proof variable.
  bool is_ground() const {
    if (empty()) return true;
    switch (kind()) {
      case TermKind::Var: return false;
      case TermKind::Const: return true;
      case TermKind::Bang: return left().is_ground();
      default: return left().is_ground() && right().is_ground();
    }
  }

  bool contains_var(const std::string& v) const {
    if (empty()) return false;
    switch (kind()) {
      case TermKind::Var: return name() == v;
      case TermKind::Const: return false;
      case TermKind::Bang: return left().contains_var(v);
      default: return left().contains_var(v) || right().contains_var(v);
    }
  }

  void collect_names(std::set<std::string>& vars, std::set<std::string>& consts) const {
    if (empty()) return;
    switch (kind()) {
      case TermKind::Var: vars.insert(name()); return;
      case TermKind::Const: consts.insert(name()); return;
      case TermKind::Bang: left().collect_names(vars, consts); return;
      default:
        left().collect_names(vars, consts);
        right().collect_names(vars, consts);
        return;
    }
  }

  ProofTerm substitute_var(const std::string& v, const ProofTerm& by) const {
    if (empty()) return *this;
    switch (kind()) {
      case TermKind::Var: return name() == v ? by : *this;
      case TermKind::Const: return *this;
      case TermKind::Bang: {
        ProofTerm l = left().substitute_var(v, by);
        return l == left() ? *this : bang(l);
      }
      default: {
        ProofTerm l = left().substitute_var(v, by);
        ProofTerm r = right().substitute_var(v, by);
        if (l == left() && r == right()) return *this;
        return make(kind(), "", l.node_, r.node_);
      }
    }
  }

  friend bool operator==(const ProofTerm& a, const ProofTerm& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind) return false;
    switch (a.node_->kind) {
      case TermKind::Var:
      case TermKind::Const: return a.node_->name == b.node_->name;
      case TermKind::Bang: return a.left() == b.left();
      default: return a.left() == b.left() && a.right() == b.right();
    }
  }
  friend bool operator!=(const ProofTerm& a, const ProofTerm& b) { return !(a == b); }

  // Arbitrary but fixed total order (used for canonical multiset handling).
  int compare(const ProofTerm& b) const {
    const ProofTerm& a = *this;
    if (a.node_ == b.node_) return 0;
    if (!a.node_) return -1;
    if (!b.node_) return 1;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
      case TermKind::Var:
      case TermKind::Const: return a.name().compare(b.name());
      case TermKind::Bang: return a.left().compare(b.left());
      default: {
        int c = a.left().compare(b.left());
        return c != 0 ? c : a.right().compare(b.right());
      }
    }
  }
  friend bool operator<(const ProofTerm& a, const ProofTerm& b) { return a.compare(b) < 0; }

 private:
  NodePtr node_;

  explicit ProofTerm(NodePtr n) : node_(std::move(n)) {}

  const Node* node() const {
    if (!node_) throw std::logic_error("empty ProofTerm");
    return node_.get();
  }

  static ProofTerm make(TermKind k, std::string name, NodePtr l, NodePtr r) {
    std::size_t h = static_cast<std::size_t>(k) + 0x51;
    h = detail::hash_combine(h, std::hash<std::string>{}(name));
    h = detail::hash_combine(h, l ? l->hash : 0);
    h = detail::hash_combine(h, r ? r->hash : 0);
    return ProofTerm(std::make_shared<Node>(Node{k, std::move(name), std::move(l), std::move(r), h}));
  }
};

// ---------------------------------------------------------------------------
// Formulas. One syntax tree covers all three object languages:
//   IEL:       atoms, _|_, &, |, ->, K
//   modal:     atoms, _|_, &, |, ->, [], V
//   explicit:  atoms, _|_, &, |, ->, V, t:A
// ~A is not a constructor; it abbreviates A -> _|_.
// ---------------------------------------------------------------------------

enum class Kind : std::uint8_t { Atom, Bottom, And, Or, Implies, Know, Box, Ver, Evid };

inline bool is_binary(Kind k) { return k == Kind::And || k == Kind::Or || k == Kind::Implies; }
inline bool is_unary(Kind k) { return k == Kind::Know || k == Kind::Box || k == Kind::Ver || k == Kind::Evid; }

// Path of child indices from the root of a formula. Binary nodes have
// children 0 and 1; Know/Box/Ver and the body of t:A are child 0.
using Position = std::vector<unsigned>;

inline std::string position_to_string(const Position& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

enum class Polarity : std::uint8_t { Positive, Negative };

inline Polarity flip(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

class Formula {
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    Kind kind;
    std::string name;  // Atom
    ProofTerm term;    // Evid
    NodePtr left, right;
    std::size_t hash;
  };

 public:
  Formula() = default;

  static Formula atom(std::string name) { return make(Kind::Atom, std::move(name), {}, nullptr, nullptr); }
  static Formula bottom() { return make(Kind::Bottom, "", {}, nullptr, nullptr); }
  static Formula land(const Formula& l, const Formula& r) { return make(Kind::And, "", {}, l.node_, r.node_); }
  static Formula lor(const Formula& l, const Formula& r) { return make(Kind::Or, "", {}, l.node_, r.node_); }
  static Formula implies(const Formula& l, const Formula& r) { return make(Kind::Implies, "", {}, l.node_, r.node_); }
  static Formula know(const Formula& b) { return make(Kind::Know, "", {}, b.node_, nullptr); }
  static Formula box(const Formula& b) { return make(Kind::Box, "", {}, b.node_, nullptr); }
  static Formula ver(const Formula& b) { return make(Kind::Ver, "", {}, b.node_, nullptr); }
  static Formula evid(const ProofTerm& t, const Formula& b) { return make(Kind::Evid, "", t, b.node_, nullptr); }
  // ~A := A -> _|_
  static Formula neg(const Formula& a) { return implies(a, bottom()); }

  bool empty() const { return node_ == nullptr; }
  explicit operator bool() const { return node_ != nullptr; }

  Kind kind() const { return node()->kind; }
  const std::string& atom_name() const { return node()->name; }
  const ProofTerm& term() const { return node()->term; }
  Formula left() const { return Formula(node()->left); }   // also: unary body
  Formula right() const { return Formula(node()->right); }
  Formula body() const { return Formula(node()->left); }
  std::size_t hash() const { return node_ ? node_->hash : 0; }

  bool is_neg() const { return kind() == Kind::Implies && right().kind() == Kind::Bottom; }

  unsigned child_count() const {
    switch (kind()) {
      case Kind::Atom:
      case Kind::Bottom: return 0;
      case Kind::And:
      case Kind::Or:
      case Kind::Implies: return 2;
      default: return 1;  // Know, Box, Ver, Evid (the term is not a formula child)
    }
  }

  Formula child(unsigned i) const {
    if (i >= child_count()) throw PositionError("child index out of range");
    return i == 0 ? left() : right();
  }

  Formula at(const Position& pos) const {
    Formula f = *this;
    for (unsigned i : pos) {
      if (f.empty() || i >= f.child_count())
        throw PositionError("position " + position_to_string(pos) + " does not address a node");
      f = f.child(i);
    }
    if (f.empty()) throw PositionError("position addresses an empty formula");
    return f;
  }

  bool valid_position(const Position& pos) const {
    Formula f = *this;
    for (unsigned i : pos) {
      if (f.empty() || i >= f.child_count()) return false;
      f = f.child(i);
    }
    return !f.empty();
  }

  // Replace the subformula at pos (used by translation-trace replay).
  Formula with_subformula(const Position& pos, const Formula& sub, std::size_t idx = 0) const {
    if (idx == pos.size()) return sub;
    unsigned i = pos[idx];
    if (i >= child_count()) throw PositionError("position does not address a node");
    Formula repl = child(i).with_subformula(pos, sub, idx + 1);
    Formula l = i == 0 ? repl : left();
    Formula r = child_count() == 2 ? (i == 1 ? repl : right()) : Formula();
    switch (kind()) {
      case Kind::And: return land(l, r);
      case Kind::Or: return lor(l, r);
      case Kind::Implies: return implies(l, r);
      case Kind::Know: return know(l);
      case Kind::Box: return box(l);
      case Kind::Ver: return ver(l);
      case Kind::Evid: return evid(term(), l);
      default: throw PositionError("position does not address a node");
    }
  }

  bool contains_kind(Kind k) const {
    if (empty()) return false;
    if (kind() == k) return true;
    for (unsigned i = 0; i < child_count(); ++i)
      if (child(i).contains_kind(k)) return true;
    return false;
  }

  // All positions whose node has the given constructor, in preorder.
  std::vector<Position> positions_of(Kind k) const {
    std::vector<Position> out;
    Position cur;
    collect_positions(k, cur, out);
    return out;
  }

  void collect_term_names(std::set<std::string>& vars, std::set<std::string>& consts) const {
    if (empty()) return;
    if (kind() == Kind::Evid) term().collect_names(vars, consts);
    for (unsigned i = 0; i < child_count(); ++i) child(i).collect_term_names(vars, consts);
  }

  bool contains_term_var(const std::string& v) const {
    if (empty()) return false;
    if (kind() == Kind::Evid && term().contains_var(v)) return true;
    for (unsigned i = 0; i < child_count(); ++i)
      if (child(i).contains_term_var(v)) return true;
    return false;
  }

  // Substitute a proof variable by a term in every evidence term of the formula.
  Formula substitute_term_var(const std::string& v, const ProofTerm& by) const {
    if (empty() || !contains_term_var(v)) return *this;
    switch (kind()) {
      case Kind::And: return land(left().substitute_term_var(v, by), right().substitute_term_var(v, by));
      case Kind::Or: return lor(left().substitute_term_var(v, by), right().substitute_term_var(v, by));
      case Kind::Implies:
        return implies(left().substitute_term_var(v, by), right().substitute_term_var(v, by));
      case Kind::Know: return know(body().substitute_term_var(v, by));
      case Kind::Box: return box(body().substitute_term_var(v, by));
      case Kind::Ver: return ver(body().substitute_term_var(v, by));
      case Kind::Evid: return evid(term().substitute_var(v, by), body().substitute_term_var(v, by));
      default: return *this;
    }
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind) return false;
    switch (a.node_->kind) {
      case Kind::Atom: return a.node_->name == b.node_->name;
      case Kind::Bottom: return true;
      case Kind::Evid: return a.term() == b.term() && a.body() == b.body();
      case Kind::Know:
      case Kind::Box:
      case Kind::Ver: return a.body() == b.body();
      default: return a.left() == b.left() && a.right() == b.right();
    }
  }
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  int compare(const Formula& b) const {
    const Formula& a = *this;
    if (a.node_ == b.node_) return 0;
    if (!a.node_) return -1;
    if (!b.node_) return 1;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
      case Kind::Atom: return a.atom_name().compare(b.atom_name());
      case Kind::Bottom: return 0;
      case Kind::Evid: {
        int c = a.term().compare(b.term());
        return c != 0 ? c : a.body().compare(b.body());
      }
      case Kind::Know:
      case Kind::Box:
      case Kind::Ver: return a.body().compare(b.body());
      default: {
        int c = a.left().compare(b.left());
        return c != 0 ? c : a.right().compare(b.right());
      }
    }
  }
  friend bool operator<(const Formula& a, const Formula& b) { return a.compare(b) < 0; }

 private:
  NodePtr node_;

  explicit Formula(NodePtr n) : node_(std::move(n)) {}

  const Node* node() const {
    if (!node_) throw std::logic_error("empty Formula");
    return node_.get();
  }

  static Formula make(Kind k, std::string name, ProofTerm t, NodePtr l, NodePtr r) {
    std::size_t h = static_cast<std::size_t>(k) + 0x97;
    h = detail::hash_combine(h, std::hash<std::string>{}(name));
    h = detail::hash_combine(h, t.hash());
    h = detail::hash_combine(h, l ? l->hash : 0);
    h = detail::hash_combine(h, r ? r->hash : 0);
    return Formula(
        std::make_shared<Node>(Node{k, std::move(name), std::move(t), std::move(l), std::move(r), h}));
  }

  void collect_positions(Kind k, Position& cur, std::vector<Position>& out) const {
    if (empty()) return;
    if (kind() == k) out.push_back(cur);
    for (unsigned i = 0; i < child_count(); ++i) {
      cur.push_back(i);
      child(i).collect_positions(k, cur, out);
      cur.pop_back();
    }
  }
};

// ---------------------------------------------------------------------------
// Object languages and membership
// ---------------------------------------------------------------------------

enum class Language : std::uint8_t { Iel, Modal, Explicit };

inline const char* language_name(Language l) {
  switch (l) {
    case Language::Iel: return "iel";
    case Language::Modal: return "modal";
    default: return "explicit";
  }
}

inline bool language_allows(Language l, Kind k) {
  switch (k) {
    case Kind::Know: return l == Language::Iel;
    case Kind::Box: return l == Language::Modal;
    case Kind::Ver: return l == Language::Modal || l == Language::Explicit;
    case Kind::Evid: return l == Language::Explicit;
    default: return true;
  }
}

// First (preorder) position whose constructor is foreign to the language.
inline std::optional<Position> language_violation(const Formula& f, Language l) {
  struct Walk {
    Language lang;
    std::optional<Position> found;
    void go(const Formula& g, Position& cur) {
      if (found || g.empty()) return;
      if (!language_allows(lang, g.kind())) {
        found = cur;
        return;
      }
      for (unsigned i = 0; i < g.child_count() && !found; ++i) {
        cur.push_back(i);
        go(g.child(i), cur);
        cur.pop_back();
      }
    }
  } w{l, std::nullopt};
  Position cur;
  w.go(f, cur);
  return w.found;
}

inline bool in_language(const Formula& f, Language l) { return !language_violation(f, l).has_value(); }

inline void require_language(const Formula& f, Language l, const std::string& what) {
  if (auto p = language_violation(f, l)) {
    throw LanguageError(what + ": constructor at " + position_to_string(*p) +
                        " is not in the " + language_name(l) + " language");
  }
}

// ---------------------------------------------------------------------------
// Polarity: flips exactly at the left of an implication (the root context,
// and hence every other constructor, preserves it).
// ---------------------------------------------------------------------------

inline Polarity polarity_of(const Formula& f, const Position& pos) {
  Formula cur = f;
  Polarity p = Polarity::Positive;
  for (unsigned i : pos) {
    if (cur.empty() || i >= cur.child_count())
      throw PositionError("position " + position_to_string(pos) + " does not address a node");
    if (cur.kind() == Kind::Implies && i == 0) p = flip(p);
    cur = cur.child(i);
  }
  if (cur.empty()) throw PositionError("position addresses an empty formula");
  return p;
}

}  // namespace ielkit

template <>
struct std::hash<ielkit::Formula> {
  std::size_t operator()(const ielkit::Formula& f) const noexcept { return f.hash(); }
};
template <>
struct std::hash<ielkit::ProofTerm> {
  std::size_t operator()(const ielkit::ProofTerm& t) const noexcept { return t.hash(); }
};
