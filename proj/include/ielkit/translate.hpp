#pragma once

#include <string>
#include <vector>

#include "ielkit/errors.hpp"
#include "ielkit/formula.hpp"

namespace ielkit {

// ---------------------------------------------------------------------------
// Goedel translation tr: box every sub-formula.
//
//   tr(p)      = []p            tr(_|_)    = []_|_
//   tr(A o B)  = [](tr A o tr B)   for o in {&, |, ->}
//   tr(~A)     = [](tr A -> _|_)   (dedicated clause; see the ~K_|_ anchor)
//   tr(K A)    = []V tr(A)
//
// The ~ clause keeps the consequent _|_ bare, which reproduces the known
// translation of ~K_|_ as []~[]V[]_|_ and is S4-equivalent to boxing it.
// ---------------------------------------------------------------------------

enum class TrClause : std::uint8_t { Atom, Bottom, And, Or, Implies, Neg, Know };

inline const char* tr_clause_name(TrClause c) {
  switch (c) {
    case TrClause::Atom: return "atom";
    case TrClause::Bottom: return "bottom";
    case TrClause::And: return "and";
    case TrClause::Or: return "or";
    case TrClause::Implies: return "implies";
    case TrClause::Neg: return "neg";
    default: return "know";
  }
}

struct TranslationStep {
  Position source;   // node in the source formula
  TrClause clause;   // which tr clause fired there
  Position box;      // position of the [] this clause introduced in the result
};

struct TranslationTrace {
  Formula source;
  Formula result;
  std::vector<TranslationStep> steps;
};

namespace detail {

inline Formula godel_tr_rec(const Formula& f, Position& src, Position& dst,
                            std::vector<TranslationStep>* steps) {
  if (steps) steps->push_back(TranslationStep{src, TrClause::Atom, dst});
  TranslationStep* step = steps ? &steps->back() : nullptr;
  auto descend = [&](const Formula& g, unsigned src_child, unsigned dst_extra) {
    // every clause wraps its result in one box, so child results live below
    // dst + [0, ...].
    src.push_back(src_child);
    dst.push_back(0);
    for (unsigned k = 0; k < dst_extra; ++k) dst.push_back(0);
    dst.push_back(src_child);
    Formula r = godel_tr_rec(g, src, dst, steps);
    dst.pop_back();
    for (unsigned k = 0; k < dst_extra; ++k) dst.pop_back();
    dst.pop_back();
    src.pop_back();
    return r;
  };
  switch (f.kind()) {
    case Kind::Atom:
      if (step) step->clause = TrClause::Atom;
      return Formula::box(f);
    case Kind::Bottom:
      if (step) step->clause = TrClause::Bottom;
      return Formula::box(f);
    case Kind::And:
      if (step) step->clause = TrClause::And;
      return Formula::box(Formula::land(descend(f.left(), 0, 0), descend(f.right(), 1, 0)));
    case Kind::Or:
      if (step) step->clause = TrClause::Or;
      return Formula::box(Formula::lor(descend(f.left(), 0, 0), descend(f.right(), 1, 0)));
    case Kind::Implies:
      if (f.is_neg()) {
        if (step) step->clause = TrClause::Neg;
        return Formula::box(Formula::neg(descend(f.left(), 0, 0)));
      }
      if (step) step->clause = TrClause::Implies;
      return Formula::box(Formula::implies(descend(f.left(), 0, 0), descend(f.right(), 1, 0)));
    case Kind::Know: {
      if (step) step->clause = TrClause::Know;
      // []V tr(A): the child sits at dst + [0 (under box), 0 (under V)].
      src.push_back(0);
      dst.push_back(0);
      dst.push_back(0);
      Formula body = godel_tr_rec(f.body(), src, dst, steps);
      dst.pop_back();
      dst.pop_back();
      src.pop_back();
      return Formula::box(Formula::ver(std::move(body)));
    }
    default:
      throw LanguageError("godel_tr: input is not an IEL formula");
  }
}

}  // namespace detail

inline Formula godel_tr(const Formula& f) {
  require_language(f, Language::Iel, "godel_tr");
  Position src, dst;
  return detail::godel_tr_rec(f, src, dst, nullptr);
}

inline TranslationTrace godel_tr_traced(const Formula& f) {
  require_language(f, Language::Iel, "godel_tr");
  TranslationTrace t;
  t.source = f;
  Position src, dst;
  t.result = detail::godel_tr_rec(f, src, dst, &t.steps);
  return t;
}

// Re-run the logged clauses against the trace's source; returns the rebuilt
// result so tests can confirm the log determines the translation.
inline Formula replay(const TranslationTrace& t) {
  Formula out;
  for (const TranslationStep& s : t.steps) {
    const Formula& src = t.source.at(s.source);
    Formula piece;
    switch (s.clause) {
      case TrClause::Atom:
      case TrClause::Bottom: piece = Formula::box(src); break;
      case TrClause::And: piece = Formula::box(Formula::land(Formula::atom("?"), Formula::atom("?"))); break;
      case TrClause::Or: piece = Formula::box(Formula::lor(Formula::atom("?"), Formula::atom("?"))); break;
      case TrClause::Implies: piece = Formula::box(Formula::implies(Formula::atom("?"), Formula::atom("?"))); break;
      case TrClause::Neg: piece = Formula::box(Formula::neg(Formula::atom("?"))); break;
      case TrClause::Know: piece = Formula::box(Formula::ver(Formula::atom("?"))); break;
    }
    out = out.empty() ? piece : out.with_subformula(s.box, piece);
  }
  // placeholders are overwritten by later steps except at the leaves, where
  // the clause already embeds the source subformula.
  return out;
}

// ---------------------------------------------------------------------------
// Forgetful projection: replace each proof term with a [].
// ---------------------------------------------------------------------------

inline Formula forgetful_projection_unchecked(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bottom: return f;
    case Kind::And:
      return Formula::land(forgetful_projection_unchecked(f.left()),
                           forgetful_projection_unchecked(f.right()));
    case Kind::Or:
      return Formula::lor(forgetful_projection_unchecked(f.left()),
                          forgetful_projection_unchecked(f.right()));
    case Kind::Implies:
      return Formula::implies(forgetful_projection_unchecked(f.left()),
                              forgetful_projection_unchecked(f.right()));
    case Kind::Ver: return Formula::ver(forgetful_projection_unchecked(f.body()));
    case Kind::Evid: return Formula::box(forgetful_projection_unchecked(f.body()));
    default:
      throw LanguageError("forgetful_projection: input is not an explicit formula");
  }
}

inline Formula forgetful_projection(const Formula& f) {
  require_language(f, Language::Explicit, "forgetful_projection");
  return forgetful_projection_unchecked(f);
}

}  // namespace ielkit
