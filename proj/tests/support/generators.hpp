#pragma once

#include <random>
#include <string>
#include <vector>

#include "ielkit/formula.hpp"

namespace test_support {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline bool chance(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline ielkit::ProofTerm gen_term(Rng& rng, int depth) {
  using ielkit::ProofTerm;
  static const char* vars[] = {"x", "y", "z"};
  static const char* consts[] = {"a", "b", "c"};
  if (depth <= 0 || chance(rng, 0.4)) {
    return chance(rng, 0.5) ? ProofTerm::var(vars[pick(rng, 3)])
                            : ProofTerm::constant(consts[pick(rng, 3)]);
  }
  switch (pick(rng, 3)) {
    case 0: return ProofTerm::app(gen_term(rng, depth - 1), gen_term(rng, depth - 1));
    case 1: return ProofTerm::plus(gen_term(rng, depth - 1), gen_term(rng, depth - 1));
    default: return ProofTerm::bang(gen_term(rng, depth - 1));
  }
}

inline ielkit::Formula gen_formula(Rng& rng, ielkit::Language lang, int depth) {
  using ielkit::Formula;
  using ielkit::Language;
  static const char* atoms[] = {"p", "q", "r"};
  if (depth <= 0 || chance(rng, 0.25)) {
    return chance(rng, 0.15) ? Formula::bottom() : Formula::atom(atoms[pick(rng, 3)]);
  }
  // connective menu depends on the language
  std::vector<int> menu = {0, 1, 2, 3};  // and, or, implies, neg
  if (lang == Language::Iel) menu.push_back(4);                      // K
  if (lang == Language::Modal) menu.insert(menu.end(), {5, 6});      // [], V
  if (lang == Language::Explicit) menu.insert(menu.end(), {6, 7});   // V, t:A
  switch (menu[pick(rng, menu.size())]) {
    case 0: return Formula::land(gen_formula(rng, lang, depth - 1), gen_formula(rng, lang, depth - 1));
    case 1: return Formula::lor(gen_formula(rng, lang, depth - 1), gen_formula(rng, lang, depth - 1));
    case 2: return Formula::implies(gen_formula(rng, lang, depth - 1), gen_formula(rng, lang, depth - 1));
    case 3: return Formula::neg(gen_formula(rng, lang, depth - 1));
    case 4: return Formula::know(gen_formula(rng, lang, depth - 1));
    case 5: return Formula::box(gen_formula(rng, lang, depth - 1));
    case 6: return Formula::ver(gen_formula(rng, lang, depth - 1));
    default: return Formula::evid(gen_term(rng, 2), gen_formula(rng, lang, depth - 1));
  }
}

}  // namespace test_support
