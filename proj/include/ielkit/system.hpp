#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ielkit/errors.hpp"
#include "ielkit/formula.hpp"
#include "ielkit/print.hpp"

namespace ielkit {

// ---------------------------------------------------------------------------
// Hilbert systems.
//
//   IEL-   intuitionistic: pc*, ie1 (K distribution), ie2 (co-reflection)
//   IEL    IEL- plus ie3 (K A -> ~~A) and ie3b (~K _|_); the two are
//          interderivable and both are installed as schemas
//   S4V-   classical: pc*, s4k/s4t/s44, a1 (V distribution), a2 ([]A -> V A)
//   S4V    S4V- plus a3 (~[]V_|_)
//   LP     classical: pc*, e1..e4
//   LPV-   LP plus e5 (V distribution), e6 (t:A -> V A)
//   LPV    LPV- plus e7 (~t:V_|_)
// ---------------------------------------------------------------------------

enum class SystemId : std::uint8_t { IELminus, IEL, S4Vminus, S4V, LP, LPVminus, LPV };

inline const char* system_name(SystemId s) {
  switch (s) {
    case SystemId::IELminus: return "iel-";
    case SystemId::IEL: return "iel";
    case SystemId::S4Vminus: return "s4v-";
    case SystemId::S4V: return "s4v";
    case SystemId::LP: return "lp";
    case SystemId::LPVminus: return "lpv-";
    default: return "lpv";
  }
}

inline std::optional<SystemId> system_from_name(const std::string& n) {
  if (n == "iel-" || n == "ielminus") return SystemId::IELminus;
  if (n == "iel") return SystemId::IEL;
  if (n == "s4v-" || n == "s4vminus") return SystemId::S4Vminus;
  if (n == "s4v") return SystemId::S4V;
  if (n == "lp") return SystemId::LP;
  if (n == "lpv-" || n == "lpvminus") return SystemId::LPVminus;
  if (n == "lpv") return SystemId::LPV;
  return std::nullopt;
}

inline Language language_of(SystemId s) {
  switch (s) {
    case SystemId::IELminus:
    case SystemId::IEL: return Language::Iel;
    case SystemId::S4Vminus:
    case SystemId::S4V: return Language::Modal;
    default: return Language::Explicit;
  }
}

inline bool is_classical(SystemId s) {
  return s != SystemId::IELminus && s != SystemId::IEL;
}
inline bool is_explicit_system(SystemId s) {
  return s == SystemId::LP || s == SystemId::LPVminus || s == SystemId::LPV;
}
inline bool allows_box_nec(SystemId s) {
  return s == SystemId::S4Vminus || s == SystemId::S4V;
}
inline bool allows_axiom_nec(SystemId s) { return is_explicit_system(s); }

inline bool in_system_language(const Formula& f, SystemId s) {
  if (!in_language(f, language_of(s))) return false;
  if (s == SystemId::LP && f.contains_kind(Kind::Ver)) return false;  // LP has no V
  return true;
}

inline void require_system_language(const Formula& f, SystemId s, const std::string& what) {
  if (!in_system_language(f, s))
    throw LanguageError(what + ": formula '" + print(f) + "' is not in the language of " +
                        system_name(s));
}

// ---------------------------------------------------------------------------
// Axiom schemas. Patterns are ordinary formula trees in which atoms named
// "$X" stand for arbitrary formulas and proof variables named "$t" stand for
// arbitrary proof terms. User identifiers cannot start with '$'.
// ---------------------------------------------------------------------------

struct AxiomSchema {
  std::string id;
  std::string display;
  Formula pattern;
};

namespace detail {

inline bool is_meta(const std::string& n) { return !n.empty() && n[0] == '$'; }

inline bool match_term_pattern(const ProofTerm& pat, const ProofTerm& t,
                               std::map<std::string, ProofTerm>& tb) {
  if (pat.kind() == TermKind::Var && is_meta(pat.name())) {
    auto [it, fresh] = tb.emplace(pat.name(), t);
    return fresh || it->second == t;
  }
  if (pat.kind() != t.kind()) return false;
  switch (pat.kind()) {
    case TermKind::Var:
    case TermKind::Const: return pat.name() == t.name();
    case TermKind::Bang: return match_term_pattern(pat.left(), t.left(), tb);
    default:
      return match_term_pattern(pat.left(), t.left(), tb) &&
             match_term_pattern(pat.right(), t.right(), tb);
  }
}

inline bool match_pattern(const Formula& pat, const Formula& f,
                          std::map<std::string, Formula>& fb,
                          std::map<std::string, ProofTerm>& tb) {
  if (pat.kind() == Kind::Atom && is_meta(pat.atom_name())) {
    auto [it, fresh] = fb.emplace(pat.atom_name(), f);
    return fresh || it->second == f;
  }
  if (pat.kind() != f.kind()) return false;
  switch (pat.kind()) {
    case Kind::Atom: return pat.atom_name() == f.atom_name();
    case Kind::Bottom: return true;
    case Kind::Evid:
      return match_term_pattern(pat.term(), f.term(), tb) && match_pattern(pat.body(), f.body(), fb, tb);
    case Kind::Know:
    case Kind::Box:
    case Kind::Ver: return match_pattern(pat.body(), f.body(), fb, tb);
    default:
      return match_pattern(pat.left(), f.left(), fb, tb) &&
             match_pattern(pat.right(), f.right(), fb, tb);
  }
}

inline Formula MA(const char* n) { return Formula::atom(std::string("$") + n); }
inline ProofTerm MT(const char* n) { return ProofTerm::var(std::string("$") + n); }

inline std::vector<AxiomSchema> make_schemas(SystemId sys) {
  using F = Formula;
  const F A = MA("A"), B = MA("B"), C = MA("C");
  const ProofTerm t = MT("t"), s = MT("s");
  std::vector<AxiomSchema> v;
  auto add = [&](const char* id, const char* disp, Formula pat) {
    v.push_back(AxiomSchema{id, disp, std::move(pat)});
  };

  add("pc1", "A -> (B -> A)", F::implies(A, F::implies(B, A)));
  add("pc2", "(A -> (B -> C)) -> ((A -> B) -> (A -> C))",
      F::implies(F::implies(A, F::implies(B, C)),
                 F::implies(F::implies(A, B), F::implies(A, C))));
  add("pc3", "A -> (B -> (A & B))", F::implies(A, F::implies(B, F::land(A, B))));
  add("pc4", "(A & B) -> A", F::implies(F::land(A, B), A));
  add("pc5", "(A & B) -> B", F::implies(F::land(A, B), B));
  add("pc6", "A -> (A | B)", F::implies(A, F::lor(A, B)));
  add("pc7", "B -> (A | B)", F::implies(B, F::lor(A, B)));
  add("pc8", "(A -> C) -> ((B -> C) -> ((A | B) -> C))",
      F::implies(F::implies(A, C),
                 F::implies(F::implies(B, C), F::implies(F::lor(A, B), C))));
  add("pc9", "_|_ -> A", F::implies(F::bottom(), A));
  if (is_classical(sys)) add("pc10", "~~A -> A", F::implies(F::neg(F::neg(A)), A));

  switch (sys) {
    case SystemId::IEL:
      add("ie1", "K(A -> B) -> (K A -> K B)",
          F::implies(F::know(F::implies(A, B)), F::implies(F::know(A), F::know(B))));
      add("ie2", "A -> K A", F::implies(A, F::know(A)));
      add("ie3", "K A -> ~~A", F::implies(F::know(A), F::neg(F::neg(A))));
      add("ie3b", "~K _|_", F::neg(F::know(F::bottom())));
      break;
    case SystemId::IELminus:
      add("ie1", "K(A -> B) -> (K A -> K B)",
          F::implies(F::know(F::implies(A, B)), F::implies(F::know(A), F::know(B))));
      add("ie2", "A -> K A", F::implies(A, F::know(A)));
      break;
    case SystemId::S4Vminus:
    case SystemId::S4V:
      add("s4k", "[](A -> B) -> ([]A -> []B)",
          F::implies(F::box(F::implies(A, B)), F::implies(F::box(A), F::box(B))));
      add("s4t", "[]A -> A", F::implies(F::box(A), A));
      add("s44", "[]A -> [][]A", F::implies(F::box(A), F::box(F::box(A))));
      add("a1", "V(A -> B) -> (V A -> V B)",
          F::implies(F::ver(F::implies(A, B)), F::implies(F::ver(A), F::ver(B))));
      add("a2", "[]A -> V A", F::implies(F::box(A), F::ver(A)));
      if (sys == SystemId::S4V) add("a3", "~[]V _|_", F::neg(F::box(F::ver(F::bottom()))));
      break;
    case SystemId::LP:
    case SystemId::LPVminus:
    case SystemId::LPV:
      add("e1", "t:(A -> B) -> (s:A -> (t*s):B)",
          F::implies(F::evid(t, F::implies(A, B)),
                     F::implies(F::evid(s, A), F::evid(ProofTerm::app(t, s), B))));
      add("e2", "t:A -> A", F::implies(F::evid(t, A), A));
      add("e3", "t:A -> !t:t:A", F::implies(F::evid(t, A), F::evid(ProofTerm::bang(t), F::evid(t, A))));
      add("e4a", "t:A -> (s+t):A", F::implies(F::evid(t, A), F::evid(ProofTerm::plus(s, t), A)));
      add("e4b", "t:A -> (t+s):A", F::implies(F::evid(t, A), F::evid(ProofTerm::plus(t, s), A)));
      if (sys != SystemId::LP) {
        add("e5", "V(A -> B) -> (V A -> V B)",
            F::implies(F::ver(F::implies(A, B)), F::implies(F::ver(A), F::ver(B))));
        add("e6", "t:A -> V A", F::implies(F::evid(t, A), F::ver(A)));
        if (sys == SystemId::LPV) add("e7", "~t:V _|_", F::neg(F::evid(t, F::ver(F::bottom()))));
      }
      break;
    default: break;
  }
  return v;
}

}  // namespace detail

inline const std::vector<AxiomSchema>& schemas_of(SystemId sys) {
  static const std::vector<AxiomSchema> tables[] = {
      detail::make_schemas(SystemId::IELminus), detail::make_schemas(SystemId::IEL),
      detail::make_schemas(SystemId::S4Vminus), detail::make_schemas(SystemId::S4V),
      detail::make_schemas(SystemId::LP),       detail::make_schemas(SystemId::LPVminus),
      detail::make_schemas(SystemId::LPV)};
  return tables[static_cast<std::size_t>(sys)];
}

inline bool matches_schema(const Formula& f, const AxiomSchema& schema) {
  std::map<std::string, Formula> fb;
  std::map<std::string, ProofTerm> tb;
  return detail::match_pattern(schema.pattern, f, fb, tb);
}

// All schemas of the system that f instantiates, in the documented order.
inline std::vector<std::string> matching_schemas(const Formula& f, SystemId sys) {
  require_system_language(f, sys, "match_axiom");
  std::vector<std::string> out;
  for (const AxiomSchema& s : schemas_of(sys))
    if (matches_schema(f, s)) out.push_back(s.id);
  return out;
}

// First match wins (fixed schema order); nullopt when f is no axiom instance.
inline std::optional<std::string> match_axiom(const Formula& f, SystemId sys) {
  require_system_language(f, sys, "match_axiom");
  for (const AxiomSchema& s : schemas_of(sys))
    if (matches_schema(f, s)) return s.id;
  return std::nullopt;
}

inline const AxiomSchema* find_schema(SystemId sys, const std::string& id) {
  for (const AxiomSchema& s : schemas_of(sys))
    if (s.id == id) return &s;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Constant specifications: finite sets of c:A with A an axiom instance.
// One constant may specify several axioms unless injectivity is requested.
// ---------------------------------------------------------------------------

class ConstantSpecification {
 public:
  using Entry = std::pair<std::string, Formula>;

  bool add(const std::string& constant, const Formula& axiom) {
    return entries_.emplace(constant, axiom).second;
  }
  bool contains(const std::string& constant, const Formula& axiom) const {
    return entries_.count({constant, axiom}) > 0;
  }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  void merge(const ConstantSpecification& other) {
    entries_.insert(other.entries_.begin(), other.entries_.end());
  }

  friend bool operator==(const ConstantSpecification& a, const ConstantSpecification& b) {
    return a.entries_ == b.entries_;
  }

 private:
  struct Less {
    bool operator()(const Entry& a, const Entry& b) const {
      if (int c = a.first.compare(b.first); c != 0) return c < 0;
      return a.second < b.second;
    }
  };
  std::set<Entry, Less> entries_;
};

struct CsVerdict {
  bool ok = true;
  std::vector<std::pair<ConstantSpecification::Entry, std::string>> offenders;
};

inline CsVerdict validate_cs(const ConstantSpecification& cs, SystemId sys,
                             bool require_injective = false) {
  CsVerdict v;
  if (!cs.empty() && !is_explicit_system(sys)) {
    v.ok = false;
    for (const auto& e : cs)
      v.offenders.push_back({e, std::string(system_name(sys)) + " has no constant specifications"});
    return v;
  }
  std::map<std::string, Formula> seen;
  for (const auto& [c, f] : cs) {
    if (!in_system_language(f, sys)) {
      v.ok = false;
      v.offenders.push_back({{c, f}, "formula is not in the language of " + std::string(system_name(sys))});
      continue;
    }
    if (!match_axiom(f, sys)) {
      v.ok = false;
      v.offenders.push_back({{c, f}, "'" + print(f) + "' matches no axiom schema of " + system_name(sys)});
    }
    if (require_injective) {
      auto [it, fresh] = seen.emplace(c, f);
      if (!fresh && it->second != f) {
        v.ok = false;
        v.offenders.push_back({{c, f}, "constant '" + c + "' already specifies another axiom"});
      }
    }
  }
  return v;
}

}  // namespace ielkit
