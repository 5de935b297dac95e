#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ielkit/formula.hpp"
#include "ielkit/print.hpp"
#include "ielkit/system.hpp"

namespace ielkit {

// ---------------------------------------------------------------------------
// Hilbert-style derivations: an ordered list of justified lines. Indices are
// 1-based, matching the file format. MP(i, j) reads "line j is X -> F, line i
// is X, conclude F".
//
// Necessitation modes: when a constant specification is supplied the
// derivation is checked in CS mode (CS lines allowed, axiom necessitation
// forbidden); without one it is checked in rule mode (axiom necessitation
// allowed, its uses collected and reported as the used CS).
// ---------------------------------------------------------------------------

enum class JKind : std::uint8_t { Hypothesis, Axiom, CS, MP, BoxNec, AxiomNec };

struct Justification {
  JKind kind = JKind::Hypothesis;
  std::string schema;        // Axiom: schema id; empty means "infer"
  std::string constant;      // CS, AxiomNec
  std::size_t from1 = 0;     // MP minor / BoxNec / AxiomNec premise
  std::size_t from2 = 0;     // MP major

  static Justification hypothesis() { return {JKind::Hypothesis, "", "", 0, 0}; }
  static Justification axiom(std::string schema = "") { return {JKind::Axiom, std::move(schema), "", 0, 0}; }
  static Justification cs(std::string constant) { return {JKind::CS, "", std::move(constant), 0, 0}; }
  static Justification mp(std::size_t minor, std::size_t major) { return {JKind::MP, "", "", minor, major}; }
  static Justification box_nec(std::size_t from) { return {JKind::BoxNec, "", "", from, 0}; }
  static Justification axiom_nec(std::size_t from, std::string constant) {
    return {JKind::AxiomNec, "", std::move(constant), from, 0};
  }
};

struct HilbertLine {
  Justification just;
  Formula formula;
};

struct HilbertDerivation {
  std::vector<HilbertLine> lines;

  std::size_t size() const { return lines.size(); }
  const Formula& conclusion() const {
    if (lines.empty()) throw DerivationError("empty derivation");
    return lines.back().formula;
  }
  std::vector<std::size_t> hypothesis_lines() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < lines.size(); ++i)
      if (lines[i].just.kind == JKind::Hypothesis) out.push_back(i + 1);
    return out;
  }
};

struct LineDiagnosis {
  std::size_t index;  // 1-based; 0 = derivation-level problem
  std::string message;
};

struct HilbertCheckResult {
  bool ok = false;
  std::vector<LineDiagnosis> issues;
  Formula conclusion;
  ConstantSpecification used_cs;
  // per line (1-based, slot 0 unused): the hypothesis lines it depends on
  std::vector<std::set<std::size_t>> deps;

  std::string first_issue() const { return issues.empty() ? "" : issues.front().message; }
};

inline HilbertCheckResult check_derivation(const HilbertDerivation& d, SystemId sys,
                                           const std::optional<ConstantSpecification>& cs = {}) {
  HilbertCheckResult r;
  const bool cs_mode = cs.has_value();
  auto complain = [&](std::size_t idx, std::string msg) {
    r.issues.push_back(LineDiagnosis{idx, std::move(msg)});
  };

  if (d.lines.empty()) {
    complain(0, "derivation has no lines");
    return r;
  }
  if (cs_mode) {
    CsVerdict v = validate_cs(*cs, sys);
    if (!v.ok) {
      for (const auto& [entry, why] : v.offenders)
        complain(0, "constant specification entry " + entry.first + ":" + print(entry.second) + ": " + why);
      return r;
    }
  }

  const std::size_t n = d.lines.size();
  r.deps.assign(n + 1, {});

  for (std::size_t i = 1; i <= n; ++i) {
    const HilbertLine& L = d.lines[i - 1];
    const Formula& f = L.formula;
    if (f.empty()) {
      complain(i, "missing formula");
      continue;
    }
    if (!in_system_language(f, sys)) {
      complain(i, "'" + print(f) + "' is not in the language of " + system_name(sys));
      continue;
    }
    auto ref_ok = [&](std::size_t j) {
      if (j == 0 || j >= i) {
        complain(i, "reference to line " + std::to_string(j) + " does not precede line " + std::to_string(i));
        return false;
      }
      if (d.lines[j - 1].formula.empty()) return false;
      return true;
    };
    switch (L.just.kind) {
      case JKind::Hypothesis:
        r.deps[i].insert(i);
        break;
      case JKind::Axiom: {
        if (L.just.schema.empty()) {
          if (!match_axiom(f, sys))
            complain(i, "no schema of " + std::string(system_name(sys)) + " matches '" + print(f) + "'");
        } else {
          const AxiomSchema* s = find_schema(sys, L.just.schema);
          if (!s)
            complain(i, "unknown schema '" + L.just.schema + "' for " + system_name(sys));
          else if (!matches_schema(f, *s))
            complain(i, "'" + print(f) + "' is not an instance of " + L.just.schema + " (" + s->display + ")");
        }
        break;
      }
      case JKind::CS: {
        if (!cs_mode) {
          complain(i, "CS line in rule mode (no constant specification supplied)");
          break;
        }
        if (f.kind() != Kind::Evid || f.term().kind() != TermKind::Const ||
            f.term().name() != L.just.constant) {
          complain(i, "CS line formula must be " + L.just.constant + ":A");
          break;
        }
        if (!cs->contains(L.just.constant, f.body())) {
          complain(i, "constant specification has no entry " + L.just.constant + ":" + print(f.body()));
          break;
        }
        r.used_cs.add(L.just.constant, f.body());
        break;
      }
      case JKind::MP: {
        if (!ref_ok(L.just.from1) || !ref_ok(L.just.from2)) break;
        const Formula& minor = d.lines[L.just.from1 - 1].formula;
        const Formula& major = d.lines[L.just.from2 - 1].formula;
        if (major.kind() != Kind::Implies || major.left() != minor || major.right() != f) {
          complain(i, "MP mismatch: line " + std::to_string(L.just.from2) + " is not '" +
                          print(minor) + " -> " + print(f) + "'");
          break;
        }
        r.deps[i].insert(r.deps[L.just.from1].begin(), r.deps[L.just.from1].end());
        r.deps[i].insert(r.deps[L.just.from2].begin(), r.deps[L.just.from2].end());
        break;
      }
      case JKind::BoxNec: {
        if (!allows_box_nec(sys)) {
          complain(i, std::string(system_name(sys)) + " has no []-necessitation rule");
          break;
        }
        if (!ref_ok(L.just.from1)) break;
        if (!r.deps[L.just.from1].empty()) {
          complain(i, "[]-necessitation under open hypotheses (line " + std::to_string(L.just.from1) + ")");
          break;
        }
        if (f != Formula::box(d.lines[L.just.from1 - 1].formula)) {
          complain(i, "conclusion is not [] applied to line " + std::to_string(L.just.from1));
          break;
        }
        break;
      }
      case JKind::AxiomNec: {
        if (!allows_axiom_nec(sys)) {
          complain(i, std::string(system_name(sys)) + " has no axiom necessitation rule");
          break;
        }
        if (cs_mode) {
          complain(i, "axiom necessitation is forbidden in CS mode");
          break;
        }
        if (!ref_ok(L.just.from1)) break;
        if (d.lines[L.just.from1 - 1].just.kind != JKind::Axiom) {
          complain(i, "axiom necessitation premise (line " + std::to_string(L.just.from1) + ") is not an axiom line");
          break;
        }
        if (L.just.constant.empty()) {
          complain(i, "axiom necessitation needs a constant");
          break;
        }
        Formula want = Formula::evid(ProofTerm::constant(L.just.constant),
                                     d.lines[L.just.from1 - 1].formula);
        if (f != want) {
          complain(i, "conclusion is not " + print(want));
          break;
        }
        r.used_cs.add(L.just.constant, d.lines[L.just.from1 - 1].formula);
        break;
      }
    }
  }

  r.ok = r.issues.empty();
  if (r.ok) r.conclusion = d.lines.back().formula;
  return r;
}

// Independent line-replay validator: reconstructs each line's formula from
// its justification (bottom-up) and compares against the recorded one. Used
// by the test harness as a second opinion on accepted derivations.
inline bool replay_derivation(const HilbertDerivation& d, SystemId sys,
                              const std::optional<ConstantSpecification>& cs = {}) {
  std::vector<Formula> got(d.lines.size() + 1);
  for (std::size_t i = 1; i <= d.lines.size(); ++i) {
    const HilbertLine& L = d.lines[i - 1];
    auto ref = [&](std::size_t j) -> const Formula& {
      if (j == 0 || j >= i || got[j].empty()) throw DerivationError("bad reference");
      return got[j];
    };
    Formula rebuilt;
    try {
      switch (L.just.kind) {
        case JKind::Hypothesis:
          rebuilt = L.formula;
          break;
        case JKind::Axiom:
          if (!match_axiom(L.formula, sys)) return false;
          rebuilt = L.formula;
          break;
        case JKind::CS:
          if (!cs || L.formula.kind() != Kind::Evid ||
              !cs->contains(L.just.constant, L.formula.body()))
            return false;
          rebuilt = Formula::evid(ProofTerm::constant(L.just.constant), L.formula.body());
          break;
        case JKind::MP: {
          const Formula& major = ref(L.just.from2);
          if (major.kind() != Kind::Implies || major.left() != ref(L.just.from1)) return false;
          rebuilt = major.right();
          break;
        }
        case JKind::BoxNec:
          rebuilt = Formula::box(ref(L.just.from1));
          break;
        case JKind::AxiomNec:
          rebuilt = Formula::evid(ProofTerm::constant(L.just.constant), ref(L.just.from1));
          break;
      }
    } catch (const DerivationError&) {
      return false;
    } catch (const LanguageError&) {
      return false;
    }
    if (rebuilt.empty() || rebuilt != L.formula) return false;
    got[i] = rebuilt;
  }
  return !d.lines.empty();
}

// Keep only the lines reachable from the conclusion, reindexing references.
inline HilbertDerivation prune(const HilbertDerivation& d, std::size_t root = 0) {
  if (d.lines.empty()) return d;
  if (root == 0) root = d.lines.size();
  std::vector<char> keep(d.lines.size() + 1, 0);
  std::vector<std::size_t> stack{root};
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    if (i == 0 || i > d.lines.size() || keep[i]) continue;
    keep[i] = 1;
    const Justification& j = d.lines[i - 1].just;
    if (j.from1) stack.push_back(j.from1);
    if (j.from2) stack.push_back(j.from2);
  }
  std::vector<std::size_t> remap(d.lines.size() + 1, 0);
  HilbertDerivation out;
  for (std::size_t i = 1; i <= root; ++i) {
    if (!keep[i]) continue;
    HilbertLine L = d.lines[i - 1];
    if (L.just.from1) L.just.from1 = remap[L.just.from1];
    if (L.just.from2) L.just.from2 = remap[L.just.from2];
    out.lines.push_back(std::move(L));
    remap[i] = out.lines.size();
  }
  return out;
}

}  // namespace ielkit
