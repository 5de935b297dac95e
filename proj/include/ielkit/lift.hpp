#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ielkit/builder.hpp"

namespace ielkit {

// ---------------------------------------------------------------------------
// Internalization: from a derivation of
//     A1 ... An, y1:B1 ... ym:Bm |- F
// construct a proof term p(x1..xn, y1..ym) and a derivation of
//     x1:A1 ... xn:An, y1:B1 ... ym:Bm |- p(...):F.
// Hypotheses of the shape y:B (a proof variable as evidence) are kept and
// lifted with the proof checker (!y); all others receive fresh variables.
// With no hypotheses the term is ground (constructive necessitation).
//
// The output derivation is in rule mode: constants introduced by axiom
// necessitation are reported as the generated constant specification.
// ---------------------------------------------------------------------------

struct InternalizeResult {
  ProofTerm term;
  HilbertDerivation derivation;
  ConstantSpecification cs;
  // fresh variable chosen for each plain hypothesis, in hypothesis order
  std::vector<std::pair<std::string, Formula>> plain_vars;
};

inline InternalizeResult internalize(const HilbertDerivation& d, SystemId sys,
                                     const std::optional<ConstantSpecification>& cs_in = {}) {
  if (!is_explicit_system(sys)) throw DerivationError("internalize: system has no proof terms");
  HilbertCheckResult chk = check_derivation(d, sys, cs_in);
  if (!chk.ok) throw DerivationError("internalize: derivation does not check: " + chk.first_issue());

  InternalizeResult out;
  DerivationBuilder b(sys);
  for (const HilbertLine& L : d.lines) b.note_term_names(L.formula);

  // per original line: term t_i and builder line proving t_i : X_i
  std::vector<ProofTerm> term_of(d.lines.size() + 1);
  std::vector<std::size_t> line_of(d.lines.size() + 1, 0);
  std::map<Formula, std::pair<ProofTerm, std::size_t>> axiom_cache;

  auto quote_axiom = [&](const Formula& a) -> std::pair<ProofTerm, std::size_t> {
    auto it = axiom_cache.find(a);
    if (it != axiom_cache.end()) return it->second;
    std::size_t ax = b.axiom(a);
    std::string c = b.fresh_constant();
    std::size_t q = b.axiom_nec(ax, c);  // c : a
    out.cs.add(c, a);
    auto res = std::make_pair(ProofTerm::constant(c), q);
    axiom_cache.emplace(a, res);
    return res;
  };

  for (std::size_t i = 1; i <= d.lines.size(); ++i) {
    const HilbertLine& L = d.lines[i - 1];
    switch (L.just.kind) {
      case JKind::Hypothesis: {
        if (L.formula.kind() == Kind::Evid && L.formula.term().kind() == TermKind::Var) {
          // quoted hypothesis y:B -> !y:(y:B) by e3
          std::size_t h = b.hypothesis(L.formula);
          ProofTerm y = L.formula.term();
          Formula e3 = Formula::implies(
              L.formula, Formula::evid(ProofTerm::bang(y), L.formula));
          std::size_t q = b.mp(h, b.axiom(e3));
          term_of[i] = ProofTerm::bang(y);
          line_of[i] = q;
        } else {
          std::string x = b.fresh_variable();
          ProofTerm xv = ProofTerm::var(x);
          std::size_t h = b.hypothesis(Formula::evid(xv, L.formula));
          out.plain_vars.emplace_back(x, L.formula);
          term_of[i] = xv;
          line_of[i] = h;
        }
        break;
      }
      case JKind::Axiom: {
        auto [t, q] = quote_axiom(L.formula);
        term_of[i] = t;
        line_of[i] = q;
        break;
      }
      case JKind::CS: {
        // re-derive c:A by axiom necessitation with the same constant, then
        // lift with the proof checker: the original line concludes c:A
        std::size_t ax = b.axiom(L.formula.body());
        std::size_t q = b.axiom_nec(ax, L.just.constant);
        out.cs.add(L.just.constant, L.formula.body());
        ProofTerm c = ProofTerm::constant(L.just.constant);
        Formula e3 = Formula::implies(L.formula, Formula::evid(ProofTerm::bang(c), L.formula));
        line_of[i] = b.mp(q, b.axiom(e3));
        term_of[i] = ProofTerm::bang(c);
        break;
      }
      case JKind::MP: {
        const ProofTerm& tm = term_of[L.just.from1];
        const ProofTerm& tj = term_of[L.just.from2];
        const Formula& xm = d.lines[L.just.from1 - 1].formula;
        ProofTerm ts = ProofTerm::app(tj, tm);
        // e1: tj:(Xm -> F) -> (tm:Xm -> (tj*tm):F)
        Formula e1 = Formula::implies(
            b.formula_at(line_of[L.just.from2]),
            Formula::implies(Formula::evid(tm, xm), Formula::evid(ts, L.formula)));
        std::size_t s1 = b.mp(line_of[L.just.from2], b.axiom(e1));
        line_of[i] = b.mp(line_of[L.just.from1], s1);
        term_of[i] = ts;
        break;
      }
      case JKind::AxiomNec: {
        // original concludes c:A; lift with the proof checker to !c:(c:A)
        const Formula& a = d.lines[L.just.from1 - 1].formula;
        std::size_t ax = b.axiom(a);
        std::size_t q = b.axiom_nec(ax, L.just.constant);  // c:A
        out.cs.add(L.just.constant, a);
        ProofTerm c = ProofTerm::constant(L.just.constant);
        Formula e3 = Formula::implies(L.formula, Formula::evid(ProofTerm::bang(c), L.formula));
        line_of[i] = b.mp(q, b.axiom(e3));
        term_of[i] = ProofTerm::bang(c);
        break;
      }
      case JKind::BoxNec:
        throw DerivationError("internalize: []-necessitation cannot occur in an explicit system");
    }
  }

  out.term = term_of[d.lines.size()];
  out.derivation = b.take(line_of[d.lines.size()]);
  return out;
}

// ---------------------------------------------------------------------------
// V-lifting (realization Case 1). From a closed derivation of
//     (M1 & (M2 & ... Mk)) -> X
// produce one of
//     (M1' & (M2' & ... Mk')) -> V X
// where Mi' = Mi for Quoted slots (which must look like x:C) and Mi' = V Mi
// for Lifted slots. With k = 0 the input proves X and the output proves V X
// exactly (Lemma 1, V-necessitation).
// ---------------------------------------------------------------------------

enum class LiftSlot : std::uint8_t { Quoted, Lifted };

namespace detail {

// |- V A, |- V B  =>  |- V (A & B), via a quoted pc3 instance and e5
inline std::size_t v_and(DerivationBuilder& b, std::size_t va, std::size_t vb, const Formula& a,
                         const Formula& bf, ConstantSpecification& cs) {
  Formula pc3 = Formula::implies(a, Formula::implies(bf, Formula::land(a, bf)));
  std::size_t ax = b.axiom(pc3);
  std::string c = b.fresh_constant();
  std::size_t q = b.axiom_nec(ax, c);
  cs.add(c, pc3);
  std::size_t vq = b.mp(q, b.axiom(Formula::implies(b.formula_at(q), Formula::ver(pc3))));  // e6
  // e5 twice
  Formula inner = Formula::implies(bf, Formula::land(a, bf));
  std::size_t s1 = b.mp(vq, b.axiom(Formula::implies(
                                Formula::ver(pc3),
                                Formula::implies(Formula::ver(a), Formula::ver(inner)))));
  std::size_t s2 = b.mp(va, s1);  // V(B -> (A & B))
  std::size_t s3 = b.mp(s2, b.axiom(Formula::implies(
                                Formula::ver(inner),
                                Formula::implies(Formula::ver(bf), Formula::ver(Formula::land(a, bf))))));
  return b.mp(vb, s3);
}

// |- x:C at line  =>  |- V(x:C), via e3 and e6
inline std::size_t v_of_quote(DerivationBuilder& b, std::size_t line) {
  const Formula& xc = b.formula_at(line);
  Formula banged = Formula::evid(ProofTerm::bang(xc.term()), xc);
  std::size_t s1 = b.mp(line, b.axiom(Formula::implies(xc, banged)));            // e3
  return b.mp(s1, b.axiom(Formula::implies(banged, Formula::ver(xc))));          // e6
}

}  // namespace detail

struct VLiftResult {
  HilbertDerivation derivation;
  ConstantSpecification cs;  // constants generated along the way
};

inline VLiftResult v_lift(const HilbertDerivation& d, SystemId sys,
                          const std::vector<LiftSlot>& slots,
                          const std::optional<ConstantSpecification>& cs_in = {}) {
  if (sys != SystemId::LPVminus && sys != SystemId::LPV)
    throw DerivationError("v_lift: system must be lpv- or lpv");
  HilbertCheckResult chk = check_derivation(d, sys, cs_in);
  if (!chk.ok) throw DerivationError("v_lift: derivation does not check: " + chk.first_issue());
  if (!d.hypothesis_lines().empty())
    throw DerivationError("v_lift: derivation must be hypothesis-free");

  const std::size_t k = slots.size();
  Formula conclusion = d.conclusion();

  // destructure the antecedent conjunction
  Formula x;
  std::vector<Formula> ms;
  if (k == 0) {
    x = conclusion;
  } else {
    if (conclusion.kind() != Kind::Implies)
      throw DerivationError("v_lift: conclusion is not an implication");
    Formula h = conclusion.left();
    x = conclusion.right();
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (h.kind() != Kind::And) throw DerivationError("v_lift: antecedent has too few conjuncts");
      ms.push_back(h.left());
      h = h.right();
    }
    ms.push_back(h);
    for (std::size_t i = 0; i < k; ++i)
      if (slots[i] == LiftSlot::Quoted &&
          (ms[i].kind() != Kind::Evid || ms[i].term().kind() != TermKind::Var))
        throw DerivationError("v_lift: quoted slot " + std::to_string(i) + " is not of the form x:C");
  }

  VLiftResult out;
  DerivationBuilder b(sys);
  for (const HilbertLine& L : d.lines) b.note_term_names(L.formula);

  // |- t:(conclusion), then V(conclusion) by e6
  InternalizeResult ir = internalize(d, sys, cs_in);
  out.cs.merge(ir.cs);
  std::size_t tl = b.import(ir.derivation);
  std::size_t vc = b.mp(tl, b.axiom(Formula::implies(b.formula_at(tl), Formula::ver(conclusion))));

  if (k == 0) {
    out.derivation = b.take(vc);  // |- V X exactly
    return out;
  }

  // e5: V(H -> X) -> (V H -> V X)
  Formula hf = conclusion.left();
  std::size_t vh_vx = b.mp(vc, b.axiom(Formula::implies(
                                   Formula::ver(conclusion),
                                   Formula::implies(Formula::ver(hf), Formula::ver(x)))));

  // under hypothesis H' = conj(Mi'), derive V H and then V X
  std::vector<Formula> mps(k);
  for (std::size_t i = 0; i < k; ++i)
    mps[i] = slots[i] == LiftSlot::Quoted ? ms[i] : Formula::ver(ms[i]);
  std::size_t h = b.begin_hypothesis(DerivationBuilder::conj(mps));
  std::vector<std::size_t> comps = b.split_conj(h, k);
  std::vector<std::size_t> vlines(k);
  for (std::size_t i = 0; i < k; ++i)
    vlines[i] = slots[i] == LiftSlot::Quoted ? detail::v_of_quote(b, comps[i]) : comps[i];
  // fold into V(conj(ms)) right to left
  std::size_t cur = vlines[k - 1];
  Formula cur_f = ms[k - 1];
  for (std::size_t i = k - 1; i-- > 0;) {
    cur = detail::v_and(b, vlines[i], cur, ms[i], cur_f, out.cs);
    cur_f = Formula::land(ms[i], cur_f);
  }
  std::size_t vx = b.mp(cur, vh_vx);
  std::size_t res = b.end_hypothesis(vx);
  out.derivation = b.take(res);
  return out;
}

// Spec-shaped convenience: the first n_theta conjuncts are quoted x:C slots,
// the remaining n_gamma are lifted.
inline VLiftResult v_lift(const HilbertDerivation& d, SystemId sys, std::size_t n_theta,
                          std::size_t n_gamma,
                          const std::optional<ConstantSpecification>& cs_in = {}) {
  std::vector<LiftSlot> slots;
  slots.insert(slots.end(), n_theta, LiftSlot::Quoted);
  slots.insert(slots.end(), n_gamma, LiftSlot::Lifted);
  return v_lift(d, sys, slots, cs_in);
}

}  // namespace ielkit
