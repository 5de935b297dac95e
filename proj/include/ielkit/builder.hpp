#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ielkit/hilbert.hpp"

namespace ielkit {

// ---------------------------------------------------------------------------
// DerivationBuilder: grows a Hilbert derivation line by line and offers the
// derived moves everything downstream is compiled from. Hypotheses are
// managed as frames: begin_hypothesis opens one, end_hypothesis discharges it
// with the deduction-theorem transform. Lines made obsolete by a discharge
// stay in place until pruning; snapshot(root) extracts the reachable part.
// ---------------------------------------------------------------------------

class DerivationBuilder {
 public:
  explicit DerivationBuilder(SystemId sys) : sys_(sys) {}

  SystemId system() const { return sys_; }
  std::size_t size() const { return deriv_.lines.size(); }

  const Formula& formula_at(std::size_t i) const {
    if (i == 0 || i > deriv_.lines.size()) throw DerivationError("line index out of range");
    return deriv_.lines[i - 1].formula;
  }

  // ---- primitive lines ----

  std::size_t hypothesis(Formula f) { return push(Justification::hypothesis(), std::move(f)); }

  std::size_t axiom(Formula f) {
    auto id = match_axiom(f, sys_);
    if (!id) throw DerivationError("not an axiom of " + std::string(system_name(sys_)) + ": " + print(f));
    return push(Justification::axiom(*id), std::move(f));
  }

  std::size_t cs_line(const std::string& constant, Formula axiom_formula) {
    Formula f = Formula::evid(ProofTerm::constant(constant), std::move(axiom_formula));
    return push(Justification::cs(constant), std::move(f));
  }

  std::size_t mp(std::size_t minor, std::size_t major) {
    const Formula& a = formula_at(minor);
    const Formula& ab = formula_at(major);
    if (ab.kind() != Kind::Implies || ab.left() != a)
      throw DerivationError("mp: line " + std::to_string(major) + " is not '" + print(a) + " -> _'");
    return push(Justification::mp(minor, major), ab.right());
  }

  std::size_t box_nec(std::size_t i) {
    return push(Justification::box_nec(i), Formula::box(formula_at(i)));
  }

  std::size_t axiom_nec(std::size_t i, const std::string& constant) {
    if (deriv_.lines[i - 1].just.kind != JKind::Axiom)
      throw DerivationError("axiom_nec premise is not an axiom line");
    return push(Justification::axiom_nec(i, constant),
                Formula::evid(ProofTerm::constant(constant), formula_at(i)));
  }

  std::size_t axiom_nec_fresh(std::size_t i) { return axiom_nec(i, fresh_constant()); }

  // ---- fresh names (collision-free against everything seen so far) ----

  std::string fresh_constant() {
    for (;;) {
      std::string c = "c" + std::to_string(++const_counter_);
      if (!used_consts_.count(c) && !used_vars_.count(c)) {
        used_consts_.insert(c);
        return c;
      }
    }
  }

  std::string fresh_variable() {
    for (;;) {
      std::string v = "x" + std::to_string(++var_counter_);
      if (!used_vars_.count(v) && !used_consts_.count(v)) {
        used_vars_.insert(v);
        return v;
      }
    }
  }

  void note_term_names(const Formula& f) { f.collect_term_names(used_vars_, used_consts_); }

  // ---- derived propositional moves ----

  // |- A -> A
  std::size_t imp_refl(const Formula& a) {
    Formula aa = Formula::implies(a, a);
    std::size_t k1 = axiom(Formula::implies(a, Formula::implies(aa, a)));
    std::size_t p2 = axiom(Formula::implies(formula_at(k1), Formula::implies(Formula::implies(a, aa), aa)));
    std::size_t s1 = mp(k1, p2);
    std::size_t k2 = axiom(Formula::implies(a, aa));
    return mp(k2, s1);
  }

  // |- T  with T := _|_ -> _|_
  std::size_t top() {
    if (!top_line_) top_line_ = imp_refl(Formula::bottom());
    return top_line_;
  }

  static Formula top_formula() { return Formula::implies(Formula::bottom(), Formula::bottom()); }

  // from |- X derive |- B -> X
  std::size_t weaken(std::size_t i, const Formula& b) {
    const Formula& x = formula_at(i);
    std::size_t k = axiom(Formula::implies(x, Formula::implies(b, x)));
    return mp(i, k);
  }

  // |- A->B, |- B->C  =>  |- A->C
  std::size_t syll(std::size_t ab, std::size_t bc) {
    const Formula& f_ab = formula_at(ab);
    if (f_ab.kind() != Kind::Implies) throw DerivationError("syll: not an implication");
    std::size_t w = weaken(bc, f_ab.left());
    return mp_under(ab, w);
  }

  // |- A->B, |- A->(B->C)  =>  |- A->C
  std::size_t mp_under(std::size_t ab, std::size_t abc) {
    const Formula& f = formula_at(abc);
    if (f.kind() != Kind::Implies || f.right().kind() != Kind::Implies)
      throw DerivationError("mp_under: major is not A->(B->C)");
    const Formula &a = f.left(), &b = f.right().left(), &c = f.right().right();
    std::size_t p2 = axiom(Formula::implies(
        f, Formula::implies(Formula::implies(a, b), Formula::implies(a, c))));
    std::size_t q = mp(abc, p2);
    return mp(ab, q);
  }

  // |- A, |- B  =>  |- A & B
  std::size_t and_intro(std::size_t a, std::size_t b) {
    const Formula &fa = formula_at(a), &fb = formula_at(b);
    std::size_t p3 = axiom(Formula::implies(fa, Formula::implies(fb, Formula::land(fa, fb))));
    return mp(b, mp(a, p3));
  }

  std::size_t and_elim_l(std::size_t i) {
    const Formula& f = formula_at(i);
    if (f.kind() != Kind::And) throw DerivationError("and_elim_l: not a conjunction");
    return mp(i, axiom(Formula::implies(f, f.left())));
  }

  std::size_t and_elim_r(std::size_t i) {
    const Formula& f = formula_at(i);
    if (f.kind() != Kind::And) throw DerivationError("and_elim_r: not a conjunction");
    return mp(i, axiom(Formula::implies(f, f.right())));
  }

  // |- _|_ at bot_line  =>  |- X  (pc9)
  std::size_t ex_falso(std::size_t bot_line, const Formula& x) {
    return mp(bot_line, axiom(Formula::implies(Formula::bottom(), x)));
  }

  // classical systems: |- A | ~A
  std::size_t excluded_middle(const Formula& a) {
    Formula dis = Formula::lor(a, Formula::neg(a));
    std::size_t h = begin_hypothesis(Formula::neg(dis));
    std::size_t ha = begin_hypothesis(a);
    std::size_t in = axiom(Formula::implies(a, dis));
    std::size_t d = mp(ha, in);
    mp(d, h);
    std::size_t na = end_hypothesis();  // ~A, under h
    std::size_t in2 = axiom(Formula::implies(formula_at(na), dis));
    std::size_t d2 = mp(na, in2);
    mp(d2, h);
    std::size_t nn = end_hypothesis();  // ~~(A | ~A)
    std::size_t dn = axiom(Formula::implies(formula_at(nn), dis));
    return mp(nn, dn);
  }

  // ---- right-nested conjunctions and disjunctions ----

  static Formula conj(const std::vector<Formula>& fs) {
    if (fs.empty()) return top_formula();
    Formula out = fs.back();
    for (std::size_t i = fs.size() - 1; i-- > 0;) out = Formula::land(fs[i], out);
    return out;
  }

  static Formula disj(const std::vector<Formula>& fs) {
    if (fs.empty()) return Formula::bottom();
    Formula out = fs.back();
    for (std::size_t i = fs.size() - 1; i-- > 0;) out = Formula::lor(fs[i], out);
    return out;
  }

  // lines proving C1..Cn  =>  line proving C1 & (C2 & ...); top() when empty
  std::size_t build_conj(const std::vector<std::size_t>& comps) {
    if (comps.empty()) return top();
    std::size_t cur = comps.back();
    for (std::size_t i = comps.size() - 1; i-- > 0;) cur = and_intro(comps[i], cur);
    return cur;
  }

  // line proving a right-nested n-ary conjunction => lines of its components
  std::vector<std::size_t> split_conj(std::size_t line, std::size_t n) {
    std::vector<std::size_t> out;
    if (n == 0) return out;
    std::size_t cur = line;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      out.push_back(and_elim_l(cur));
      cur = and_elim_r(cur);
    }
    out.push_back(cur);
    return out;
  }

  // from |- D[slot], derive |- D0 | (D1 | ...)
  std::size_t inject_disj(std::size_t line, const std::vector<Formula>& ds, std::size_t slot) {
    if (ds.empty() || slot >= ds.size()) throw DerivationError("inject_disj: bad slot");
    if (formula_at(line) != ds[slot]) throw DerivationError("inject_disj: slot mismatch");
    std::vector<Formula> tails(ds.size());
    tails[ds.size() - 1] = ds.back();
    for (std::size_t i = ds.size() - 1; i-- > 0;) tails[i] = Formula::lor(ds[i], tails[i + 1]);
    std::size_t cur = line;
    if (slot + 1 < ds.size())
      cur = mp(cur, axiom(Formula::implies(ds[slot], tails[slot])));  // pc6
    for (std::size_t i = slot; i-- > 0;)
      cur = mp(cur, axiom(Formula::implies(tails[i + 1], tails[i])));  // pc7
    return cur;
  }

  // Case analysis over |- D0 | (D1 | ...): handle_case(i, hyp_line) must
  // derive `goal` inside the frame opened for member i. Returns |- goal.
  std::size_t elim_disj(std::size_t disj_line, const std::vector<Formula>& ds, const Formula& goal,
                        const std::function<std::size_t(std::size_t, std::size_t)>& handle_case) {
    if (ds.empty()) throw DerivationError("elim_disj: no members");
    std::function<std::size_t(std::size_t)> tail_imp = [&](std::size_t i) -> std::size_t {
      std::size_t h = begin_hypothesis(ds[i]);
      std::size_t g = handle_case(i, h);
      if (formula_at(g) != goal) throw DerivationError("elim_disj: case did not reach the goal");
      std::size_t ci = end_hypothesis(g);  // D_i -> goal
      if (i + 1 == ds.size()) return ci;
      std::size_t cr = tail_imp(i + 1);  // tail -> goal
      Formula di_g = formula_at(ci), tail_g = formula_at(cr);
      Formula dis = Formula::lor(ds[i], tail_g.left());
      std::size_t p8 =
          axiom(Formula::implies(di_g, Formula::implies(tail_g, Formula::implies(dis, goal))));
      return mp(cr, mp(ci, p8));
    };
    std::size_t whole = tail_imp(0);
    return mp(disj_line, whole);
  }

  // ---- hypothesis frames ----

  std::size_t begin_hypothesis(Formula a) {
    std::size_t h = hypothesis(std::move(a));
    frames_.push_back(Frame{h});
    return h;
  }

  std::size_t open_frames() const { return frames_.size(); }

  // Discharges the innermost frame: returns |- A -> F where F is the formula
  // at result_line (defaults to the last line).
  std::size_t end_hypothesis(std::size_t result_line = 0) {
    if (frames_.empty()) throw DerivationError("end_hypothesis: no open frame");
    Frame fr = frames_.back();
    frames_.pop_back();
    if (result_line == 0) result_line = size();
    if (result_line < fr.hyp) throw DerivationError("end_hypothesis: result precedes the frame");
    return discharge(fr.hyp, result_line);
  }

  // ---- import / substitution / output ----

  // Appends all lines of `d`, remapping references. Hypothesis lines whose
  // formula appears in hyp_map are not copied; references point at the mapped
  // line instead. Returns the index of the imported conclusion.
  std::size_t import(const HilbertDerivation& d, const std::map<Formula, std::size_t>& hyp_map = {}) {
    if (d.lines.empty()) throw DerivationError("import: empty derivation");
    std::vector<std::size_t> remap(d.lines.size() + 1, 0);
    for (std::size_t i = 1; i <= d.lines.size(); ++i) {
      HilbertLine L = d.lines[i - 1];
      if (L.just.kind == JKind::Hypothesis) {
        auto it = hyp_map.find(L.formula);
        if (it != hyp_map.end()) {
          if (formula_at(it->second) != L.formula)
            throw DerivationError("import: hypothesis map formula mismatch");
          remap[i] = it->second;
          continue;
        }
      }
      if (L.just.from1) L.just.from1 = remap[L.just.from1];
      if (L.just.from2) L.just.from2 = remap[L.just.from2];
      remap[i] = push(L.just, L.formula);
    }
    return remap[d.lines.size()];
  }

  // Substitute a term for a proof variable in every line. Axiom instances
  // remain instances of their schemas, so justifications survive unchanged.
  void substitute_term_var(const std::string& v, const ProofTerm& by) {
    std::set<std::string> vs, cs;
    by.collect_names(vs, cs);
    used_vars_.insert(vs.begin(), vs.end());
    used_consts_.insert(cs.begin(), cs.end());
    for (HilbertLine& L : deriv_.lines) L.formula = L.formula.substitute_term_var(v, by);
  }

  const HilbertDerivation& raw() const { return deriv_; }

  // The pruned derivation ending at line root (default: last line).
  HilbertDerivation snapshot(std::size_t root = 0) const { return prune(deriv_, root); }

  HilbertDerivation take(std::size_t root = 0) {
    if (!frames_.empty()) throw DerivationError("take: open hypothesis frames");
    HilbertDerivation out = prune(deriv_, root);
    deriv_.lines.clear();
    top_line_ = 0;
    return out;
  }

 private:
  struct Frame {
    std::size_t hyp;
  };

  SystemId sys_;
  HilbertDerivation deriv_;
  std::vector<Frame> frames_;
  std::size_t top_line_ = 0;
  std::set<std::string> used_vars_, used_consts_;
  std::size_t var_counter_ = 0, const_counter_ = 0;

  std::size_t push(Justification j, Formula f) {
    note_term_names(f);
    deriv_.lines.push_back(HilbertLine{std::move(j), std::move(f)});
    return deriv_.lines.size();
  }

  // Deduction-theorem transform over the segment [hyp, size()], discharging
  // the Hypothesis line hyp. Appends lines proving hyp -> X where needed and
  // returns the line proving hyp -> (formula at target).
  std::size_t discharge(std::size_t hyp, std::size_t target) {
    const std::size_t seg_end = deriv_.lines.size();
    const Formula a = formula_at(hyp);

    std::vector<char> dep(seg_end + 1, 0);
    dep[hyp] = 1;
    for (std::size_t i = hyp + 1; i <= seg_end; ++i) {
      const Justification& j = deriv_.lines[i - 1].just;
      if (j.kind == JKind::MP) dep[i] = dep[j.from1] || dep[j.from2];
    }

    if (!dep[target]) return weaken(target, a);

    // mark the dependent lines whose weakened form is actually needed
    std::vector<char> need(seg_end + 1, 0);
    need[target] = 1;
    for (std::size_t i = target + 1; i-- > hyp;) {
      if (!need[i] || !dep[i] || i == hyp) continue;
      const Justification& j = deriv_.lines[i - 1].just;
      if (j.kind != JKind::MP) continue;
      if (j.from1 == hyp && !dep[j.from2]) continue;  // short-circuit: A -> X is line from2
      if (dep[j.from1]) need[j.from1] = 1;
      if (dep[j.from2]) need[j.from2] = 1;
    }

    std::map<std::size_t, std::size_t> weak;  // original line -> line proving a -> X
    auto weak_of = [&](std::size_t i) -> std::size_t {
      auto it = weak.find(i);
      if (it != weak.end()) return it->second;
      std::size_t w = weaken(i, a);  // independent lines stay available as-is
      weak.emplace(i, w);
      return w;
    };
    for (std::size_t i = hyp; i <= target; ++i) {
      if (!need[i] || !dep[i]) continue;
      if (i == hyp) {
        weak[i] = imp_refl(a);
        continue;
      }
      const Justification& j = deriv_.lines[i - 1].just;
      if (j.from1 == hyp && !dep[j.from2]) {
        weak[i] = j.from2;
        continue;
      }
      weak[i] = mp_under(dep[j.from1] ? weak.at(j.from1) : weak_of(j.from1),
                         dep[j.from2] ? weak.at(j.from2) : weak_of(j.from2));
    }
    return weak.at(target);
  }
};

// ---------------------------------------------------------------------------
// The Deduction Theorem as a standalone transform: from a checked derivation
// with hypothesis A, produce one of |- A -> F (A discharged, every other
// hypothesis kept). By default the first hypothesis line is discharged.
// ---------------------------------------------------------------------------

inline HilbertDerivation deduction(const HilbertDerivation& d, SystemId sys,
                                   std::size_t hyp_line = 0,
                                   const std::optional<ConstantSpecification>& cs = {}) {
  HilbertCheckResult chk = check_derivation(d, sys, cs);
  if (!chk.ok) throw DerivationError("deduction: derivation does not check: " + chk.first_issue());
  std::vector<std::size_t> hyps = d.hypothesis_lines();
  if (hyps.empty()) throw DerivationError("deduction: no hypothesis to discharge");
  if (hyp_line == 0) hyp_line = hyps.front();
  if (d.lines[hyp_line - 1].just.kind != JKind::Hypothesis)
    throw DerivationError("deduction: line " + std::to_string(hyp_line) + " is not a hypothesis");

  DerivationBuilder b(sys);
  std::vector<std::size_t> remap(d.lines.size() + 1, 0);
  for (std::size_t i = 1; i <= d.lines.size(); ++i) {
    HilbertLine L = d.lines[i - 1];
    std::size_t f1 = L.just.from1 ? remap[L.just.from1] : 0;
    std::size_t f2 = L.just.from2 ? remap[L.just.from2] : 0;
    if (i == hyp_line) {
      remap[i] = b.begin_hypothesis(L.formula);
      continue;
    }
    switch (L.just.kind) {
      case JKind::Hypothesis: remap[i] = b.hypothesis(L.formula); break;
      case JKind::Axiom: remap[i] = b.axiom(L.formula); break;
      case JKind::CS: remap[i] = b.cs_line(L.just.constant, L.formula.body()); break;
      case JKind::MP: remap[i] = b.mp(f1, f2); break;
      case JKind::BoxNec: remap[i] = b.box_nec(f1); break;
      case JKind::AxiomNec: remap[i] = b.axiom_nec(f1, L.just.constant); break;
    }
  }
  std::size_t res = b.end_hypothesis(remap[d.lines.size()]);
  return b.take(res);
}

}  // namespace ielkit
