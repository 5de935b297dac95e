#include <catch2/catch_amalgamated.hpp>

#include "ielkit/lift.hpp"
#include "ielkit/parse.hpp"
#include "ielkit/print.hpp"

using namespace ielkit;

namespace {
Formula E(const std::string& s) { return parse(s, Language::Explicit); }

void check_rule_mode(const HilbertDerivation& d, SystemId sys, const Formula& conclusion) {
  HilbertCheckResult r = check_derivation(d, sys);
  INFO(r.first_issue());
  REQUIRE(r.ok);
  REQUIRE(r.conclusion == conclusion);
}
}  // namespace

TEST_CASE("internalize: a single axiom becomes a quoted constant (spec example)") {
  HilbertDerivation d;
  d.lines.push_back({Justification::axiom(), E("p -> (q -> p)")});
  InternalizeResult r = internalize(d, SystemId::LPVminus);
  REQUIRE(r.term.kind() == TermKind::Const);
  REQUIRE(r.term.is_ground());
  REQUIRE(r.derivation.hypothesis_lines().empty());
  check_rule_mode(r.derivation, SystemId::LPVminus,
                  Formula::evid(r.term, E("p -> (q -> p)")));
  ConstantSpecification want;
  want.add(r.term.name(), E("p -> (q -> p)"));
  REQUIRE(r.cs == want);
}

TEST_CASE("internalize: quoted hypothesis uses the proof checker (spec example)") {
  HilbertDerivation d;
  d.lines.push_back({Justification::hypothesis(), E("y:q")});
  InternalizeResult r = internalize(d, SystemId::LPVminus);
  REQUIRE(r.term == ProofTerm::bang(ProofTerm::var("y")));
  HilbertCheckResult chk = check_derivation(r.derivation, SystemId::LPVminus);
  REQUIRE(chk.ok);
  REQUIRE(chk.conclusion == E("!y:y:q"));
  // the hypothesis y:q itself is kept
  auto hyps = r.derivation.hypothesis_lines();
  REQUIRE(hyps.size() == 1);
  REQUIRE(r.derivation.lines[hyps[0] - 1].formula == E("y:q"));
}

TEST_CASE("internalize: MP becomes application (spec example)") {
  HilbertDerivation d;
  d.lines.push_back({Justification::hypothesis(), E("p -> q")});
  d.lines.push_back({Justification::hypothesis(), E("p")});
  d.lines.push_back({Justification::mp(2, 1), E("q")});
  InternalizeResult r = internalize(d, SystemId::LPVminus);
  // both hypotheses are plain: fresh x1 (for p -> q), x2 (for p); term x1 * x2
  REQUIRE(r.plain_vars.size() == 2);
  ProofTerm x1 = ProofTerm::var(r.plain_vars[0].first);
  ProofTerm x2 = ProofTerm::var(r.plain_vars[1].first);
  REQUIRE(r.term == ProofTerm::app(x1, x2));
  HilbertCheckResult chk = check_derivation(r.derivation, SystemId::LPVminus);
  REQUIRE(chk.ok);
  REQUIRE(chk.conclusion == Formula::evid(r.term, E("q")));
  // hypotheses are x1:(p->q) and x2:p
  auto hyps = r.derivation.hypothesis_lines();
  REQUIRE(hyps.size() == 2);
}

TEST_CASE("internalize: hypothesis-free derivations give ground terms") {
  // |- q -> (p -> p): weaken imp_refl
  DerivationBuilder b(SystemId::LPV);
  std::size_t i = b.imp_refl(E("p"));
  std::size_t w = b.weaken(i, E("q"));
  HilbertDerivation d = b.snapshot(w);
  InternalizeResult r = internalize(d, SystemId::LPV);
  REQUIRE(r.term.is_ground());
  check_rule_mode(r.derivation, SystemId::LPV, Formula::evid(r.term, E("q -> (p -> p)")));
}

TEST_CASE("internalize: CS lines are re-derived with the same constant") {
  ConstantSpecification cs;
  cs.add("c", E("p -> (q -> p)"));
  HilbertDerivation d;
  d.lines.push_back({Justification::cs("c"), E("c:(p -> (q -> p))")});
  InternalizeResult r = internalize(d, SystemId::LPVminus, cs);
  REQUIRE(r.term == ProofTerm::bang(ProofTerm::constant("c")));
  check_rule_mode(r.derivation, SystemId::LPVminus, E("!c:c:(p -> (q -> p))"));
}

TEST_CASE("internalize: axiom necessitation lines lift through e3") {
  HilbertDerivation d;
  d.lines.push_back({Justification::axiom(), E("p -> (q -> p)")});
  d.lines.push_back({Justification::axiom_nec(1, "b"), E("b:(p -> (q -> p))")});
  InternalizeResult r = internalize(d, SystemId::LPVminus);
  REQUIRE(r.term == ProofTerm::bang(ProofTerm::constant("b")));
  check_rule_mode(r.derivation, SystemId::LPVminus, E("!b:b:(p -> (q -> p))"));
}

TEST_CASE("v_lift: empty contexts give V-necessitation (Lemma 1)") {
  DerivationBuilder b(SystemId::LPVminus);
  std::size_t i = b.imp_refl(E("p"));
  HilbertDerivation d = b.snapshot(i);
  VLiftResult r = v_lift(d, SystemId::LPVminus, 0, 0);
  check_rule_mode(r.derivation, SystemId::LPVminus, E("V(p -> p)"));
}

TEST_CASE("v_lift: V-monotonicity on identity (spec example)") {
  // from |- p -> p produce |- V p -> V p
  DerivationBuilder b(SystemId::LPVminus);
  std::size_t i = b.imp_refl(E("p"));
  HilbertDerivation d = b.snapshot(i);
  VLiftResult r = v_lift(d, SystemId::LPVminus, 0, 1);
  check_rule_mode(r.derivation, SystemId::LPVminus, E("V p -> V p"));
}

TEST_CASE("v_lift: conjunction context (spec example)") {
  // from |- (p & q) -> p produce |- (V p & V q) -> V p
  DerivationBuilder b(SystemId::LPVminus);
  std::size_t h = b.begin_hypothesis(E("p & q"));
  std::size_t p = b.and_elim_l(h);
  std::size_t res = b.end_hypothesis(p);
  HilbertDerivation d = b.take(res);
  VLiftResult r = v_lift(d, SystemId::LPVminus, 0, 2);
  check_rule_mode(r.derivation, SystemId::LPVminus, E("(V p & V q) -> V p"));
}

TEST_CASE("v_lift: quoted slots stay unlifted") {
  // from |- (x:p & q) -> (q & x:p) produce |- (x:p & V q) -> V(q & x:p)
  DerivationBuilder b(SystemId::LPV);
  std::size_t h = b.begin_hypothesis(E("x:p & q"));
  auto comps = b.split_conj(h, 2);
  std::size_t sw = b.build_conj({comps[1], comps[0]});
  std::size_t res = b.end_hypothesis(sw);
  HilbertDerivation d = b.take(res);
  VLiftResult r = v_lift(d, SystemId::LPV, 1, 1);
  check_rule_mode(r.derivation, SystemId::LPV, E("(x:p & V q) -> V(q & x:p)"));
}

TEST_CASE("v_lift: mixed slot order via the mask interface") {
  // from |- (q & x:p) -> q produce |- (V q & x:p) -> V q
  DerivationBuilder b(SystemId::LPVminus);
  std::size_t h = b.begin_hypothesis(E("q & x:p"));
  std::size_t q = b.and_elim_l(h);
  std::size_t res = b.end_hypothesis(q);
  HilbertDerivation d = b.take(res);
  VLiftResult r = v_lift(d, SystemId::LPVminus, {LiftSlot::Lifted, LiftSlot::Quoted});
  check_rule_mode(r.derivation, SystemId::LPVminus, E("(V q & x:p) -> V q"));
}

TEST_CASE("v_lift: rejects bad inputs") {
  DerivationBuilder b(SystemId::LPVminus);
  std::size_t i = b.imp_refl(E("p"));
  HilbertDerivation d = b.snapshot(i);
  REQUIRE_THROWS_AS(v_lift(d, SystemId::LP, 0, 0), DerivationError);       // no V in LP
  REQUIRE_THROWS_AS(v_lift(d, SystemId::LPVminus, 0, 2), DerivationError);  // p is no conjunction
  HilbertDerivation hyp;
  hyp.lines.push_back({Justification::hypothesis(), E("p")});
  REQUIRE_THROWS_AS(v_lift(hyp, SystemId::LPVminus, 0, 0), DerivationError);  // not closed
}
