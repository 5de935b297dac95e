#include <catch2/catch_amalgamated.hpp>

#include "ielkit/parse.hpp"
#include "ielkit/sequent.hpp"

using namespace ielkit;

namespace {
Formula M(const std::string& s) { return parse(s, Language::Modal); }
Sequent S(const std::string& s) {
  auto [ant, succ] = parse_sequent_parts(s);
  return Sequent{ant, succ};
}
}  // namespace

TEST_CASE("check_rule_application: spec examples") {
  // (=>V): premise []p, q => q, conclusion []p, V q => V q
  REQUIRE(check_rule_application(S("[]p, Vq => Vq"), RuleId::VR, {S("[]p, q => q")},
                                 SequentSystem::S4VminusG)
              .ok);
  // interaction: premise G, Vp => D, conclusion G, []p => D
  REQUIRE(check_rule_application(S("q, []p => r"), RuleId::Interaction, {S("q, Vp => r")},
                                 SequentSystem::S4VminusG)
              .ok);
  // (=>[]) with a non-boxed antecedent member is rejected
  SequentVerdict v = check_rule_application(S("p, []q => []r"), RuleId::BoxR, {S("p, []q => r")},
                                            SequentSystem::S4VminusG);
  REQUIRE_FALSE(v.ok);
  REQUIRE(v.message.find("entirely boxed") != std::string::npos);
}

TEST_CASE("check_rule_application: structural rules") {
  REQUIRE(check_rule_application(S("p, q => r"), RuleId::WeakL, {S("p => r")},
                                 SequentSystem::S4VminusG)
              .ok);
  REQUIRE(check_rule_application(S("p => r, q"), RuleId::WeakR, {S("p => r")},
                                 SequentSystem::S4VminusG)
              .ok);
  REQUIRE(check_rule_application(S("p => r"), RuleId::ContrL, {S("p, p => r")},
                                 SequentSystem::S4VminusG)
              .ok);
  REQUIRE_FALSE(check_rule_application(S("p => r"), RuleId::ContrL, {S("q, q => r")},
                                       SequentSystem::S4VminusG)
                    .ok);
  REQUIRE_FALSE(check_rule_application(S("p, q => r"), RuleId::WeakL, {S("p, s => r")},
                                       SequentSystem::S4VminusG)
                    .ok);
}

TEST_CASE("check_rule_application: propositional figures") {
  REQUIRE(check_rule_application(S("p & q => p"), RuleId::AndL, {S("p => p")},
                                 SequentSystem::S4VminusG)
              .ok);
  REQUIRE(check_rule_application(S("p & q => q"), RuleId::AndL, {S("q => q")},
                                 SequentSystem::S4VminusG)
              .ok);
  REQUIRE(check_rule_application(S("p => p & q"), RuleId::AndR, {S("p => p"), S("p => q")},
                                 SequentSystem::S4VminusG)
              .ok);
  REQUIRE_FALSE(check_rule_application(S("p => p & q"), RuleId::AndR, {S("p => q"), S("p => p")},
                                       SequentSystem::S4VminusG)
                    .ok);  // premise order is fixed
  REQUIRE(check_rule_application(S("p | q => r"), RuleId::OrL, {S("p => r"), S("q => r")},
                                 SequentSystem::S4VminusG)
              .ok);
  REQUIRE(check_rule_application(S("p => q | p"), RuleId::OrR, {S("p => p")},
                                 SequentSystem::S4VminusG)
              .ok);
  REQUIRE(check_rule_application(S("p -> q, p => q"), RuleId::ImpL,
                                 {S("p => q, p"), S("p, q => q")}, SequentSystem::S4VminusG)
              .ok);
  REQUIRE(check_rule_application(S("=> p -> p"), RuleId::ImpR, {S("p => p")},
                                 SequentSystem::S4VminusG)
              .ok);
}

TEST_CASE("check_rule_application: axioms are exact") {
  REQUIRE(check_rule_application(S("p => p"), RuleId::AxAtom, {}, SequentSystem::S4VminusG).ok);
  REQUIRE_FALSE(
      check_rule_application(S("p, q => p"), RuleId::AxAtom, {}, SequentSystem::S4VminusG).ok);
  REQUIRE_FALSE(
      check_rule_application(S("[]p => []p"), RuleId::AxAtom, {}, SequentSystem::S4VminusG).ok);
  REQUIRE(check_rule_application(S("_|_ =>"), RuleId::AxBot, {}, SequentSystem::S4VminusG).ok);
  REQUIRE_FALSE(check_rule_application(S("_|_ => p"), RuleId::AxBot, {}, SequentSystem::S4VminusG).ok);
}

namespace {
// hand-built derivation of => ~[]V_|_ in S4Vg:
//   []V_|_ => []V_|_   (identity expansion)
//   []V_|_ =>          (wie)
//   []V_|_ => _|_      (weak-r)
//   => ~[]V_|_         (imp-r)
SequentNode wie_example() {
  // leaf must be exactly _|_ => ; expand identity from it
  SequentNode leaf{S("_|_ =>"), RuleId::AxBot, {}};
  SequentNode wk{S("_|_ => _|_"), RuleId::WeakR, {}};
  wk.premises.push_back(leaf);
  SequentNode vstep{S("V_|_ => V_|_"), RuleId::VR, {}};
  vstep.premises.push_back(wk);
  SequentNode bl{S("[]V_|_ => V_|_"), RuleId::BoxL, {}};
  bl.premises.push_back(vstep);
  SequentNode br{S("[]V_|_ => []V_|_"), RuleId::BoxR, {}};
  br.premises.push_back(bl);
  SequentNode wie{S("[]V_|_ =>"), RuleId::WIE, {}};
  wie.premises.push_back(br);
  SequentNode wr{S("[]V_|_ => _|_"), RuleId::WeakR, {}};
  wr.premises.push_back(wie);
  SequentNode ir{S("=> ~[]V_|_"), RuleId::ImpR, {}};
  ir.premises.push_back(wr);
  return ir;
}
}  // namespace

TEST_CASE("check_derivation: hand-built wie proof (spec example)") {
  SequentNode d = wie_example();
  SequentVerdict ok = check_derivation(d, SequentSystem::S4VG);
  INFO(ok.message << " at " << ok.node_path);
  REQUIRE(ok.ok);

  // the same tree is rejected in s4v-g, at the wie node
  SequentVerdict bad = check_derivation(d, SequentSystem::S4VminusG);
  REQUIRE_FALSE(bad.ok);
  REQUIRE(bad.node_path == "/0/0");
  REQUIRE(bad.message.find("wie") != std::string::npos);
}

TEST_CASE("check_derivation: single-node atomic axiom (spec example)") {
  SequentNode d{S("p => p"), RuleId::AxAtom, {}};
  REQUIRE(check_derivation(d, SequentSystem::S4VminusG).ok);
}

TEST_CASE("check_derivation: rejects non-modal formulas") {
  SequentNode d{Sequent{{parse("K p", Language::Iel)}, {parse("K p", Language::Iel)}},
                RuleId::AxAtom,
                {}};
  SequentVerdict v = check_derivation(d, SequentSystem::S4VminusG);
  REQUIRE_FALSE(v.ok);
  REQUIRE(v.message.find("not modal") != std::string::npos);
}

TEST_CASE("analyze_rule: correspondence links for the annotator") {
  // box-l: the premise body maps into the conclusion under the box
  RuleAnalysis a = analyze_rule(S("[]p, q => r"), RuleId::BoxL, {S("p, q => r")},
                                SequentSystem::S4VminusG);
  REQUIRE(a.ok());
  bool saw_active = false;
  for (const OccLink& l : a.match->links) {
    if (l.to.side == 0 && l.to.idx == 0) {
      REQUIRE(l.to_sub == Position{0});
      REQUIRE(l.from_sub == Position{});
      saw_active = true;
    }
  }
  REQUIRE(saw_active);

  // contraction: both premise copies map to the one conclusion occurrence
  RuleAnalysis c = analyze_rule(S("[]p => r"), RuleId::ContrL, {S("[]p, []p => r")},
                                SequentSystem::S4VminusG);
  REQUIRE(c.ok());
  int to_concl = 0;
  for (const OccLink& l : c.match->links)
    if (l.to.side == 0 && l.to.idx == 0) ++to_concl;
  REQUIRE(to_concl == 2);

  // box-r introduces the succedent box
  RuleAnalysis b = analyze_rule(S("[]p => []q"), RuleId::BoxR, {S("[]p => q")},
                                SequentSystem::S4VminusG);
  REQUIRE(b.ok());
  REQUIRE(b.match->introduces_box);
}
