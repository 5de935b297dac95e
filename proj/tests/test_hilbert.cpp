#include <catch2/catch_amalgamated.hpp>

#include "ielkit/hilbert.hpp"
#include "ielkit/parse.hpp"

using namespace ielkit;

namespace {
Formula I(const std::string& s) { return parse(s, Language::Iel); }
Formula M(const std::string& s) { return parse(s, Language::Modal); }
Formula E(const std::string& s) { return parse(s, Language::Explicit); }
}  // namespace

TEST_CASE("match_axiom: spec examples") {
  REQUIRE(match_axiom(M("V(p -> q) -> (V p -> V q)"), SystemId::S4Vminus) == "a1");
  REQUIRE(match_axiom(E("x:p -> V p"), SystemId::LPVminus) == "e6");
  REQUIRE_FALSE(match_axiom(M("V p -> p"), SystemId::S4V).has_value());
}

TEST_CASE("match_axiom: schema coverage") {
  REQUIRE(match_axiom(I("p -> (q -> p)"), SystemId::IELminus) == "pc1");
  REQUIRE(match_axiom(I("K(p -> q) -> (K p -> K q)"), SystemId::IELminus) == "ie1");
  REQUIRE(match_axiom(I("p -> K p"), SystemId::IELminus) == "ie2");
  REQUIRE(match_axiom(I("K p -> ~~p"), SystemId::IEL) == "ie3");
  REQUIRE(match_axiom(I("~K _|_"), SystemId::IEL) == "ie3b");
  REQUIRE_FALSE(match_axiom(I("K p -> ~~p"), SystemId::IELminus).has_value());
  REQUIRE_FALSE(match_axiom(I("~~p -> p"), SystemId::IELminus).has_value());  // pc10 is classical
  REQUIRE(match_axiom(M("~~[]p -> []p"), SystemId::S4Vminus) == "pc10");
  REQUIRE(match_axiom(M("[]p -> [][]p"), SystemId::S4Vminus) == "s44");
  REQUIRE(match_axiom(M("[]p -> V p"), SystemId::S4Vminus) == "a2");
  REQUIRE(match_axiom(M("~[]V _|_"), SystemId::S4V) == "a3");
  REQUIRE_FALSE(match_axiom(M("~[]V _|_"), SystemId::S4Vminus).has_value());
  REQUIRE(match_axiom(E("x:(p -> q) -> (y:p -> x * y:q)"), SystemId::LP) == "e1");
  REQUIRE(match_axiom(E("x:p -> p"), SystemId::LP) == "e2");
  REQUIRE(match_axiom(E("x:p -> !x:x:p"), SystemId::LP) == "e3");
  REQUIRE(match_axiom(E("x:p -> (y + x):p"), SystemId::LP) == "e4a");
  REQUIRE(match_axiom(E("x:p -> (x + y):p"), SystemId::LP) == "e4b");
  REQUIRE(match_axiom(E("~x:V _|_"), SystemId::LPV) == "e7");
  REQUIRE_FALSE(match_axiom(E("~x:V _|_"), SystemId::LPVminus).has_value());
  // metavariable consistency: t must be the same term on both sides
  REQUIRE_FALSE(match_axiom(E("x:p -> !y:x:p"), SystemId::LP).has_value());
  REQUIRE_THROWS_AS(match_axiom(E("x:V p"), SystemId::LP), LanguageError);  // LP has no V
  // match listing respects schema order
  auto all = matching_schemas(E("x:(p -> (q -> p)) -> (p -> (q -> p))"), SystemId::LPVminus);
  REQUIRE(all == std::vector<std::string>{"e2"});
}

TEST_CASE("validate_cs: spec examples") {
  ConstantSpecification ok;
  ok.add("c", E("p -> (q -> p)"));
  REQUIRE(validate_cs(ok, SystemId::LPVminus).ok);

  ConstantSpecification bad;
  bad.add("c", E("V p -> p"));
  CsVerdict v = validate_cs(bad, SystemId::LPVminus);
  REQUIRE_FALSE(v.ok);
  REQUIRE(v.offenders.size() == 1);

  REQUIRE(validate_cs(ConstantSpecification{}, SystemId::LPVminus).ok);
}

TEST_CASE("validate_cs: injective mode is behind a flag") {
  ConstantSpecification cs;
  cs.add("c", E("p -> (q -> p)"));
  cs.add("c", E("x:p -> p"));
  REQUIRE(validate_cs(cs, SystemId::LPVminus).ok);
  REQUIRE_FALSE(validate_cs(cs, SystemId::LPVminus, /*require_injective=*/true).ok);
}

TEST_CASE("check_derivation: IE2 application (spec example)") {
  HilbertDerivation d;
  d.lines.push_back({Justification::hypothesis(), I("p")});
  d.lines.push_back({Justification::axiom("ie2"), I("p -> K p")});
  d.lines.push_back({Justification::mp(1, 2), I("K p")});
  HilbertCheckResult r = check_derivation(d, SystemId::IELminus);
  REQUIRE(r.ok);
  REQUIRE(r.conclusion == I("K p"));
  REQUIRE(replay_derivation(d, SystemId::IELminus));
}

TEST_CASE("check_derivation: reflection is not an axiom (spec example)") {
  HilbertDerivation d;
  d.lines.push_back({Justification::axiom(), I("K p -> p")});
  HilbertCheckResult r = check_derivation(d, SystemId::IEL);
  REQUIRE_FALSE(r.ok);
  REQUIRE(r.issues.front().message.find("no schema") != std::string::npos);
}

TEST_CASE("check_derivation: axiom necessitation feeding e3 (spec example)") {
  Formula pc1 = E("p -> (q -> p)");
  HilbertDerivation d;
  d.lines.push_back({Justification::axiom("pc1"), pc1});
  d.lines.push_back({Justification::axiom_nec(1, "c"), E("c:(p -> (q -> p))")});
  d.lines.push_back({Justification::axiom("e3"), E("c:(p -> (q -> p)) -> !c:c:(p -> (q -> p))")});
  d.lines.push_back({Justification::mp(2, 3), E("!c:c:(p -> (q -> p))")});
  HilbertCheckResult r = check_derivation(d, SystemId::LPVminus);
  REQUIRE(r.ok);
  ConstantSpecification want;
  want.add("c", pc1);
  REQUIRE(r.used_cs == want);
  REQUIRE(replay_derivation(d, SystemId::LPVminus));
}

TEST_CASE("check_derivation: modes") {
  Formula pc1 = E("p -> (q -> p)");
  ConstantSpecification cs;
  cs.add("c", pc1);

  // CS mode: CS lines work, axiom necessitation is forbidden
  HilbertDerivation d1;
  d1.lines.push_back({Justification::cs("c"), E("c:(p -> (q -> p))")});
  REQUIRE(check_derivation(d1, SystemId::LPVminus, cs).ok);
  REQUIRE_FALSE(check_derivation(d1, SystemId::LPVminus).ok);  // rule mode rejects CS lines

  HilbertDerivation d2;
  d2.lines.push_back({Justification::axiom("pc1"), pc1});
  d2.lines.push_back({Justification::axiom_nec(1, "c"), E("c:(p -> (q -> p))")});
  REQUIRE(check_derivation(d2, SystemId::LPVminus).ok);
  REQUIRE_FALSE(check_derivation(d2, SystemId::LPVminus, cs).ok);

  // CS-mode checking reports the referenced entries
  HilbertCheckResult r = check_derivation(d1, SystemId::LPVminus, cs);
  REQUIRE(r.used_cs == cs);

  // an invalid CS is rejected up front
  ConstantSpecification bad;
  bad.add("c", E("V p -> p"));
  REQUIRE_FALSE(check_derivation(d1, SystemId::LPVminus, bad).ok);
}

TEST_CASE("check_derivation: per-line diagnoses") {
  SECTION("bad index") {
    HilbertDerivation d;
    d.lines.push_back({Justification::mp(1, 2), I("p")});
    HilbertCheckResult r = check_derivation(d, SystemId::IELminus);
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.issues.front().index == 1);
  }
  SECTION("mp mismatch") {
    HilbertDerivation d;
    d.lines.push_back({Justification::hypothesis(), I("p")});
    d.lines.push_back({Justification::hypothesis(), I("q -> r")});
    d.lines.push_back({Justification::mp(1, 2), I("r")});
    HilbertCheckResult r = check_derivation(d, SystemId::IELminus);
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.issues.front().message.find("MP mismatch") != std::string::npos);
  }
  SECTION("box necessitation under open hypotheses") {
    HilbertDerivation d;
    d.lines.push_back({Justification::hypothesis(), M("p")});
    d.lines.push_back({Justification::box_nec(1), M("[]p")});
    HilbertCheckResult r = check_derivation(d, SystemId::S4V);
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.issues.front().message.find("open hypotheses") != std::string::npos);
  }
  SECTION("box necessitation needs a box system") {
    HilbertDerivation d;
    d.lines.push_back({Justification::axiom(), E("p -> (q -> p)")});
    d.lines.push_back({Justification::box_nec(1), E("p -> (q -> p)")});
    REQUIRE_FALSE(check_derivation(d, SystemId::LPV).ok);
  }
  SECTION("axiom necessitation premise must be an axiom line") {
    HilbertDerivation d;
    d.lines.push_back({Justification::hypothesis(), E("p -> (q -> p)")});
    d.lines.push_back({Justification::axiom_nec(1, "c"), E("c:(p -> (q -> p))")});
    HilbertCheckResult r = check_derivation(d, SystemId::LPVminus);
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.issues.front().message.find("not an axiom line") != std::string::npos);
  }
  SECTION("language mismatch") {
    HilbertDerivation d;
    d.lines.push_back({Justification::hypothesis(), M("[]p")});
    REQUIRE_FALSE(check_derivation(d, SystemId::IELminus).ok);
  }
}

TEST_CASE("box necessitation in S4V") {
  HilbertDerivation d;
  d.lines.push_back({Justification::axiom(), M("[]p -> p")});
  d.lines.push_back({Justification::box_nec(1), M("[]([]p -> p)")});
  d.lines.push_back({Justification::axiom(), M("[]([]p -> p) -> V([]p -> p)")});
  d.lines.push_back({Justification::mp(2, 3), M("V([]p -> p)")});
  REQUIRE(check_derivation(d, SystemId::S4Vminus).ok);
  REQUIRE(replay_derivation(d, SystemId::S4Vminus));
}

TEST_CASE("prune keeps exactly the reachable lines") {
  HilbertDerivation d;
  d.lines.push_back({Justification::axiom(), I("p -> (q -> p)")});   // dead
  d.lines.push_back({Justification::hypothesis(), I("p")});
  d.lines.push_back({Justification::axiom("ie2"), I("p -> K p")});
  d.lines.push_back({Justification::axiom(), I("q -> (p -> q)")});   // dead
  d.lines.push_back({Justification::mp(2, 3), I("K p")});
  HilbertDerivation p = prune(d);
  REQUIRE(p.size() == 3);
  REQUIRE(p.conclusion() == I("K p"));
  REQUIRE(check_derivation(p, SystemId::IELminus).ok);
}
