#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ielkit/sequent.hpp"

namespace ielkit {

// ---------------------------------------------------------------------------
// Terminating backward proof search for S4V-g / S4Vg.
//
// The search works in macro steps. Invertible propositional rules and the
// box-copying left rules (contraction folded in) are applied eagerly; the
// non-invertible steps - (=>[]), (=>V) and (=>[]V) "jumps" that discard
// whatever the figure does not allow - are choice points explored with
// backtracking. A branch is pruned when its kernel (both sides read as sets)
// repeats along the path; exhausting the loop-checked space without a proof
// is reported as saturation.
//
// Every returned derivation consists solely of primitive rule applications
// (macro steps are expanded through explicit contractions and weakenings), so
// it re-checks under check_derivation.
//
// Deterministic: formulas are always scanned in presentation order, so equal
// inputs yield identical derivations. The search is sequential; the result
// never depends on timing.
// ---------------------------------------------------------------------------

struct ProveBudget {
  std::size_t max_depth = 50;     // nesting of jump steps along a branch
  std::size_t max_nodes = 200000; // total macro nodes visited
};

enum class ProveStatus : std::uint8_t { Proved, SaturatedUnprovable, BudgetExhausted };

inline const char* prove_status_name(ProveStatus s) {
  switch (s) {
    case ProveStatus::Proved: return "proved";
    case ProveStatus::SaturatedUnprovable: return "saturated-unprovable";
    default: return "budget-exhausted";
  }
}

struct ProveResult {
  ProveStatus status = ProveStatus::SaturatedUnprovable;
  std::optional<SequentDerivation> derivation;  // present iff Proved
  std::size_t nodes_visited = 0;
};

namespace detail {

struct Kernel {
  std::vector<Formula> ant, succ;

  static std::vector<Formula> canon(const std::vector<Formula>& v) {
    std::vector<Formula> out = v;
    auto cmp = [](const Formula& a, const Formula& b) { return a.compare(b) < 0; };
    std::sort(out.begin(), out.end(), cmp);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  static Kernel of(const Sequent& s) { return Kernel{canon(s.ant), canon(s.succ)}; }

  friend bool operator<(const Kernel& a, const Kernel& b) {
    auto lex = [](const std::vector<Formula>& x, const std::vector<Formula>& y) {
      for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        int c = x[i].compare(y[i]);
        if (c != 0) return c;
      }
      return x.size() < y.size() ? -1 : (x.size() > y.size() ? 1 : 0);
    };
    int c = lex(a.ant, b.ant);
    if (c != 0) return c < 0;
    return lex(a.succ, b.succ) < 0;
  }
};

class Prover {
 public:
  Prover(SequentSystem system, ProveBudget budget) : system_(system), budget_(budget) {}

  std::optional<SequentNode> run(const Sequent& goal) { return solve(goal, {}, {}, 0); }

  bool budget_hit() const { return budget_hit_; }
  std::size_t nodes() const { return nodes_; }

 private:
  SequentSystem system_;
  ProveBudget budget_;
  std::set<Kernel> history_;
  std::size_t nodes_ = 0;
  bool budget_hit_ = false;

  static bool contains(const std::vector<Formula>& v, const Formula& f) {
    for (const Formula& g : v)
      if (g == f) return true;
    return false;
  }

  static std::vector<Formula> without(const std::vector<Formula>& v, std::size_t idx) {
    std::vector<Formula> out;
    out.reserve(v.size() - 1);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i != idx) out.push_back(v[i]);
    return out;
  }

  // wrap `inner` in weakening steps until its sequent grows into `target`
  static SequentNode weaken_to(SequentNode inner, const Sequent& target) {
    auto extras = [](const std::vector<Formula>& have, const std::vector<Formula>& want) {
      std::vector<char> used(have.size(), 0);
      std::vector<Formula> out;
      for (const Formula& f : want) {
        bool matched = false;
        for (std::size_t i = 0; i < have.size() && !matched; ++i) {
          if (!used[i] && have[i] == f) {
            used[i] = 1;
            matched = true;
          }
        }
        if (!matched) out.push_back(f);
      }
      return out;
    };
    for (const Formula& f : extras(inner.seq.ant, target.ant)) {
      Sequent s = inner.seq;
      s.ant.push_back(f);
      SequentNode n{std::move(s), RuleId::WeakL, {}};
      n.premises.push_back(std::move(inner));
      inner = std::move(n);
    }
    for (const Formula& f : extras(inner.seq.succ, target.succ)) {
      Sequent s = inner.seq;
      s.succ.push_back(f);
      SequentNode n{std::move(s), RuleId::WeakR, {}};
      n.premises.push_back(std::move(inner));
      inner = std::move(n);
    }
    return inner;
  }

  static SequentNode one(Sequent s, RuleId r, SequentNode premise) {
    SequentNode n{std::move(s), r, {}};
    n.premises.push_back(std::move(premise));
    return n;
  }

  static SequentNode two(Sequent s, RuleId r, SequentNode p1, SequentNode p2) {
    SequentNode n{std::move(s), r, {}};
    n.premises.push_back(std::move(p1));
    n.premises.push_back(std::move(p2));
    return n;
  }

  std::optional<SequentNode> solve(const Sequent& seq, std::set<Formula> copied_x,
                                   std::set<Formula> copied_v, std::size_t depth) {
    if (++nodes_ > budget_.max_nodes) {
      budget_hit_ = true;
      return std::nullopt;
    }

    // -- closure --
    for (const Formula& f : seq.ant) {
      if (f.kind() == Kind::Bottom)
        return weaken_to(SequentNode{Sequent{{Formula::bottom()}, {}}, RuleId::AxBot, {}}, seq);
      if (f.kind() == Kind::Atom && contains(seq.succ, f))
        return weaken_to(SequentNode{Sequent{{f}, {f}}, RuleId::AxAtom, {}}, seq);
    }

    // -- invertible, non-branching --
    for (std::size_t i = 0; i < seq.ant.size(); ++i) {
      if (seq.ant[i].kind() != Kind::And) continue;
      Formula a = seq.ant[i].left(), b = seq.ant[i].right();
      std::vector<Formula> others = without(seq.ant, i);
      Sequent prem{others, seq.succ};
      prem.ant.push_back(a);
      prem.ant.push_back(b);
      auto d = solve(prem, copied_x, copied_v, depth);
      if (!d) return std::nullopt;
      // C <- contr-l <- [G, A&B, A&B] <- and-l(A) <- [G, A&B, B]... built upward
      Sequent c3{others, seq.succ};
      c3.ant.push_back(seq.ant[i]);
      c3.ant.push_back(b);
      Sequent c2{others, seq.succ};
      c2.ant.push_back(seq.ant[i]);
      c2.ant.push_back(seq.ant[i]);
      return one(seq, RuleId::ContrL,
                 one(std::move(c2), RuleId::AndL, one(std::move(c3), RuleId::AndL, std::move(*d))));
    }
    for (std::size_t i = 0; i < seq.succ.size(); ++i) {
      if (seq.succ[i].kind() != Kind::Or) continue;
      Formula a = seq.succ[i].left(), b = seq.succ[i].right();
      std::vector<Formula> others = without(seq.succ, i);
      Sequent prem{seq.ant, others};
      prem.succ.push_back(a);
      prem.succ.push_back(b);
      auto d = solve(prem, copied_x, copied_v, depth);
      if (!d) return std::nullopt;
      Sequent c3{seq.ant, others};
      c3.succ.push_back(seq.succ[i]);
      c3.succ.push_back(b);
      Sequent c2{seq.ant, others};
      c2.succ.push_back(seq.succ[i]);
      c2.succ.push_back(seq.succ[i]);
      return one(seq, RuleId::ContrR,
                 one(std::move(c2), RuleId::OrR, one(std::move(c3), RuleId::OrR, std::move(*d))));
    }
    for (std::size_t i = 0; i < seq.succ.size(); ++i) {
      if (seq.succ[i].kind() != Kind::Implies) continue;
      Sequent prem{seq.ant, without(seq.succ, i)};
      prem.ant.push_back(seq.succ[i].left());
      prem.succ.push_back(seq.succ[i].right());
      auto d = solve(prem, copied_x, copied_v, depth);
      if (!d) return std::nullopt;
      return one(seq, RuleId::ImpR, std::move(*d));
    }

    // -- box copies (contraction folded into the modal left rules) --
    for (std::size_t i = 0; i < seq.ant.size(); ++i) {
      if (seq.ant[i].kind() != Kind::Box) continue;
      Formula x = seq.ant[i].body();
      if (copied_x.count(x)) continue;
      copied_x.insert(x);
      if (contains(seq.ant, x)) continue;
      Sequent prem = seq;
      prem.ant.push_back(x);
      auto d = solve(prem, copied_x, copied_v, depth);
      if (!d) return std::nullopt;
      Sequent c2 = seq;
      c2.ant.push_back(seq.ant[i]);
      return one(seq, RuleId::ContrL, one(std::move(c2), RuleId::BoxL, std::move(*d)));
    }
    for (std::size_t i = 0; i < seq.ant.size(); ++i) {
      if (seq.ant[i].kind() != Kind::Box) continue;
      Formula vx = Formula::ver(seq.ant[i].body());
      if (copied_v.count(vx)) continue;
      copied_v.insert(vx);
      if (contains(seq.ant, vx)) continue;
      Sequent prem = seq;
      prem.ant.push_back(vx);
      auto d = solve(prem, copied_x, copied_v, depth);
      if (!d) return std::nullopt;
      Sequent c2 = seq;
      c2.ant.push_back(seq.ant[i]);
      return one(seq, RuleId::ContrL, one(std::move(c2), RuleId::Interaction, std::move(*d)));
    }

    // -- invertible, branching --
    for (std::size_t i = 0; i < seq.ant.size(); ++i) {
      if (seq.ant[i].kind() != Kind::Or) continue;
      std::vector<Formula> others = without(seq.ant, i);
      Sequent p1{others, seq.succ}, p2{others, seq.succ};
      p1.ant.push_back(seq.ant[i].left());
      p2.ant.push_back(seq.ant[i].right());
      auto d1 = solve(p1, copied_x, copied_v, depth);
      if (!d1) return std::nullopt;
      auto d2 = solve(p2, copied_x, copied_v, depth);
      if (!d2) return std::nullopt;
      return two(seq, RuleId::OrL, std::move(*d1), std::move(*d2));
    }
    for (std::size_t i = 0; i < seq.succ.size(); ++i) {
      if (seq.succ[i].kind() != Kind::And) continue;
      std::vector<Formula> others = without(seq.succ, i);
      Sequent p1{seq.ant, others}, p2{seq.ant, others};
      p1.succ.push_back(seq.succ[i].left());
      p2.succ.push_back(seq.succ[i].right());
      auto d1 = solve(p1, copied_x, copied_v, depth);
      if (!d1) return std::nullopt;
      auto d2 = solve(p2, copied_x, copied_v, depth);
      if (!d2) return std::nullopt;
      return two(seq, RuleId::AndR, std::move(*d1), std::move(*d2));
    }
    for (std::size_t i = 0; i < seq.ant.size(); ++i) {
      if (seq.ant[i].kind() != Kind::Implies) continue;
      std::vector<Formula> others = without(seq.ant, i);
      Sequent p1{others, seq.succ}, p2{others, seq.succ};
      p1.succ.push_back(seq.ant[i].left());
      p2.ant.push_back(seq.ant[i].right());
      auto d1 = solve(p1, copied_x, copied_v, depth);
      if (!d1) return std::nullopt;
      auto d2 = solve(p2, copied_x, copied_v, depth);
      if (!d2) return std::nullopt;
      return two(seq, RuleId::ImpL, std::move(*d1), std::move(*d2));
    }

    // -- choice points --
    Kernel k = Kernel::of(seq);
    if (history_.count(k)) return std::nullopt;  // loop: prune
    if (depth + 1 > budget_.max_depth) {
      budget_hit_ = true;
      return std::nullopt;
    }
    history_.insert(k);
    std::optional<SequentNode> found;

    std::vector<Formula> boxes;
    for (const Formula& f : seq.ant)
      if (f.kind() == Kind::Box) boxes.push_back(f);

    for (std::size_t i = 0; i < seq.succ.size() && !found; ++i) {
      if (seq.succ[i].kind() != Kind::Box) continue;
      Sequent prem{boxes, {seq.succ[i].body()}};
      auto d = solve(prem, {}, {}, depth + 1);
      if (d) found = weaken_to(one(Sequent{boxes, {seq.succ[i]}}, RuleId::BoxR, std::move(*d)), seq);
    }
    for (std::size_t i = 0; i < seq.succ.size() && !found; ++i) {
      if (seq.succ[i].kind() != Kind::Ver) continue;
      std::vector<Formula> vers, stripped;
      for (const Formula& f : seq.ant)
        if (f.kind() == Kind::Ver) {
          vers.push_back(f);
          stripped.push_back(f.body());
        }
      Sequent prem{boxes, {seq.succ[i].body()}};
      prem.ant.insert(prem.ant.end(), stripped.begin(), stripped.end());
      auto d = solve(prem, {}, {}, depth + 1);
      if (d) {
        Sequent vr{boxes, {seq.succ[i]}};
        vr.ant.insert(vr.ant.end(), vers.begin(), vers.end());
        found = weaken_to(one(std::move(vr), RuleId::VR, std::move(*d)), seq);
      }
    }
    if (!found && system_ == SequentSystem::S4VG) {
      Sequent prem{seq.ant, {Formula::box(Formula::ver(Formula::bottom()))}};
      auto d = solve(prem, {}, {}, depth + 1);
      if (d) found = weaken_to(one(Sequent{seq.ant, {}}, RuleId::WIE, std::move(*d)), seq);
    }

    history_.erase(k);
    return found;
  }
};

}  // namespace detail

inline ProveResult prove(const Sequent& goal, SequentSystem system, ProveBudget budget = {}) {
  for (const Formula& f : goal.ant) require_language(f, Language::Modal, "prove");
  for (const Formula& f : goal.succ) require_language(f, Language::Modal, "prove");
  detail::Prover p(system, budget);
  ProveResult r;
  auto d = p.run(goal);
  r.nodes_visited = p.nodes();
  if (d) {
    r.status = ProveStatus::Proved;
    r.derivation = std::move(*d);
  } else {
    r.status = p.budget_hit() ? ProveStatus::BudgetExhausted : ProveStatus::SaturatedUnprovable;
  }
  return r;
}

}  // namespace ielkit
