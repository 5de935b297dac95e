#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ielkit/formula.hpp"
#include "ielkit/print.hpp"

namespace ielkit {

// ---------------------------------------------------------------------------
// Sequents: Gamma => Delta with multisets on both sides. The vectors carry an
// arbitrary presentation order; all rule checking is multiset-based.
// ---------------------------------------------------------------------------

struct Sequent {
  std::vector<Formula> ant, succ;

  friend bool operator==(const Sequent& a, const Sequent& b) {
    return multiset_equal(a.ant, b.ant) && multiset_equal(a.succ, b.succ);
  }

  static bool multiset_equal(const std::vector<Formula>& x, const std::vector<Formula>& y) {
    if (x.size() != y.size()) return false;
    std::vector<Formula> a = x, b = y;
    auto cmp = [](const Formula& l, const Formula& r) { return l.compare(r) < 0; };
    std::sort(a.begin(), a.end(), cmp);
    std::sort(b.begin(), b.end(), cmp);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return false;
    return true;
  }
};

inline std::string print(const Sequent& s, const PrintOptions& o = {}) {
  std::string out;
  for (std::size_t i = 0; i < s.ant.size(); ++i) {
    if (i) out += ", ";
    out += print(s.ant[i], o);
  }
  out += s.ant.empty() ? "=>" : " =>";
  for (std::size_t i = 0; i < s.succ.size(); ++i) {
    out += i ? ", " : " ";
    out += print(s.succ[i], o);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The calculi S4V-g and S4Vg: G1c structural and propositional rules plus the
// box, V, interaction and weak-inconsistency-elimination rules.
// ---------------------------------------------------------------------------

enum class SequentSystem : std::uint8_t { S4VminusG, S4VG };

inline const char* sequent_system_name(SequentSystem s) {
  return s == SequentSystem::S4VminusG ? "s4v-g" : "s4vg";
}

inline std::optional<SequentSystem> sequent_system_from_name(const std::string& n) {
  if (n == "s4v-g" || n == "s4vminus-g" || n == "s4vminusg") return SequentSystem::S4VminusG;
  if (n == "s4vg") return SequentSystem::S4VG;
  return std::nullopt;
}

enum class RuleId : std::uint8_t {
  AxAtom, AxBot, WeakL, WeakR, ContrL, ContrR,
  AndL, AndR, OrL, OrR, ImpL, ImpR,
  BoxL, BoxR, VR, Interaction, WIE
};

inline const char* rule_name(RuleId r) {
  switch (r) {
    case RuleId::AxAtom: return "ax";
    case RuleId::AxBot: return "ax-bot";
    case RuleId::WeakL: return "weak-l";
    case RuleId::WeakR: return "weak-r";
    case RuleId::ContrL: return "contr-l";
    case RuleId::ContrR: return "contr-r";
    case RuleId::AndL: return "and-l";
    case RuleId::AndR: return "and-r";
    case RuleId::OrL: return "or-l";
    case RuleId::OrR: return "or-r";
    case RuleId::ImpL: return "imp-l";
    case RuleId::ImpR: return "imp-r";
    case RuleId::BoxL: return "box-l";
    case RuleId::BoxR: return "box-r";
    case RuleId::VR: return "v-r";
    case RuleId::Interaction: return "interaction";
    case RuleId::WIE: return "wie";
  }
  return "?";
}

inline std::optional<RuleId> rule_from_name(const std::string& n) {
  static const std::pair<const char*, RuleId> table[] = {
      {"ax", RuleId::AxAtom},       {"ax-bot", RuleId::AxBot},
      {"weak-l", RuleId::WeakL},    {"weak-r", RuleId::WeakR},
      {"contr-l", RuleId::ContrL},  {"contr-r", RuleId::ContrR},
      {"and-l", RuleId::AndL},      {"and-r", RuleId::AndR},
      {"or-l", RuleId::OrL},        {"or-r", RuleId::OrR},
      {"imp-l", RuleId::ImpL},      {"imp-r", RuleId::ImpR},
      {"box-l", RuleId::BoxL},      {"box-r", RuleId::BoxR},
      {"v-r", RuleId::VR},          {"interaction", RuleId::Interaction},
      {"wie", RuleId::WIE}};
  for (const auto& [name, id] : table)
    if (n == name) return id;
  return std::nullopt;
}

inline std::size_t rule_premise_count(RuleId r) {
  switch (r) {
    case RuleId::AxAtom:
    case RuleId::AxBot: return 0;
    case RuleId::AndR:
    case RuleId::OrL:
    case RuleId::ImpL: return 2;
    default: return 1;
  }
}

struct SequentNode {
  Sequent seq;
  RuleId rule = RuleId::AxAtom;
  std::vector<SequentNode> premises;
};
using SequentDerivation = SequentNode;

// ---------------------------------------------------------------------------
// Rule analysis. A successful analysis pins down, deterministically, which
// occurrence is principal and how every premise occurrence corresponds to a
// conclusion occurrence. Box families are read off these correspondences:
// boxes at from_sub + q in the premise formula match boxes at to_sub + q in
// the conclusion formula.
// ---------------------------------------------------------------------------

struct Occ {
  int side = 0;  // 0 = antecedent, 1 = succedent
  std::size_t idx = 0;
};

struct OccLink {
  std::size_t premise = 0;
  Occ from;           // occurrence in that premise
  Occ to;             // occurrence in the conclusion
  Position from_sub;  // subtree of the premise formula that persists
  Position to_sub;    // where it sits inside the conclusion formula
};

struct RuleMatch {
  RuleId rule = RuleId::AxAtom;
  std::optional<Occ> principal;       // in the conclusion
  std::vector<OccLink> links;
  bool introduces_box = false;        // (=>[]): conclusion succ 0 carries a new box
};

namespace detail {

// First-fit multiset matching of the non-skipped `from` entries into distinct
// non-skipped `to` entries with equal formulas.
struct MsMatch {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> to_leftover;
};

inline std::optional<MsMatch> match_into(const std::vector<Formula>& from,
                                         const std::vector<Formula>& to,
                                         std::vector<char> from_skip = {},
                                         std::vector<char> to_skip = {}) {
  from_skip.resize(from.size(), 0);
  to_skip.resize(to.size(), 0);
  MsMatch m;
  std::vector<char> used = to_skip;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (from_skip[i]) continue;
    bool found = false;
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (used[j]) continue;
      if (from[i] == to[j]) {
        used[j] = 1;
        m.pairs.emplace_back(i, j);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  for (std::size_t j = 0; j < to.size(); ++j)
    if (!used[j]) m.to_leftover.push_back(j);
  return m;
}

inline void add_ctx_links(RuleMatch& m, std::size_t premise, int side, const MsMatch& ms) {
  for (const auto& [from, to] : ms.pairs)
    m.links.push_back(OccLink{premise, Occ{side, from}, Occ{side, to}, {}, {}});
}

}  // namespace detail

struct RuleAnalysis {
  std::optional<RuleMatch> match;
  std::string error;

  bool ok() const { return match.has_value(); }
};

inline RuleAnalysis analyze_rule(const Sequent& c, RuleId rule,
                                 const std::vector<Sequent>& premises, SequentSystem system) {
  using detail::add_ctx_links;
  using detail::match_into;
  auto fail = [](std::string msg) {
    RuleAnalysis r;
    r.error = std::move(msg);
    return r;
  };
  auto done = [](RuleMatch m) {
    RuleAnalysis r;
    r.match = std::move(m);
    return r;
  };
  if (premises.size() != rule_premise_count(rule))
    return fail(std::string(rule_name(rule)) + " expects " +
                std::to_string(rule_premise_count(rule)) + " premise(s), got " +
                std::to_string(premises.size()));

  RuleMatch m;
  m.rule = rule;

  switch (rule) {
    case RuleId::AxAtom: {
      if (c.ant.size() != 1 || c.succ.size() != 1 || c.ant[0] != c.succ[0] ||
          c.ant[0].kind() != Kind::Atom)
        return fail("axiom must be exactly P => P with P atomic");
      return done(m);
    }
    case RuleId::AxBot: {
      if (c.ant.size() != 1 || !c.succ.empty() || c.ant[0].kind() != Kind::Bottom)
        return fail("axiom must be exactly _|_ =>");
      return done(m);
    }
    case RuleId::WeakL:
    case RuleId::WeakR: {
      const bool left = rule == RuleId::WeakL;
      const auto& cs = left ? c.ant : c.succ;
      const auto& ps = left ? premises[0].ant : premises[0].succ;
      const auto& co = left ? c.succ : c.ant;
      const auto& po = left ? premises[0].succ : premises[0].ant;
      auto side_match = match_into(ps, cs);
      if (!side_match || side_match->to_leftover.size() != 1)
        return fail("conclusion must add exactly one formula to the premise");
      auto other = match_into(po, co);
      if (!other || !other->to_leftover.empty())
        return fail("the untouched side must agree");
      m.principal = Occ{left ? 0 : 1, side_match->to_leftover[0]};
      add_ctx_links(m, 0, left ? 0 : 1, *side_match);
      add_ctx_links(m, 0, left ? 1 : 0, *other);
      return done(m);
    }
    case RuleId::ContrL:
    case RuleId::ContrR: {
      const bool left = rule == RuleId::ContrL;
      const auto& cs = left ? c.ant : c.succ;
      const auto& ps = left ? premises[0].ant : premises[0].succ;
      const auto& co = left ? c.succ : c.ant;
      const auto& po = left ? premises[0].succ : premises[0].ant;
      // the conclusion side embeds into the premise side with one leftover
      auto side_match = match_into(cs, ps);
      if (!side_match || side_match->to_leftover.size() != 1)
        return fail("premise must have exactly one extra copy");
      std::size_t extra = side_match->to_leftover[0];
      // the extra copy must duplicate a formula present in the conclusion
      std::size_t target = cs.size();
      for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs[i] == ps[extra]) {
          target = i;
          break;
        }
      if (target == cs.size()) return fail("contracted formula is missing from the conclusion");
      auto other = match_into(po, co);
      if (!other || !other->to_leftover.empty()) return fail("the untouched side must agree");
      m.principal = Occ{left ? 0 : 1, target};
      int side = left ? 0 : 1;
      for (const auto& [to, from] : side_match->pairs)  // note: matched c -> p
        m.links.push_back(OccLink{0, Occ{side, from}, Occ{side, to}, {}, {}});
      m.links.push_back(OccLink{0, Occ{side, extra}, Occ{side, target}, {}, {}});
      add_ctx_links(m, 0, left ? 1 : 0, *other);
      return done(m);
    }
    case RuleId::AndL:
    case RuleId::OrR: {
      // single-premise component rule: A&B on the left / A|B on the right,
      // premise replaces it by one component
      const bool left = rule == RuleId::AndL;
      const Kind want = left ? Kind::And : Kind::Or;
      const auto& cs = left ? c.ant : c.succ;
      const auto& ps = left ? premises[0].ant : premises[0].succ;
      const auto& co = left ? c.succ : c.ant;
      const auto& po = left ? premises[0].succ : premises[0].ant;
      auto other = match_into(po, co);
      if (!other || !other->to_leftover.empty()) return fail("the untouched side must agree");
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].kind() != want) continue;
        for (unsigned variant = 0; variant < 2; ++variant) {
          Formula comp = variant == 0 ? cs[i].left() : cs[i].right();
          // find the active occurrence in the premise, then match the rest
          std::vector<char> c_skip(cs.size(), 0);
          c_skip[i] = 1;
          for (std::size_t j = 0; j < ps.size(); ++j) {
            if (ps[j] != comp) continue;
            std::vector<char> p_skip(ps.size(), 0);
            p_skip[j] = 1;
            auto rest = match_into(ps, cs, p_skip, c_skip);
            if (!rest || !rest->to_leftover.empty()) continue;
            int side = left ? 0 : 1;
            m.principal = Occ{side, i};
            add_ctx_links(m, 0, side, *rest);
            add_ctx_links(m, 0, left ? 1 : 0, *other);
            m.links.push_back(OccLink{0, Occ{side, j}, Occ{side, i}, {}, {variant}});
            return done(m);
          }
        }
      }
      return fail(left ? "no conjunction admits this and-l figure" : "no disjunction admits this or-r figure");
    }
    case RuleId::AndR:
    case RuleId::OrL: {
      // two-premise component rule
      const bool right = rule == RuleId::AndR;
      const Kind want = right ? Kind::And : Kind::Or;
      const auto& cs = right ? c.succ : c.ant;
      const auto& co = right ? c.ant : c.succ;
      const int side = right ? 1 : 0;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].kind() != want) continue;
        bool all_ok = true;
        RuleMatch trial;
        trial.rule = rule;
        trial.principal = Occ{side, i};
        for (std::size_t p = 0; p < 2 && all_ok; ++p) {
          const auto& ps = right ? premises[p].succ : premises[p].ant;
          const auto& po = right ? premises[p].ant : premises[p].succ;
          Formula comp = p == 0 ? cs[i].left() : cs[i].right();
          auto other = match_into(po, co);
          if (!other || !other->to_leftover.empty()) {
            all_ok = false;
            break;
          }
          std::vector<char> c_skip(cs.size(), 0);
          c_skip[i] = 1;
          bool found = false;
          for (std::size_t j = 0; j < ps.size() && !found; ++j) {
            if (ps[j] != comp) continue;
            std::vector<char> p_skip(ps.size(), 0);
            p_skip[j] = 1;
            auto rest = match_into(ps, cs, p_skip, c_skip);
            if (!rest || !rest->to_leftover.empty()) continue;
            add_ctx_links(trial, p, side, *rest);
            add_ctx_links(trial, p, right ? 0 : 1, *other);
            trial.links.push_back(
                OccLink{p, Occ{side, j}, Occ{side, i}, {}, {static_cast<unsigned>(p)}});
            found = true;
          }
          all_ok = found;
        }
        if (all_ok) return done(std::move(trial));
      }
      return fail(right ? "no conjunction admits this and-r figure" : "no disjunction admits this or-l figure");
    }
    case RuleId::ImpL: {
      // premise 0: G => D, A ; premise 1: G, B => D ; conclusion G, A->B => D
      for (std::size_t i = 0; i < c.ant.size(); ++i) {
        if (c.ant[i].kind() != Kind::Implies) continue;
        Formula a = c.ant[i].left(), b = c.ant[i].right();
        std::vector<char> skip_i(c.ant.size(), 0);
        skip_i[i] = 1;
        // premise 0
        auto p0_ant = match_into(premises[0].ant, c.ant, {}, skip_i);
        if (!p0_ant || !p0_ant->to_leftover.empty()) continue;
        bool ok0 = false;
        RuleMatch trial;
        trial.rule = rule;
        trial.principal = Occ{0, i};
        for (std::size_t j = 0; j < premises[0].succ.size() && !ok0; ++j) {
          if (premises[0].succ[j] != a) continue;
          std::vector<char> p_skip(premises[0].succ.size(), 0);
          p_skip[j] = 1;
          auto rest = match_into(premises[0].succ, c.succ, p_skip);
          if (!rest || !rest->to_leftover.empty()) continue;
          add_ctx_links(trial, 0, 0, *p0_ant);
          add_ctx_links(trial, 0, 1, *rest);
          trial.links.push_back(OccLink{0, Occ{1, j}, Occ{0, i}, {}, {0}});
          ok0 = true;
        }
        if (!ok0) continue;
        // premise 1
        auto p1_succ = match_into(premises[1].succ, c.succ);
        if (!p1_succ || !p1_succ->to_leftover.empty()) continue;
        bool ok1 = false;
        for (std::size_t j = 0; j < premises[1].ant.size() && !ok1; ++j) {
          if (premises[1].ant[j] != b) continue;
          std::vector<char> p_skip(premises[1].ant.size(), 0);
          p_skip[j] = 1;
          auto rest = match_into(premises[1].ant, c.ant, p_skip, skip_i);
          if (!rest || !rest->to_leftover.empty()) continue;
          add_ctx_links(trial, 1, 0, *rest);
          add_ctx_links(trial, 1, 1, *p1_succ);
          trial.links.push_back(OccLink{1, Occ{0, j}, Occ{0, i}, {}, {1}});
          ok1 = true;
        }
        if (ok1) return done(std::move(trial));
      }
      return fail("no implication admits this imp-l figure");
    }
    case RuleId::ImpR: {
      // premise: G, A => D, B ; conclusion: G => D, A->B
      for (std::size_t i = 0; i < c.succ.size(); ++i) {
        if (c.succ[i].kind() != Kind::Implies) continue;
        Formula a = c.succ[i].left(), b = c.succ[i].right();
        std::vector<char> skip_i(c.succ.size(), 0);
        skip_i[i] = 1;
        for (std::size_t ja = 0; ja < premises[0].ant.size(); ++ja) {
          if (premises[0].ant[ja] != a) continue;
          std::vector<char> a_skip(premises[0].ant.size(), 0);
          a_skip[ja] = 1;
          auto ant_rest = match_into(premises[0].ant, c.ant, a_skip);
          if (!ant_rest || !ant_rest->to_leftover.empty()) continue;
          for (std::size_t jb = 0; jb < premises[0].succ.size(); ++jb) {
            if (premises[0].succ[jb] != b) continue;
            std::vector<char> b_skip(premises[0].succ.size(), 0);
            b_skip[jb] = 1;
            auto succ_rest = match_into(premises[0].succ, c.succ, b_skip, skip_i);
            if (!succ_rest || !succ_rest->to_leftover.empty()) continue;
            m.principal = Occ{1, i};
            add_ctx_links(m, 0, 0, *ant_rest);
            add_ctx_links(m, 0, 1, *succ_rest);
            m.links.push_back(OccLink{0, Occ{0, ja}, Occ{1, i}, {}, {0}});
            m.links.push_back(OccLink{0, Occ{1, jb}, Occ{1, i}, {}, {1}});
            return done(std::move(m));
          }
        }
      }
      return fail("no implication admits this imp-r figure");
    }
    case RuleId::BoxL:
    case RuleId::Interaction: {
      // box-l:        G, X => D   /  G, []X => D
      // interaction:  G, V X => D /  G, []X => D
      const bool inter = rule == RuleId::Interaction;
      auto succ_match = match_into(premises[0].succ, c.succ);
      if (!succ_match || !succ_match->to_leftover.empty())
        return fail("succedent must agree");
      for (std::size_t i = 0; i < c.ant.size(); ++i) {
        if (c.ant[i].kind() != Kind::Box) continue;
        Formula active = inter ? Formula::ver(c.ant[i].body()) : c.ant[i].body();
        std::vector<char> skip_i(c.ant.size(), 0);
        skip_i[i] = 1;
        for (std::size_t j = 0; j < premises[0].ant.size(); ++j) {
          if (premises[0].ant[j] != active) continue;
          std::vector<char> p_skip(premises[0].ant.size(), 0);
          p_skip[j] = 1;
          auto rest = match_into(premises[0].ant, c.ant, p_skip, skip_i);
          if (!rest || !rest->to_leftover.empty()) continue;
          m.principal = Occ{0, i};
          add_ctx_links(m, 0, 0, *rest);
          add_ctx_links(m, 0, 1, *succ_match);
          // box-l: the whole premise formula is the body of []X.
          // interaction: only the bodies correspond; the conclusion box is new.
          if (inter)
            m.links.push_back(OccLink{0, Occ{0, j}, Occ{0, i}, {0}, {0}});
          else
            m.links.push_back(OccLink{0, Occ{0, j}, Occ{0, i}, {}, {0}});
          return done(std::move(m));
        }
      }
      return fail(inter ? "no box admits this interaction figure" : "no box admits this box-l figure");
    }
    case RuleId::BoxR: {
      // []G => X  /  []G => []X ; antecedent entirely boxed, succedent single
      if (c.succ.size() != 1 || c.succ[0].kind() != Kind::Box)
        return fail("succedent must be a single boxed formula");
      for (const Formula& g : c.ant)
        if (g.kind() != Kind::Box) return fail("antecedent must be entirely boxed");
      if (premises[0].succ.size() != 1 || premises[0].succ[0] != c.succ[0].body())
        return fail("premise succedent must be exactly the unboxed formula");
      auto ant_match = match_into(premises[0].ant, c.ant);
      if (!ant_match || !ant_match->to_leftover.empty())
        return fail("antecedent must agree");
      m.principal = Occ{1, 0};
      add_ctx_links(m, 0, 0, *ant_match);
      m.links.push_back(OccLink{0, Occ{1, 0}, Occ{1, 0}, {}, {0}});
      m.introduces_box = true;
      return done(std::move(m));
    }
    case RuleId::VR: {
      // []Theta, G => X  /  []Theta, V G => V X
      if (c.succ.size() != 1 || c.succ[0].kind() != Kind::Ver)
        return fail("succedent must be a single V formula");
      for (const Formula& g : c.ant)
        if (g.kind() != Kind::Box && g.kind() != Kind::Ver)
          return fail("antecedent must consist of boxed and V formulas only");
      if (premises[0].succ.size() != 1 || premises[0].succ[0] != c.succ[0].body())
        return fail("premise succedent must be exactly the un-V'ed formula");
      std::vector<char> used(premises[0].ant.size(), 0);
      for (std::size_t i = 0; i < c.ant.size(); ++i) {
        Formula want = c.ant[i].kind() == Kind::Box ? c.ant[i] : c.ant[i].body();
        bool found = false;
        for (std::size_t j = 0; j < premises[0].ant.size() && !found; ++j) {
          if (used[j] || premises[0].ant[j] != want) continue;
          used[j] = 1;
          if (c.ant[i].kind() == Kind::Box)
            m.links.push_back(OccLink{0, Occ{0, j}, Occ{0, i}, {}, {}});
          else
            m.links.push_back(OccLink{0, Occ{0, j}, Occ{0, i}, {}, {0}});
          found = true;
        }
        if (!found) return fail("premise antecedent does not fit the v-r figure");
      }
      for (std::size_t j = 0; j < premises[0].ant.size(); ++j)
        if (!used[j]) return fail("premise antecedent has extra formulas");
      m.principal = Occ{1, 0};
      m.links.push_back(OccLink{0, Occ{1, 0}, Occ{1, 0}, {}, {0}});
      return done(std::move(m));
    }
    case RuleId::WIE: {
      // G => []V_|_  /  G =>    (S4Vg only)
      if (system != SequentSystem::S4VG)
        return fail("wie is available only in s4vg");
      if (!c.succ.empty()) return fail("conclusion succedent must be empty");
      Formula bvb = Formula::box(Formula::ver(Formula::bottom()));
      if (premises[0].succ.size() != 1 || premises[0].succ[0] != bvb)
        return fail("premise succedent must be exactly []V_|_");
      auto ant_match = match_into(premises[0].ant, c.ant);
      if (!ant_match || !ant_match->to_leftover.empty())
        return fail("antecedent must agree");
      add_ctx_links(m, 0, 0, *ant_match);
      // the []V_|_ occurrence disappears; its box links to nothing below
      return done(std::move(m));
    }
  }
  return fail("unknown rule");
}

struct SequentVerdict {
  bool ok = false;
  std::string message;
  std::string node_path;  // slash-separated premise indices from the root
};

// Figure check per the paper: accepts iff the conclusion/premises instantiate
// the rule, including its side conditions.
inline SequentVerdict check_rule_application(const Sequent& conclusion, RuleId rule,
                                             const std::vector<Sequent>& premises,
                                             SequentSystem system) {
  RuleAnalysis a = analyze_rule(conclusion, rule, premises, system);
  SequentVerdict v;
  v.ok = a.ok();
  v.message = a.error;
  return v;
}

namespace detail {

inline bool check_node(const SequentNode& n, SequentSystem system, std::string path,
                       SequentVerdict& out) {
  for (const Formula& f : n.seq.ant)
    if (!in_language(f, Language::Modal)) {
      out = {false, "formula '" + print(f) + "' is not modal", path};
      return false;
    }
  for (const Formula& f : n.seq.succ)
    if (!in_language(f, Language::Modal)) {
      out = {false, "formula '" + print(f) + "' is not modal", path};
      return false;
    }
  std::vector<Sequent> prem;
  prem.reserve(n.premises.size());
  for (const SequentNode& p : n.premises) prem.push_back(p.seq);
  RuleAnalysis a = analyze_rule(n.seq, n.rule, prem, system);
  if (!a.ok()) {
    out = {false, std::string(rule_name(n.rule)) + ": " + a.error, path};
    return false;
  }
  for (std::size_t i = 0; i < n.premises.size(); ++i)
    if (!check_node(n.premises[i], system, path + "/" + std::to_string(i), out)) return false;
  return true;
}

}  // namespace detail

// Accepts iff every node instantiates its rule and the leaves are axioms; on
// failure reports the path to the first offending node.
inline SequentVerdict check_derivation(const SequentDerivation& d, SequentSystem system) {
  SequentVerdict v;
  if (detail::check_node(d, system, "", v)) {
    v.ok = true;
    v.message = "";
    v.node_path = "";
  }
  return v;
}

inline std::size_t count_nodes(const SequentNode& n) {
  std::size_t c = 1;
  for (const SequentNode& p : n.premises) c += count_nodes(p);
  return c;
}

}  // namespace ielkit
