#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ielkit/sequent.hpp"

namespace ielkit {

// ---------------------------------------------------------------------------
// Box-occurrence annotation. Every occurrence of [] in every sequent of a
// checked derivation receives an index; occurrences in corresponding formulas
// of premises and conclusions are related per the rule analysis, and families
// are the connected components of that relation. The rules preserve polarity,
// so every family is uniformly positive or negative; a family is essential
// iff one of its members is introduced by (=>[]).
// ---------------------------------------------------------------------------

struct FlatNode {
  Sequent seq;
  RuleId rule = RuleId::AxAtom;
  std::vector<std::size_t> premises;  // indices into the node table
  RuleMatch match;
};

struct BoxOccurrence {
  std::size_t node = 0;
  Occ occ;            // which formula of the sequent
  Position pos;       // where the box sits inside that formula
  Polarity polarity = Polarity::Positive;
  bool introduced = false;  // by (=>[]) at this node
};

struct BoxFamily {
  std::size_t id = 0;
  std::vector<std::size_t> members;  // occurrence ids
  Polarity polarity = Polarity::Positive;
  bool essential = false;
  std::size_t n_f = 0;  // number of (=>[]) introductions
};

class AnnotatedDerivation {
 public:
  const std::vector<FlatNode>& nodes() const { return nodes_; }
  const std::vector<BoxOccurrence>& occurrences() const { return occs_; }
  const std::vector<BoxFamily>& families() const { return families_; }

  std::size_t occurrence_id(std::size_t node, int side, std::size_t idx, const Position& pos) const {
    auto it = occ_index_.find(std::make_tuple(node, side, idx, pos));
    if (it == occ_index_.end())
      throw DerivationError("no box occurrence at node " + std::to_string(node) + ", side " +
                            std::to_string(side) + ", formula " + std::to_string(idx) + ", " +
                            position_to_string(pos));
    return it->second;
  }

  std::size_t family_of(std::size_t occ_id) const { return family_of_occ_[occ_id]; }

  std::size_t family_at(std::size_t node, int side, std::size_t idx, const Position& pos) const {
    return family_of(occurrence_id(node, side, idx, pos));
  }

  // node ids with children before parents, premises left to right
  const std::vector<std::size_t>& postorder() const { return postorder_; }

  const Formula& formula_at(std::size_t node, int side, std::size_t idx) const {
    const Sequent& s = nodes_[node].seq;
    return side == 0 ? s.ant[idx] : s.succ[idx];
  }

  static AnnotatedDerivation annotate(const SequentDerivation& d, SequentSystem system) {
    SequentVerdict v = check_derivation(d, system);
    if (!v.ok)
      throw DerivationError("annotate_boxes: derivation does not check: " + v.message +
                            (v.node_path.empty() ? "" : " at " + v.node_path));
    AnnotatedDerivation a;
    a.flatten(d, system);
    a.enumerate_occurrences();
    a.link_occurrences();
    a.build_families();
    return a;
  }

 private:
  std::vector<FlatNode> nodes_;
  std::vector<std::size_t> postorder_;
  std::vector<BoxOccurrence> occs_;
  std::map<std::tuple<std::size_t, int, std::size_t, Position>, std::size_t> occ_index_;
  std::vector<std::size_t> uf_;  // union-find over occurrence ids
  std::vector<std::size_t> family_of_occ_;
  std::vector<BoxFamily> families_;

  std::size_t uf_find(std::size_t x) {
    while (uf_[x] != x) x = uf_[x] = uf_[uf_[x]];
    return x;
  }
  void uf_union(std::size_t a, std::size_t b) { uf_[uf_find(a)] = uf_find(b); }

  std::size_t flatten_node(const SequentNode& n, SequentSystem system) {
    std::size_t id = nodes_.size();
    nodes_.push_back(FlatNode{n.seq, n.rule, {}, {}});
    std::vector<Sequent> prem;
    prem.reserve(n.premises.size());
    for (const SequentNode& p : n.premises) prem.push_back(p.seq);
    RuleAnalysis a = analyze_rule(n.seq, n.rule, prem, system);
    if (!a.ok()) throw DerivationError("annotate_boxes: " + a.error);  // checked already
    nodes_[id].match = *a.match;
    for (const SequentNode& p : n.premises) {
      std::size_t c = flatten_node(p, system);
      nodes_[id].premises.push_back(c);
    }
    return id;
  }

  void fill_postorder(std::size_t id) {
    for (std::size_t c : nodes_[id].premises) fill_postorder(c);
    postorder_.push_back(id);
  }

  void flatten(const SequentDerivation& d, SequentSystem system) {
    flatten_node(d, system);
    fill_postorder(0);
  }

  void enumerate_side(std::size_t node, int side, const std::vector<Formula>& fs) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (const Position& p : fs[i].positions_of(Kind::Box)) {
        Polarity in_formula = polarity_of(fs[i], p);
        Polarity pol = side == 0 ? flip(in_formula) : in_formula;
        occ_index_[std::make_tuple(node, side, i, p)] = occs_.size();
        occs_.push_back(BoxOccurrence{node, Occ{side, i}, p, pol, false});
      }
    }
  }

  void enumerate_occurrences() {
    for (std::size_t n = 0; n < nodes_.size(); ++n) {
      enumerate_side(n, 0, nodes_[n].seq.ant);
      enumerate_side(n, 1, nodes_[n].seq.succ);
    }
    uf_.resize(occs_.size());
    for (std::size_t i = 0; i < uf_.size(); ++i) uf_[i] = i;
  }

  static bool has_prefix(const Position& p, const Position& prefix) {
    if (p.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i)
      if (p[i] != prefix[i]) return false;
    return true;
  }

  void link_occurrences() {
    for (std::size_t n = 0; n < nodes_.size(); ++n) {
      const FlatNode& fn = nodes_[n];
      for (const OccLink& l : fn.match.links) {
        std::size_t child = fn.premises[l.premise];
        const Formula& pf = formula_at(child, l.from.side, l.from.idx);
        for (const Position& p : pf.positions_of(Kind::Box)) {
          if (!has_prefix(p, l.from_sub)) continue;
          Position rest(p.begin() + l.from_sub.size(), p.end());
          Position to = l.to_sub;
          to.insert(to.end(), rest.begin(), rest.end());
          uf_union(occurrence_id(child, l.from.side, l.from.idx, p),
                   occurrence_id(n, l.to.side, l.to.idx, to));
        }
      }
      if (fn.match.introduces_box) {
        std::size_t id = occurrence_id(n, 1, 0, Position{});
        occs_[id].introduced = true;
      }
    }
  }

  void build_families() {
    family_of_occ_.assign(occs_.size(), 0);
    std::map<std::size_t, std::size_t> root_to_family;
    for (std::size_t i = 0; i < occs_.size(); ++i) {
      std::size_t r = uf_find(i);
      auto [it, fresh] = root_to_family.emplace(r, families_.size());
      if (fresh) {
        families_.push_back(BoxFamily{families_.size(), {}, occs_[i].polarity, false, 0});
      }
      BoxFamily& f = families_[it->second];
      f.members.push_back(i);
      family_of_occ_[i] = f.id;
      if (occs_[i].polarity != f.polarity)
        throw DerivationError("box family " + std::to_string(f.id) +
                              " mixes polarities; the rules should preserve them");
      if (occs_[i].introduced) ++f.n_f;
    }
    for (BoxFamily& f : families_) f.essential = f.n_f > 0;
  }
};

// Spec-facing aliases.
inline AnnotatedDerivation annotate_boxes(const SequentDerivation& d, SequentSystem system) {
  return AnnotatedDerivation::annotate(d, system);
}

inline std::vector<BoxFamily> compute_families(const AnnotatedDerivation& a) {
  return a.families();
}

}  // namespace ielkit
