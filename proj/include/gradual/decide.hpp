#pragma once

// The level-wise validity decision procedure and its helpers, in two
// engines.
//
// Both engines share the same skeleton: reduce the input to unit-chain
// expansion; at each object level, project the formula onto that level
// (squash), enumerate every truth assignment over the projected atoms,
// bail out as soon as one assignment falsifies the projection, and
// otherwise recurse on the obligation that remains for deeper levels
// (the residual).
//
// `faithful` transcribes the textbook pseudo-code as written, including
// its known defect: the residual step *deletes* non-chain constituents
// outright (an `x | F` with deletable x becomes F unconditionally), so
// a formula whose truth is settled at level 0 by a non-chain disjunct
// — e.g. top | (b > c) — is rejected even though it is valid. It is
// kept for study and is not the normative engine.
//
// `levelwise` replaces deletion with truth-value substitution plus
// top/bot simplification and is the normative engine: its contract is
// exact agreement with classify_oracle. Resolved chain prefixes are
// dropped rather than padded with top (a chain's level-k element and
// the k-th entry of any frame meet identically either way), so each
// recursive call sees chains positioned relative to the current level;
// the absolute level is threaded through for reporting only.

#include "gradual/core.hpp"
#include "gradual/reduce.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace gradual {

/// One level's truth assignment; top/bot/complement values are forced,
/// atoms without an entry read as false.
struct LevelInterpretation {
  std::size_t level = 0;
  std::map<AtomName, bool> assignment;

  int value(const SElem& s) const {
    switch (s.kind) {
      case SElem::Kind::Top: return 1;
      case SElem::Kind::Bot: return 0;
      case SElem::Kind::Lit: {
        auto it = assignment.find(s.name);
        bool v = it != assignment.end() && it->second;
        return (v != s.negated) ? 1 : 0;
      }
    }
    throw Error("unreachable");
  }
};

/// The all-top prefix of length k that addresses object level k.
inline Prefix to_seq(std::size_t k) {
  Prefix p;
  p.elems.assign(k, SElem::top());
  return p;
}

namespace detail {

inline std::vector<SElem> chain_elems(const Formula& f) {
  std::vector<SElem> elems;
  const Formula* cur = &f;
  while (cur->is(Op::Grad)) {
    elems.push_back(cur->left().leaf());
    cur = &cur->right();
  }
  elems.push_back(cur->leaf());
  return elems;
}

inline Formula chain_from(const std::vector<SElem>& elems, std::size_t begin, std::size_t end) {
  Formula f = Formula::elem(elems[end - 1]);
  for (std::size_t i = end - 1; i-- > begin;)
    f = Formula::grad(Formula::elem(elems[i]), std::move(f));
  return f;
}

inline bool has_chain(const Formula& f) {
  switch (f.op()) {
    case Op::Elem: return false;
    case Op::Grad: return true;
    case Op::Not: return has_chain(f.child());
    default: return has_chain(f.left()) || has_chain(f.right());
  }
}

} // namespace detail

/// Project onto levels 0..level: every unit chain with more than
/// level+1 elements keeps only its first level+1; everything else is
/// untouched.
inline Formula squash(const Formula& f, std::size_t level) {
  if (!is_unit_chain_expansion(f)) throw NotUnitChainError("squash: input not in unit chain expansion");
  switch (f.op()) {
    case Op::Elem: return f;
    case Op::Grad: {
      auto elems = detail::chain_elems(f);
      if (elems.size() <= level + 1) return f;
      return detail::chain_from(elems, 0, level + 1);
    }
    case Op::And: return Formula::conj(squash(f.left(), level), squash(f.right(), level));
    case Op::Or: return Formula::disj(squash(f.left(), level), squash(f.right(), level));
    case Op::Not: throw Error("unreachable");
  }
  throw Error("unreachable");
}

/// Distinct atom names in f, polarity-collapsed (a and a' are one
/// enumeration bit; the complement condition fixes one from the other).
inline std::size_t count_distinct(const Formula& f) { return atom_names(f).size(); }

namespace detail {

inline int eval_under(const Formula& f, const LevelInterpretation& interp) {
  switch (f.op()) {
    case Op::Elem: return interp.value(f.leaf());
    case Op::And: return eval_under(f.left(), interp) & eval_under(f.right(), interp);
    case Op::Or: return eval_under(f.left(), interp) | eval_under(f.right(), interp);
    case Op::Grad: {
      const Formula* cur = &f;
      while (cur->is(Op::Grad)) {
        if (interp.value(cur->left().leaf()) == 0) return 0;
        cur = &cur->right();
      }
      return interp.value(cur->leaf());
    }
    case Op::Not: throw Error("unreachable");
  }
  throw Error("unreachable");
}

} // namespace detail

/// True iff the level projection evaluates to 0 under this level's
/// interpretation. Expects squash output whose already-resolved chain
/// positions hold top, so looking every element up in the one
/// assignment is exact.
inline bool falsified_at(const Formula& f, const LevelInterpretation& interp) {
  if (!is_unit_chain_expansion(f)) throw NotUnitChainError("falsified_at: input not in unit chain expansion");
  return detail::eval_under(f, interp) == 0;
}

enum class DecideEngine { Faithful, Levelwise };

inline const char* to_string(DecideEngine e) {
  return e == DecideEngine::Faithful ? "faithful" : "levelwise";
}

namespace detail {

// levelwise residuation: non-chains and single elements become their
// truth value, a longer chain dies with its head or sheds it, and
// top/bot are simplified through and/or. Result is top (no remaining
// obligation), bot (this interpretation already falsifies), or a
// formula made of live chain tails.
inline Formula residual_levelwise(const Formula& f, const LevelInterpretation& interp) {
  switch (f.op()) {
    case Op::Elem: return interp.value(f.leaf()) ? Formula::top() : Formula::bot();
    case Op::Grad:
      return interp.value(f.left().leaf()) ? f.right() : Formula::bot();
    case Op::And: {
      Formula l = residual_levelwise(f.left(), interp);
      Formula r = residual_levelwise(f.right(), interp);
      if (l == Formula::bot() || r == Formula::bot()) return Formula::bot();
      if (l == Formula::top()) return r;
      if (r == Formula::top()) return l;
      return Formula::conj(std::move(l), std::move(r));
    }
    case Op::Or: {
      Formula l = residual_levelwise(f.left(), interp);
      Formula r = residual_levelwise(f.right(), interp);
      if (l == Formula::top() || r == Formula::top()) return Formula::top();
      if (l == Formula::bot()) return r;
      if (r == Formula::bot()) return l;
      return Formula::disj(std::move(l), std::move(r));
    }
    case Op::Not: throw Error("unreachable");
  }
  throw Error("unreachable");
}

// faithful residuation, pass 1: delete non-chains and chains consumed
// by the current level, one constituent at a time via sibling
// promotion. Deleting the last constituent leaves nothing (nullopt).
inline std::optional<Formula> faithful_delete_pass(const Formula& f, std::size_t level) {
  switch (f.op()) {
    case Op::Elem: return std::nullopt;
    case Op::Grad:
      return (chain_elems(f).size() <= level + 1) ? std::nullopt : std::optional<Formula>(f);
    case Op::And:
    case Op::Or: {
      auto l = faithful_delete_pass(f.left(), level);
      auto r = faithful_delete_pass(f.right(), level);
      if (!l) return r;
      if (!r) return l;
      return f.is(Op::And) ? Formula::conj(std::move(*l), std::move(*r))
                           : Formula::disj(std::move(*l), std::move(*r));
    }
    case Op::Not: throw Error("unreachable");
  }
  throw Error("unreachable");
}

// faithful residuation, pass 2: drop chains whose current-level element
// is 0 under the interpretation; replace surviving heads with top.
inline std::optional<Formula> faithful_chain_pass(const Formula& f, const LevelInterpretation& interp) {
  switch (f.op()) {
    case Op::Grad: {
      auto elems = chain_elems(f);
      if (interp.value(elems[interp.level]) == 0) return std::nullopt;
      elems[0] = SElem::top();
      return chain_from(elems, 0, elems.size());
    }
    case Op::And:
    case Op::Or: {
      auto l = faithful_chain_pass(f.left(), interp);
      auto r = faithful_chain_pass(f.right(), interp);
      if (!l) return r;
      if (!r) return l;
      return f.is(Op::And) ? Formula::conj(std::move(*l), std::move(*r))
                           : Formula::disj(std::move(*l), std::move(*r));
    }
    default: return f; // pass 1 has removed every non-chain constituent
  }
}

} // namespace detail

/// The obligation left for deeper levels once `interp` fixes the
/// current one; nullopt means none. In levelwise mode the resolved
/// head is dropped (relative positions); in faithful mode the head is
/// replaced with top and positions stay absolute.
inline std::optional<Formula> residual(const Formula& f, const LevelInterpretation& interp,
                                       DecideEngine mode) {
  if (!is_unit_chain_expansion(f)) throw NotUnitChainError("residual: input not in unit chain expansion");
  if (mode == DecideEngine::Levelwise) {
    Formula r = detail::residual_levelwise(f, interp);
    if (r == Formula::top()) return std::nullopt;
    return r;
  }
  auto kept = detail::faithful_delete_pass(f, interp.level);
  if (!kept) return std::nullopt;
  return detail::faithful_chain_pass(*kept, interp);
}

struct DecideReport {
  int result = 0; // 1 = valid, 0 = not
  DecideEngine engine = DecideEngine::Levelwise;
  std::uint64_t frames_examined = 0;
  std::size_t recursion_depth_max = 0; // nested level calls; top call is 1
};

namespace detail {

inline std::vector<AtomName> sorted_atoms(const Formula& f) {
  auto s = atom_names(f);
  return {s.begin(), s.end()};
}

inline LevelInterpretation interp_at(std::size_t level, const std::vector<AtomName>& atoms,
                                     std::uint64_t index) {
  LevelInterpretation li;
  li.level = level;
  std::size_t n = atoms.size();
  for (std::size_t j = 0; j < n; ++j)
    li.assignment[atoms[j]] = ((index >> (n - 1 - j)) & 1) != 0;
  return li;
}

inline int levelwise_rec(const Formula& f, std::size_t level, std::size_t nesting, DecideReport& rep) {
  rep.recursion_depth_max = std::max(rep.recursion_depth_max, nesting);
  Formula projected = squash(f, 0);
  auto atoms = sorted_atoms(projected);
  std::uint64_t combos = std::uint64_t{1} << atoms.size();
  for (std::uint64_t i = 0; i < combos; ++i) {
    LevelInterpretation li = interp_at(level, atoms, i);
    ++rep.frames_examined;
    if (falsified_at(projected, li)) return 0;
    Formula r = residual_levelwise(f, li);
    if (r == Formula::top()) continue;
    // bot here means some obligation is already impossible (a live
    // chain ending in bot, say), which the head-only projection above
    // cannot see
    if (r == Formula::bot()) return 0;
    if (levelwise_rec(r, level + 1, nesting + 1, rep) == 0) return 0;
  }
  return 1;
}

inline int faithful_rec(const Formula& f, std::size_t level, std::size_t nesting, DecideReport& rep) {
  rep.recursion_depth_max = std::max(rep.recursion_depth_max, nesting);
  Formula projected = squash(f, level);
  auto atoms = sorted_atoms(projected);
  std::uint64_t combos = std::uint64_t{1} << atoms.size();
  for (std::uint64_t i = 0; i < combos; ++i) {
    LevelInterpretation li = interp_at(level, atoms, i);
    ++rep.frames_examined;
    if (falsified_at(projected, li)) return 0;
    if (!has_chain(f)) continue;
    auto kept = faithful_delete_pass(f, level);
    std::optional<Formula> r = kept ? faithful_chain_pass(*kept, li) : std::nullopt;
    if (!r) continue;
    if (faithful_rec(*r, level + 1, nesting + 1, rep) == 0) return 0;
  }
  return 1;
}

} // namespace detail

/// Decide universal validity. The levelwise engine returns 1 exactly
/// when classify_oracle reports valid; the faithful engine reproduces
/// the transcription including its documented divergence.
inline DecideReport decide_valid(const Formula& f, DecideEngine engine = DecideEngine::Levelwise) {
  Formula uce = reduce(f);
  DecideReport rep;
  rep.engine = engine;
  rep.result = (engine == DecideEngine::Levelwise) ? detail::levelwise_rec(uce, 0, 1, rep)
                                                   : detail::faithful_rec(uce, 0, 1, rep);
  return rep;
}

namespace detail {

inline void collect_level_atoms(const Formula& g, std::size_t lvl, std::set<AtomName>& names) {
  switch (g.op()) {
    case Op::Elem:
      if (lvl == 0 && g.leaf().is_lit()) names.insert(g.leaf().name);
      return;
    case Op::Grad: {
      auto elems = chain_elems(g);
      if (elems.size() > lvl && elems[lvl].is_lit()) names.insert(elems[lvl].name);
      return;
    }
    case Op::And:
    case Op::Or:
      collect_level_atoms(g.left(), lvl, names);
      collect_level_atoms(g.right(), lvl, names);
      return;
    case Op::Not: return;
  }
}

} // namespace detail

/// Sum over levels of 2^(atoms occurring at that level) for a unit-chain
/// expansion; the levelwise engine's frames_examined stays within this
/// bound whenever at most one interpretation per level leaves a live
/// residual.
inline std::uint64_t level_enumeration_bound(const Formula& f) {
  std::size_t depth = max_object_level(f);
  std::uint64_t total = 0;
  for (std::size_t lvl = 0; lvl <= depth; ++lvl) {
    std::set<AtomName> names;
    detail::collect_level_atoms(f, lvl, names);
    total += std::uint64_t{1} << names.size();
  }
  return total;
}

} // namespace gradual
