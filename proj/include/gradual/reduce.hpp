#pragma once

// The nine rewrite rules that eliminate `not` and flatten nested `>`
// structure, full normalization to unit-chain expansion (with traces),
// the canonical negation procedure recursive_reduce, and DNF/CNF over
// unit chains.
//
//   NEG1   !s            ->  s^c                      (s an S-element)
//   NEG2   !(F1 & F2)    ->  !F1 | !F2
//   NEG3   !(F1 | F2)    ->  !F1 & !F2
//   NEG4   !(s > F2)     ->  s^c | (s > !F2)          (s an S-element)
//   GRAD1  (F1 > F2) > F3 -> (F1 > F3) & ((F1 > F2) | (F1 > F2 > F3))
//   GRAD2  (F1 & F2) > F3 -> (F1 > F3) & (F2 > F3)
//   GRAD3  (F1 | F2) > F3 -> (F1 > F3) | (F2 > F3)
//   GRAD4  F1 > (F2 & F3) -> (F1 > F2) & (F1 > F3)
//   GRAD5  F1 > (F2 | F3) -> (F1 > F2) | (F1 > F3)

#include "gradual/core.hpp"
#include "gradual/parser.hpp"

#include <cstdint>
#include <random>
#include <sstream>
#include <vector>

namespace gradual {

enum class Rule { NEG1, NEG2, NEG3, NEG4, GRAD1, GRAD2, GRAD3, GRAD4, GRAD5 };

inline const char* to_string(Rule r) {
  switch (r) {
    case Rule::NEG1: return "NEG1";
    case Rule::NEG2: return "NEG2";
    case Rule::NEG3: return "NEG3";
    case Rule::NEG4: return "NEG4";
    case Rule::GRAD1: return "GRAD1";
    case Rule::GRAD2: return "GRAD2";
    case Rule::GRAD3: return "GRAD3";
    case Rule::GRAD4: return "GRAD4";
    case Rule::GRAD5: return "GRAD5";
  }
  return "?";
}

/// Path from the root: 0 = left/only child, 1 = right child.
using Path = std::vector<int>;

inline std::string to_string(const Path& p) {
  if (p.empty()) return "/";
  std::string s;
  for (int i : p) s += '/' + std::to_string(i);
  return s;
}

struct ReductionStep {
  Rule rule;
  Path position;
  Formula before; // whole formula before the step
  Formula after;  // whole formula after; differs only under `position`
};

struct Trace {
  Formula initial;
  std::vector<ReductionStep> steps;
  Formula final;
};

inline Formula subterm(const Formula& f, const Path& p) {
  const Formula* cur = &f;
  for (int i : p) {
    switch (cur->op()) {
      case Op::Not:
        if (i != 0) throw Error("bad path: `not` has a single child");
        cur = &cur->child();
        break;
      case Op::Elem: throw Error("bad path: descends into a leaf");
      default: cur = (i == 0) ? &cur->left() : &cur->right();
    }
  }
  return *cur;
}

namespace detail {

inline Formula replace_at(const Formula& f, const Path& p, std::size_t depth, const Formula& repl) {
  if (depth == p.size()) return repl;
  int i = p[depth];
  switch (f.op()) {
    case Op::Not: return Formula::neg(replace_at(f.child(), p, depth + 1, repl));
    case Op::And:
      return (i == 0) ? Formula::conj(replace_at(f.left(), p, depth + 1, repl), f.right())
                      : Formula::conj(f.left(), replace_at(f.right(), p, depth + 1, repl));
    case Op::Or:
      return (i == 0) ? Formula::disj(replace_at(f.left(), p, depth + 1, repl), f.right())
                      : Formula::disj(f.left(), replace_at(f.right(), p, depth + 1, repl));
    case Op::Grad:
      return (i == 0) ? Formula::grad(replace_at(f.left(), p, depth + 1, repl), f.right())
                      : Formula::grad(f.left(), replace_at(f.right(), p, depth + 1, repl));
    case Op::Elem: throw Error("bad path: descends into a leaf");
  }
  throw Error("unreachable");
}

/// Rules whose left-hand side matches at this node.
inline void redexes_at(const Formula& g, std::vector<Rule>& out) {
  out.clear();
  if (g.is(Op::Not)) {
    const Formula& a = g.child();
    switch (a.op()) {
      case Op::Elem: out.push_back(Rule::NEG1); break;
      case Op::And: out.push_back(Rule::NEG2); break;
      case Op::Or: out.push_back(Rule::NEG3); break;
      case Op::Grad:
        if (a.left().is(Op::Elem)) out.push_back(Rule::NEG4);
        break;
      case Op::Not: break; // no rule matches a doubled `not` directly
    }
    return;
  }
  if (g.is(Op::Grad)) {
    switch (g.left().op()) {
      case Op::Grad: out.push_back(Rule::GRAD1); break;
      case Op::And: out.push_back(Rule::GRAD2); break;
      case Op::Or: out.push_back(Rule::GRAD3); break;
      default: break;
    }
    switch (g.right().op()) {
      case Op::And: out.push_back(Rule::GRAD4); break;
      case Op::Or: out.push_back(Rule::GRAD5); break;
      default: break;
    }
  }
}

/// Right-hand side for `rule` applied at the root of `g`; throws if the
/// left-hand side does not match.
inline Formula rewrite_root(const Formula& g, Rule rule) {
  auto mismatch = [&]() -> Formula {
    throw Error(std::string("rule ") + to_string(rule) + " does not apply here");
  };
  switch (rule) {
    case Rule::NEG1: {
      if (!g.is(Op::Not) || !g.child().is(Op::Elem)) return mismatch();
      return Formula::elem(g.child().leaf().complement());
    }
    case Rule::NEG2: {
      if (!g.is(Op::Not) || !g.child().is(Op::And)) return mismatch();
      const Formula& a = g.child();
      return Formula::disj(Formula::neg(a.left()), Formula::neg(a.right()));
    }
    case Rule::NEG3: {
      if (!g.is(Op::Not) || !g.child().is(Op::Or)) return mismatch();
      const Formula& a = g.child();
      return Formula::conj(Formula::neg(a.left()), Formula::neg(a.right()));
    }
    case Rule::NEG4: {
      if (!g.is(Op::Not) || !g.child().is(Op::Grad) || !g.child().left().is(Op::Elem))
        return mismatch();
      const Formula& chain = g.child();
      const SElem& s = chain.left().leaf();
      return Formula::disj(Formula::elem(s.complement()),
                           Formula::grad(chain.left(), Formula::neg(chain.right())));
    }
    case Rule::GRAD1: {
      if (!g.is(Op::Grad) || !g.left().is(Op::Grad)) return mismatch();
      const Formula &f1 = g.left().left(), &f2 = g.left().right(), &f3 = g.right();
      return Formula::conj(
          Formula::grad(f1, f3),
          Formula::disj(g.left(), Formula::grad(f1, Formula::grad(f2, f3))));
    }
    case Rule::GRAD2: {
      if (!g.is(Op::Grad) || !g.left().is(Op::And)) return mismatch();
      const Formula &f1 = g.left().left(), &f2 = g.left().right(), &f3 = g.right();
      return Formula::conj(Formula::grad(f1, f3), Formula::grad(f2, f3));
    }
    case Rule::GRAD3: {
      if (!g.is(Op::Grad) || !g.left().is(Op::Or)) return mismatch();
      const Formula &f1 = g.left().left(), &f2 = g.left().right(), &f3 = g.right();
      return Formula::disj(Formula::grad(f1, f3), Formula::grad(f2, f3));
    }
    case Rule::GRAD4: {
      if (!g.is(Op::Grad) || !g.right().is(Op::And)) return mismatch();
      const Formula &f1 = g.left(), &f2 = g.right().left(), &f3 = g.right().right();
      return Formula::conj(Formula::grad(f1, f2), Formula::grad(f1, f3));
    }
    case Rule::GRAD5: {
      if (!g.is(Op::Grad) || !g.right().is(Op::Or)) return mismatch();
      const Formula &f1 = g.left(), &f2 = g.right().left(), &f3 = g.right().right();
      return Formula::disj(Formula::grad(f1, f2), Formula::grad(f1, f3));
    }
  }
  throw Error("unreachable");
}

inline void collect_redexes(const Formula& f, Path& p, std::vector<std::pair<Rule, Path>>& out) {
  std::vector<Rule> here;
  redexes_at(f, here);
  for (Rule r : here) out.emplace_back(r, p);
  switch (f.op()) {
    case Op::Elem: return;
    case Op::Not:
      p.push_back(0);
      collect_redexes(f.child(), p, out);
      p.pop_back();
      return;
    default:
      p.push_back(0);
      collect_redexes(f.left(), p, out);
      p.back() = 1;
      collect_redexes(f.right(), p, out);
      p.pop_back();
  }
}

} // namespace detail

/// All (rule, position) pairs that denote a redex in f, in preorder.
inline std::vector<std::pair<Rule, Path>> applicable_rules(const Formula& f) {
  std::vector<std::pair<Rule, Path>> out;
  Path p;
  detail::collect_redexes(f, p, out);
  return out;
}

/// One reduction step: rewrites the redex at `position`, leaving the
/// rest of the formula untouched.
inline Formula apply_rule(const Formula& f, Rule rule, const Path& position) {
  Formula g = subterm(f, position);
  return detail::replace_at(f, position, 0, detail::rewrite_root(g, rule));
}

struct ReductionStrategy {
  enum class Kind { Deterministic, Random };
  Kind kind = Kind::Deterministic;
  std::uint64_t seed = 0;

  static ReductionStrategy deterministic() { return {Kind::Deterministic, 0}; }
  static ReductionStrategy random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

namespace detail {

// Deterministic normalization driver. Works bottom-up: both arguments of
// a `>` are normalized before the link itself is expanded (GRAD2/3 on the
// object side, then GRAD4/5 on the attribute side, GRAD1 chains expanded
// tail-first), and a `not` is expanded only once its argument is already
// in unit-chain expansion (then NEG rules fire outermost-first). Every
// step is a plain apply_rule at a recorded position, so traces replay.
struct DetDriver {
  Formula cur;
  std::vector<ReductionStep>* steps;

  void emit(Rule r, const Path& p) {
    Formula next = apply_rule(cur, r, p);
    if (steps) steps->push_back({r, p, cur, next});
    cur = std::move(next);
  }

  void normalize(Path& p) {
    switch (subterm(cur, p).op()) {
      case Op::Elem: return;
      case Op::And:
      case Op::Or:
        p.push_back(0);
        normalize(p);
        p.back() = 1;
        normalize(p);
        p.pop_back();
        return;
      case Op::Grad:
        p.push_back(0);
        normalize(p);
        p.back() = 1;
        normalize(p);
        p.pop_back();
        link(p);
        return;
      case Op::Not:
        p.push_back(0);
        normalize(p);
        p.pop_back();
        expand_not(p);
        return;
    }
  }

  // Both children of the `>` at p are in unit-chain expansion; rewrite
  // until the subtree at p is too.
  void link(Path& p) {
    Formula g = subterm(cur, p);
    switch (g.left().op()) {
      case Op::And:
        emit(Rule::GRAD2, p);
        link_children(p);
        return;
      case Op::Or:
        emit(Rule::GRAD3, p);
        link_children(p);
        return;
      case Op::Grad: {
        emit(Rule::GRAD1, p);
        // now: (f1 > f3) & ((f1 > f2) | (f1 > f2 > f3)); the expanded
        // tail link f2 > f3 first, then the head over its result,
        // then the short link f1 > f3
        p.insert(p.end(), {1, 1, 1});
        link(p);
        p.pop_back();
        link(p);
        p.pop_back();
        p.pop_back();
        p.push_back(0);
        link(p);
        p.pop_back();
        return;
      }
      case Op::Elem:
        switch (g.right().op()) {
          case Op::And:
            emit(Rule::GRAD4, p);
            link_children(p);
            return;
          case Op::Or:
            emit(Rule::GRAD5, p);
            link_children(p);
            return;
          default: return; // unit chain reached
        }
      case Op::Not: throw Error("internal: `not` left in normalized argument");
    }
  }

  void link_children(Path& p) {
    p.push_back(0);
    link(p);
    p.back() = 1;
    link(p);
    p.pop_back();
  }

  // The argument of the `not` at p is in unit-chain expansion.
  void expand_not(Path& p) {
    Formula arg = subterm(cur, p).child();
    switch (arg.op()) {
      case Op::Elem:
        emit(Rule::NEG1, p);
        return;
      case Op::And:
        emit(Rule::NEG2, p);
        not_children(p);
        return;
      case Op::Or:
        emit(Rule::NEG3, p);
        not_children(p);
        return;
      case Op::Grad: {
        emit(Rule::NEG4, p);
        // now: s^c | (s > !tail)
        p.insert(p.end(), {1, 1});
        expand_not(p);
        p.pop_back();
        link(p);
        p.pop_back();
        return;
      }
      case Op::Not: throw Error("internal: doubled `not` in normalized argument");
    }
  }

  void not_children(Path& p) {
    p.push_back(0);
    expand_not(p);
    p.back() = 1;
    expand_not(p);
    p.pop_back();
  }
};

inline constexpr std::size_t kStepBudget = 50'000'000;

inline Formula run_random(Formula f, std::uint64_t seed, std::vector<ReductionStep>* steps) {
  std::mt19937_64 rng(seed);
  std::size_t n = 0;
  for (;;) {
    auto redexes = applicable_rules(f);
    if (redexes.empty()) return f;
    const auto& [rule, pos] = redexes[rng() % redexes.size()];
    Formula next = apply_rule(f, rule, pos);
    if (steps) steps->push_back({rule, pos, f, next});
    f = std::move(next);
    if (++n > kStepBudget) throw Error("reduction exceeded step budget");
  }
}

} // namespace detail

/// Normalize to unit-chain expansion, recording every step.
inline Trace reduce_to_uce(const Formula& f, ReductionStrategy strategy = ReductionStrategy::deterministic()) {
  Trace t;
  t.initial = f;
  if (strategy.kind == ReductionStrategy::Kind::Deterministic) {
    detail::DetDriver d{f, &t.steps};
    Path p;
    d.normalize(p);
    t.final = d.cur;
  } else {
    t.final = detail::run_random(f, strategy.seed, &t.steps);
  }
  return t;
}

/// Trace-free normalization (deterministic strategy).
inline Formula reduce(const Formula& f) {
  detail::DetDriver d{f, nullptr};
  Path p;
  d.normalize(p);
  return d.cur;
}

/// Trace-free normalization under a seeded random rule order.
inline Formula reduce_random(const Formula& f, std::uint64_t seed) {
  return detail::run_random(f, seed, nullptr);
}

inline std::string trace_line(const ReductionStep& s) {
  std::ostringstream os;
  os << to_string(s.rule) << " @ " << to_string(s.position) << ": "
     << pretty(subterm(s.before, s.position)) << " => " << pretty(subterm(s.after, s.position));
  return os.str();
}

namespace detail {

inline Formula attach_head(const Formula& head, const Formula& x) {
  // head > x for an S-element head and x in unit-chain expansion,
  // distributing over the and/or skeleton of x
  switch (x.op()) {
    case Op::And: return Formula::conj(attach_head(head, x.left()), attach_head(head, x.right()));
    case Op::Or: return Formula::disj(attach_head(head, x.left()), attach_head(head, x.right()));
    default: return Formula::grad(head, x);
  }
}

inline Formula recursive_reduce_impl(const Formula& f) {
  switch (f.op()) {
    case Op::Elem: return Formula::elem(f.leaf().complement());
    case Op::And: return Formula::disj(recursive_reduce_impl(f.left()), recursive_reduce_impl(f.right()));
    case Op::Or: return Formula::conj(recursive_reduce_impl(f.left()), recursive_reduce_impl(f.right()));
    case Op::Grad: {
      // chain with head s and tail T becomes s^c | (s > rr(T)),
      // immediately renormalized over rr(T)'s or-skeleton
      const Formula& head = f.left();
      Formula tail = recursive_reduce_impl(f.right());
      return Formula::disj(Formula::elem(head.leaf().complement()), attach_head(head, tail));
    }
    case Op::Not: throw Error("unreachable");
  }
  throw Error("unreachable");
}

} // namespace detail

/// The canonical negation of a unit-chain expansion: swaps and/or,
/// complements non-chain elements, expands each chain s > T into
/// s^c | (s > ...), and renormalizes. Structurally equal to every
/// reduct of !f.
inline Formula recursive_reduce(const Formula& f) {
  if (!is_unit_chain_expansion(f))
    throw NotUnitChainError("recursive_reduce: input not in unit chain expansion");
  return detail::recursive_reduce_impl(f);
}

// ---------------------------------------------------------------------------
// Disjunctive / conjunctive normal form over unit chains.
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_atom_layer(const Formula& f) {
  return f.is(Op::Elem) || (f.is(Op::Grad) && is_unit_chain_term(f));
}

inline bool is_and_of_atoms(const Formula& f) {
  if (f.is(Op::And)) return is_and_of_atoms(f.left()) && is_and_of_atoms(f.right());
  return is_atom_layer(f);
}

inline bool is_or_of_atoms(const Formula& f) {
  if (f.is(Op::Or)) return is_or_of_atoms(f.left()) && is_or_of_atoms(f.right());
  return is_atom_layer(f);
}

inline Formula dist_and(const Formula& a, const Formula& b) {
  if (a.is(Op::Or)) return Formula::disj(dist_and(a.left(), b), dist_and(a.right(), b));
  if (b.is(Op::Or)) return Formula::disj(dist_and(a, b.left()), dist_and(a, b.right()));
  return Formula::conj(a, b);
}

inline Formula dist_or(const Formula& a, const Formula& b) {
  if (a.is(Op::And)) return Formula::conj(dist_or(a.left(), b), dist_or(a.right(), b));
  if (b.is(Op::And)) return Formula::conj(dist_or(a, b.left()), dist_or(a, b.right()));
  return Formula::disj(a, b);
}

inline Formula to_dnf_impl(const Formula& f) {
  switch (f.op()) {
    case Op::Or: return Formula::disj(to_dnf_impl(f.left()), to_dnf_impl(f.right()));
    case Op::And: return dist_and(to_dnf_impl(f.left()), to_dnf_impl(f.right()));
    default: return f;
  }
}

inline Formula to_cnf_impl(const Formula& f) {
  switch (f.op()) {
    case Op::And: return Formula::conj(to_cnf_impl(f.left()), to_cnf_impl(f.right()));
    case Op::Or: return dist_or(to_cnf_impl(f.left()), to_cnf_impl(f.right()));
    default: return f;
  }
}

} // namespace detail

/// Disjunction-of-conjunctions shape over unit chains and S-elements.
inline bool is_dnf_shape(const Formula& f) {
  if (f.is(Op::Or)) return is_dnf_shape(f.left()) && is_dnf_shape(f.right());
  return detail::is_and_of_atoms(f);
}

/// Conjunction-of-disjunctions shape over unit chains and S-elements.
inline bool is_cnf_shape(const Formula& f) {
  if (f.is(Op::And)) return is_cnf_shape(f.left()) && is_cnf_shape(f.right());
  return detail::is_or_of_atoms(f);
}

inline Formula to_dnf(const Formula& f) {
  if (!is_unit_chain_expansion(f)) throw NotUnitChainError("to_dnf: input not in unit chain expansion");
  return detail::to_dnf_impl(f);
}

inline Formula to_cnf(const Formula& f) {
  if (!is_unit_chain_expansion(f)) throw NotUnitChainError("to_cnf: input not in unit chain expansion");
  return detail::to_cnf_impl(f);
}

} // namespace gradual
