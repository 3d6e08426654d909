#pragma once

// Randomized law suites over the reduction system, the semantics, and
// the decision engines, plus the generators and independent checkers
// they need. Tests, the acceptance suite, and `check-laws` all run
// through these.

#include "gradual/core.hpp"
#include "gradual/decide.hpp"
#include "gradual/parser.hpp"
#include "gradual/reduce.hpp"
#include "gradual/semantics.hpp"

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gradual::laws {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t pick(std::uint64_t n) { return eng() % n; } // n > 0
  bool coin() { return (eng() & 1) != 0; }
};

inline std::vector<AtomName> atom_pool(std::size_t n) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  std::vector<AtomName> pool;
  for (std::size_t i = 0; i < n && i < 8; ++i) pool.emplace_back(names[i]);
  return pool;
}

inline SElem gen_elem(Rng& rng, const std::vector<AtomName>& pool) {
  std::uint64_t r = rng.pick(10);
  if (r == 8) return SElem::top();
  if (r == 9) return SElem::bot();
  return SElem::lit(pool[rng.pick(pool.size())], rng.coin());
}

struct GenParams {
  std::size_t atoms = 3;
  std::size_t size_budget = 9;
  std::size_t neg_budget = 2;
  bool allow_grad = true;
};

/// Arbitrary formula with f_size <= budget and neg_max <= neg_budget.
inline Formula gen_formula(Rng& rng, const std::vector<AtomName>& pool, std::size_t budget,
                           std::size_t neg_budget, bool allow_grad) {
  if (budget <= 1) return Formula::elem(gen_elem(rng, pool));
  if (budget == 2) {
    if (neg_budget > 0 && rng.coin())
      return Formula::neg(gen_formula(rng, pool, 1, neg_budget - 1, allow_grad));
    return Formula::elem(gen_elem(rng, pool));
  }
  std::uint64_t r = rng.pick(neg_budget > 0 ? 10 : 8);
  if (r >= 8)
    return Formula::neg(gen_formula(rng, pool, budget - 1, neg_budget - 1, allow_grad));
  if (r == 7) return Formula::elem(gen_elem(rng, pool));
  std::size_t lhs = 1 + rng.pick(budget - 2); // split budget-1 between children
  std::size_t rhs = budget - 1 - lhs;
  Formula a = gen_formula(rng, pool, lhs, neg_budget, allow_grad);
  Formula b = gen_formula(rng, pool, rhs, neg_budget, allow_grad);
  switch (allow_grad ? r % 3 : r % 2) {
    case 0: return Formula::conj(std::move(a), std::move(b));
    case 1: return Formula::disj(std::move(a), std::move(b));
    default: return Formula::grad(std::move(a), std::move(b));
  }
}

inline UnitChain gen_unit_chain(Rng& rng, const std::vector<AtomName>& pool, std::size_t max_len) {
  std::size_t len = 1 + rng.pick(max_len);
  std::vector<SElem> elems;
  for (std::size_t i = 0; i < len; ++i) elems.push_back(gen_elem(rng, pool));
  return UnitChain(std::move(elems));
}

/// Formula already in unit-chain expansion.
inline Formula gen_uce(Rng& rng, const std::vector<AtomName>& pool, std::size_t budget,
                       std::size_t max_chain_len) {
  if (budget <= 2) {
    std::size_t room = std::min<std::size_t>(max_chain_len, (budget + 1) / 2);
    return gen_unit_chain(rng, pool, std::max<std::size_t>(room, 1)).to_formula();
  }
  std::uint64_t r = rng.pick(4);
  if (r < 2) {
    std::size_t room = std::min<std::size_t>(max_chain_len, (budget + 1) / 2);
    return gen_unit_chain(rng, pool, std::max<std::size_t>(room, 1)).to_formula();
  }
  std::size_t lhs = 1 + rng.pick(budget - 2);
  std::size_t rhs = budget - 1 - lhs;
  Formula a = gen_uce(rng, pool, lhs, max_chain_len);
  Formula b = gen_uce(rng, pool, rhs, max_chain_len);
  return r == 2 ? Formula::conj(std::move(a), std::move(b))
                : Formula::disj(std::move(a), std::move(b));
}

inline ValuationFrame gen_frame(Rng& rng, const std::set<AtomName>& atoms, std::size_t depth) {
  std::vector<std::map<AtomName, bool>> levels(depth + 1);
  for (auto& lvl : levels)
    for (const auto& a : atoms) lvl[a] = rng.coin();
  return ValuationFrame(std::move(levels));
}

// ---------------------------------------------------------------------------
// Independent truth-table checker for the `>`-free fragment, where a
// and a' act as complementary propositional literals. Evaluates `not`
// directly and never touches the reduction system or frames.
// ---------------------------------------------------------------------------

inline int eval_classical(const Formula& f, const std::map<AtomName, bool>& assign) {
  switch (f.op()) {
    case Op::Elem: {
      const SElem& s = f.leaf();
      if (s.kind == SElem::Kind::Top) return 1;
      if (s.kind == SElem::Kind::Bot) return 0;
      auto it = assign.find(s.name);
      bool v = it != assign.end() && it->second;
      return (v != s.negated) ? 1 : 0;
    }
    case Op::And: return eval_classical(f.left(), assign) & eval_classical(f.right(), assign);
    case Op::Or: return eval_classical(f.left(), assign) | eval_classical(f.right(), assign);
    case Op::Not: return 1 - eval_classical(f.child(), assign);
    case Op::Grad: throw Error("eval_classical: formula is not `>`-free");
  }
  throw Error("unreachable");
}

inline VerdictClass classify_classical(const Formula& f) {
  auto names = atom_names(f);
  std::vector<AtomName> order(names.begin(), names.end());
  if (order.size() > 20) throw UniverseTooLargeError("truth table too large");
  std::uint64_t combos = std::uint64_t{1} << order.size();
  bool all_true = true, all_false = true;
  for (std::uint64_t i = 0; i < combos; ++i) {
    std::map<AtomName, bool> assign;
    for (std::size_t j = 0; j < order.size(); ++j)
      assign[order[j]] = ((i >> (order.size() - 1 - j)) & 1) != 0;
    if (eval_classical(f, assign))
      all_false = false;
    else
      all_true = false;
  }
  if (all_true) return VerdictClass::Valid;
  if (all_false) return VerdictClass::Unsatisfiable;
  return VerdictClass::Contingent;
}

// ---------------------------------------------------------------------------
// Exhaustive formula enumeration by f_size over a fixed leaf set.
// Pools are kept only for the sizes needed to compose larger trees;
// the top size streams through the callback without being stored.
// ---------------------------------------------------------------------------

template <class Fn>
void enumerate_formulas(std::size_t max_size, const std::vector<Formula>& leaves, Fn&& fn) {
  std::vector<std::vector<Formula>> pools(max_size + 1);
  pools[1] = leaves;
  for (const Formula& f : pools[1]) fn(f);
  for (std::size_t s = 2; s <= max_size; ++s) {
    auto emit = [&](Formula f) {
      fn(f);
      if (s < max_size) pools[s].push_back(std::move(f));
    };
    for (const Formula& g : pools[s - 1]) emit(Formula::neg(g));
    for (std::size_t l = 1; l + 1 < s; ++l) {
      std::size_t r = s - 1 - l;
      for (const Formula& a : pools[l])
        for (const Formula& b : pools[r]) {
          emit(Formula::conj(a, b));
          emit(Formula::disj(a, b));
          emit(Formula::grad(a, b));
        }
    }
  }
}

// ---------------------------------------------------------------------------
// Law results and the individual suites.
// ---------------------------------------------------------------------------

struct LawResult {
  std::string name;
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::string first_failure;

  void tally(bool ok, const std::string& witness) {
    if (ok) {
      ++pass;
    } else {
      if (fail == 0) first_failure = witness;
      ++fail;
    }
  }
  bool ok() const { return fail == 0; }
};

/// Every formula reaches unit-chain expansion, deterministically and
/// under `random_seeds` random rule orders; optionally enforces a
/// wall-clock budget per formula.
inline LawResult law_normalization_totality(std::uint64_t seed, std::uint64_t iters, GenParams gp,
                                            std::size_t random_seeds,
                                            double per_formula_budget_s = 0.0) {
  LawResult res{"normalization-totality"};
  Rng rng(seed);
  auto pool = atom_pool(gp.atoms);
  for (std::uint64_t i = 0; i < iters; ++i) {
    Formula f = gen_formula(rng, pool, gp.size_budget, gp.neg_budget, gp.allow_grad);
    auto t0 = std::chrono::steady_clock::now();
    bool ok = is_unit_chain_expansion(reduce(f));
    for (std::size_t s = 0; ok && s < random_seeds; ++s)
      ok = is_unit_chain_expansion(reduce_random(f, seed ^ (i * 131 + s + 1)));
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (per_formula_budget_s > 0 && dt >= per_formula_budget_s) ok = false;
    res.tally(ok, pretty(f));
  }
  return res;
}

/// All reducts of a formula (deterministic plus `random_seeds` random
/// orders) evaluate identically under every frame of the formula's
/// restricted universe.
inline LawResult law_value_confluence(std::uint64_t seed, std::uint64_t iters, GenParams gp,
                                      std::size_t max_level, std::size_t random_seeds) {
  LawResult res{"value-confluence"};
  Rng rng(seed);
  auto pool = atom_pool(gp.atoms);
  for (std::uint64_t i = 0; i < iters; ++i) {
    Formula f, det;
    bool found = false;
    for (int attempt = 0; attempt < 64 && !found; ++attempt) {
      f = gen_formula(rng, pool, gp.size_budget, gp.neg_budget, gp.allow_grad);
      det = reduce(f);
      found = max_object_level(det) <= max_level &&
              atom_names(f).size() * (max_level + 1) <= 18;
    }
    if (!found) continue; // generator cannot hit the requested universe
    std::vector<Formula> reducts{det};
    for (std::size_t s = 0; s < random_seeds; ++s)
      reducts.push_back(reduce_random(f, seed ^ (i * 977 + s + 1)));
    std::size_t depth = 0;
    for (const auto& r : reducts) depth = std::max(depth, max_object_level(r));
    FrameUniverse universe(atom_names(f), depth);
    bool ok = true;
    for (std::uint64_t k = 0; ok && k < universe.count(); ++k) {
      ValuationFrame m = universe.frame(k);
      int v = eval(m, reducts[0]);
      for (std::size_t j = 1; ok && j < reducts.size(); ++j) ok = (eval(m, reducts[j]) == v);
    }
    res.tally(ok, pretty(f));
  }
  return res;
}

/// Every reduct of !F for F in unit-chain expansion is structurally
/// recursive_reduce(F).
inline LawResult law_negation_canonicity(std::uint64_t seed, std::uint64_t iters, GenParams gp,
                                         std::size_t max_chain_len, std::size_t random_seeds) {
  LawResult res{"negation-canonicity"};
  Rng rng(seed);
  auto pool = atom_pool(gp.atoms);
  for (std::uint64_t i = 0; i < iters; ++i) {
    Formula f = gen_uce(rng, pool, gp.size_budget, max_chain_len);
    Formula canonical = recursive_reduce(f);
    Formula negated = Formula::neg(f);
    bool ok = (reduce(negated) == canonical);
    for (std::size_t s = 0; ok && s < random_seeds; ++s)
      ok = (reduce_random(negated, seed ^ (i * 613 + s + 1)) == canonical);
    res.tally(ok, pretty(f));
  }
  return res;
}

namespace detail {

inline bool reducts_agree_under_all_frames(const Formula& lhs, const Formula& rhs,
                                           std::uint64_t seed, std::size_t bits_cap) {
  std::vector<Formula> reducts{reduce(lhs), reduce(rhs), reduce_random(lhs, seed),
                               reduce_random(rhs, seed ^ 0x9e3779b97f4a7c15ull)};
  std::size_t depth = 0;
  std::set<AtomName> atoms;
  for (const auto& r : reducts) {
    depth = std::max(depth, max_object_level(r));
    collect_atom_names(r, atoms);
  }
  if (atoms.size() * (depth + 1) > bits_cap) return true; // out of budget, skip
  FrameUniverse universe(atoms, depth);
  for (std::uint64_t k = 0; k < universe.count(); ++k) {
    ValuationFrame m = universe.frame(k);
    int v = eval(m, reducts[0]);
    for (std::size_t j = 1; j < reducts.size(); ++j)
      if (eval(m, reducts[j]) != v) return false;
  }
  return true;
}

} // namespace detail

/// The rewrite schemata relate value-equivalent formulas inside any
/// context: all reducts of both sides evaluate identically everywhere.
inline LawResult law_bisimulation(std::uint64_t seed, std::uint64_t iters, std::size_t atoms) {
  LawResult res{"bisimulation"};
  Rng rng(seed);
  auto pool = atom_pool(std::min<std::size_t>(atoms, 2));
  for (std::uint64_t i = 0; i < iters; ++i) {
    auto sub = [&](bool allow_neg) {
      return gen_formula(rng, pool, 3, allow_neg ? 1 : 0, true);
    };
    int schema = static_cast<int>(rng.pick(12));
    bool neg_free = schema < 5;
    Formula fa = sub(!neg_free), fb = sub(!neg_free), fc = sub(!neg_free);
    SElem s = gen_elem(rng, pool);
    Formula se = Formula::elem(s);
    Formula lhs, rhs;
    switch (schema) {
      case 0:
        lhs = Formula::grad(Formula::conj(fa, fb), fc);
        rhs = Formula::conj(Formula::grad(fa, fc), Formula::grad(fb, fc));
        break;
      case 1:
        lhs = Formula::grad(Formula::disj(fa, fb), fc);
        rhs = Formula::disj(Formula::grad(fa, fc), Formula::grad(fb, fc));
        break;
      case 2:
        lhs = Formula::grad(fa, Formula::conj(fb, fc));
        rhs = Formula::conj(Formula::grad(fa, fb), Formula::grad(fa, fc));
        break;
      case 3:
        lhs = Formula::grad(fa, Formula::disj(fb, fc));
        rhs = Formula::disj(Formula::grad(fa, fb), Formula::grad(fa, fc));
        break;
      case 4:
        lhs = Formula::grad(Formula::grad(fa, fb), fc);
        rhs = Formula::conj(Formula::grad(fa, fc),
                            Formula::disj(Formula::grad(fa, fb),
                                          Formula::grad(fa, Formula::grad(fb, fc))));
        break;
      case 5:
        lhs = Formula::neg(Formula::conj(fa, fb));
        rhs = Formula::disj(Formula::neg(fa), Formula::neg(fb));
        break;
      case 6:
        lhs = Formula::neg(Formula::disj(fa, fb));
        rhs = Formula::conj(Formula::neg(fa), Formula::neg(fb));
        break;
      case 7:
        lhs = Formula::disj(se, se);
        rhs = se;
        break;
      case 8:
        lhs = Formula::disj(Formula::disj(se, fa), se);
        rhs = Formula::disj(se, fa);
        break;
      case 9:
        lhs = Formula::conj(se, se);
        rhs = se;
        break;
      case 10:
        lhs = Formula::conj(Formula::conj(se, fa), se);
        rhs = Formula::conj(se, fa);
        break;
      case 11:
        lhs = Formula::elem(s.complement());
        rhs = Formula::neg(se);
        break;
    }
    // wrap both sides in the same random context
    Formula g = sub(!neg_free);
    switch (rng.pick(neg_free ? 5 : 6)) {
      case 0: break;
      case 1: lhs = Formula::conj(lhs, g); rhs = Formula::conj(rhs, g); break;
      case 2: lhs = Formula::disj(g, lhs); rhs = Formula::disj(g, rhs); break;
      case 3: lhs = Formula::grad(lhs, g); rhs = Formula::grad(rhs, g); break;
      case 4: lhs = Formula::grad(g, lhs); rhs = Formula::grad(g, rhs); break;
      case 5: lhs = Formula::neg(lhs); rhs = Formula::neg(rhs); break;
    }
    bool ok = detail::reducts_agree_under_all_frames(lhs, rhs, seed ^ (i * 251 + 7), 18);
    res.tally(ok, pretty(lhs) + "  vs  " + pretty(rhs));
  }
  return res;
}

/// DNF/CNF land in the advertised shape and stay value-equivalent.
inline LawResult law_dnf_cnf(std::uint64_t seed, std::uint64_t iters, GenParams gp,
                             std::size_t max_chain_len) {
  LawResult res{"dnf-cnf"};
  Rng rng(seed);
  auto pool = atom_pool(gp.atoms);
  for (std::uint64_t i = 0; i < iters; ++i) {
    Formula f = gen_uce(rng, pool, gp.size_budget, max_chain_len);
    Formula d = to_dnf(f), c = to_cnf(f);
    bool ok = is_dnf_shape(d) && is_cnf_shape(c);
    if (ok) {
      std::size_t depth = max_object_level(f);
      std::set<AtomName> atoms = atom_names(f);
      if (atoms.size() * (depth + 1) <= 18) {
        FrameUniverse universe(atoms, depth);
        for (std::uint64_t k = 0; ok && k < universe.count(); ++k) {
          ValuationFrame m = universe.frame(k);
          int v = eval(m, f);
          ok = (eval(m, d) == v) && (eval(m, c) == v);
        }
      }
    }
    res.tally(ok, pretty(f));
  }
  return res;
}

/// A unit chain and its canonical negation take opposite values under
/// every frame.
inline LawResult law_elementary_complementation(std::uint64_t seed, std::uint64_t iters,
                                                std::size_t atoms, std::size_t max_chain_len) {
  LawResult res{"elementary-complementation"};
  Rng rng(seed);
  auto pool = atom_pool(std::min<std::size_t>(atoms, 3));
  for (std::uint64_t i = 0; i < iters; ++i) {
    UnitChain u = gen_unit_chain(rng, pool, std::min<std::size_t>(max_chain_len, 6));
    Formula f = u.to_formula();
    Formula r = recursive_reduce(f);
    FrameUniverse universe(atom_names(f), u.size() - 1);
    bool ok = true;
    for (std::uint64_t k = 0; ok && k < universe.count(); ++k) {
      ValuationFrame m = universe.frame(k);
      ok = (eval(m, f) + eval(m, r) == 1);
    }
    res.tally(ok, pretty(f));
  }
  return res;
}

/// The Boolean-algebra laws at the evaluation level, one random
/// (formulas, frame) sample per iteration per law.
inline std::vector<LawResult> law_boolean_algebra(std::uint64_t seed, std::uint64_t iters,
                                                  GenParams gp, std::size_t max_chain_len) {
  std::vector<LawResult> out{
      {"associativity"},  {"commutativity"}, {"distributivity"},
      {"idempotence"},    {"absorption"},    {"annihilation-identity"},
      {"complementation"}, {"double-negation"}, {"non-paraconsistency"},
  };
  Rng rng(seed);
  auto pool = atom_pool(gp.atoms);
  for (std::uint64_t i = 0; i < iters; ++i) {
    Formula f1 = gen_uce(rng, pool, gp.size_budget, max_chain_len);
    Formula f2 = gen_uce(rng, pool, gp.size_budget, max_chain_len);
    Formula f3 = gen_uce(rng, pool, gp.size_budget, max_chain_len);
    std::size_t depth = std::max({max_object_level(f1), max_object_level(f2), max_object_level(f3)});
    std::set<AtomName> atoms;
    collect_atom_names(f1, atoms);
    collect_atom_names(f2, atoms);
    collect_atom_names(f3, atoms);
    ValuationFrame m = gen_frame(rng, atoms, depth);
    std::string w = pretty(f1);
    using F = Formula;
    int v1 = eval(m, f1), v2 = eval(m, f2), v3 = eval(m, f3);

    out[0].tally(eval(m, F::conj(f1, F::conj(f2, f3))) == eval(m, F::conj(F::conj(f1, f2), f3)) &&
                     eval(m, F::disj(f1, F::disj(f2, f3))) == eval(m, F::disj(F::disj(f1, f2), f3)),
                 w);
    out[1].tally(eval(m, F::conj(f1, f2)) == eval(m, F::conj(f2, f1)) &&
                     eval(m, F::disj(f1, f2)) == eval(m, F::disj(f2, f1)),
                 w);
    out[2].tally(
        eval(m, F::conj(f1, F::disj(f2, f3))) == eval(m, F::disj(F::conj(f1, f2), F::conj(f1, f3))) &&
            eval(m, F::disj(f1, F::conj(f2, f3))) ==
                eval(m, F::conj(F::disj(f1, f2), F::disj(f1, f3))),
        w);
    out[3].tally(eval(m, F::conj(f1, f1)) == v1 && eval(m, F::disj(f1, f1)) == v1, w);
    out[4].tally(eval(m, F::conj(f1, F::disj(f1, f2))) == v1 &&
                     eval(m, F::disj(f1, F::conj(f1, f2))) == v1,
                 w);
    out[5].tally(eval(m, F::conj(F::top(), f1)) == v1 && eval(m, F::disj(F::top(), f1)) == 1 &&
                     eval(m, F::conj(F::bot(), f1)) == 0 && eval(m, F::disj(F::bot(), f1)) == v1,
                 w);
    Formula r1 = recursive_reduce(f1);
    int rv1 = eval(m, r1);
    out[6].tally(eval(m, F::disj(f1, r1)) == 1 && eval(m, F::conj(f1, r1)) == 0, w);
    out[7].tally(eval(m, recursive_reduce(r1)) == v1, w);
    out[8].tally(v1 + rv1 == 1, w);
    (void)v2;
    (void)v3;
  }
  return out;
}

/// On the `>`-free fragment the oracle and a plain truth table agree.
inline LawResult law_classical_fragment(std::uint64_t seed, std::uint64_t iters, GenParams gp) {
  LawResult res{"classical-fragment"};
  Rng rng(seed);
  auto pool = atom_pool(gp.atoms);
  for (std::uint64_t i = 0; i < iters; ++i) {
    Formula f = gen_formula(rng, pool, gp.size_budget, gp.neg_budget, /*allow_grad=*/false);
    bool ok = (classify_oracle(f).cls == classify_classical(f));
    res.tally(ok, pretty(f));
  }
  return res;
}

/// The levelwise engine answers `valid` exactly when the oracle does,
/// and never recurses deeper than the object level allows.
inline LawResult law_decide_agreement(std::uint64_t seed, std::uint64_t iters, GenParams gp,
                                      std::size_t bits_cap = 16) {
  LawResult res{"decide-agreement"};
  Rng rng(seed);
  auto pool = atom_pool(gp.atoms);
  for (std::uint64_t i = 0; i < iters; ++i) {
    Formula f, det;
    bool found = false;
    for (int attempt = 0; attempt < 64 && !found; ++attempt) {
      f = gen_formula(rng, pool, gp.size_budget, gp.neg_budget, gp.allow_grad);
      det = reduce(f);
      found = atom_names(det).size() * (max_object_level(det) + 1) <= bits_cap;
    }
    if (!found) continue;
    DecideReport rep = decide_valid(f, DecideEngine::Levelwise);
    bool oracle_valid = (classify_oracle(f).cls == VerdictClass::Valid);
    bool ok = ((rep.result == 1) == oracle_valid) &&
              rep.recursion_depth_max <= max_object_level(det) + 1;
    res.tally(ok, pretty(f));
  }
  return res;
}

// ---------------------------------------------------------------------------
// The bundle `check-laws` runs.
// ---------------------------------------------------------------------------

struct LawConfig {
  std::uint64_t iters = 200;
  std::uint64_t seed = 42;
  std::size_t max_atoms = 3;
  std::size_t max_depth = 2;
};

inline std::vector<LawResult> run_laws(const LawConfig& cfg) {
  std::vector<LawResult> out;
  GenParams formulas{cfg.max_atoms, 13, 3, true};
  GenParams uce{cfg.max_atoms, 9, 0, true};
  GenParams small{std::min<std::size_t>(cfg.max_atoms, 3), 9, 2, true};
  std::size_t chain_len = cfg.max_depth + 1;

  out.push_back(law_normalization_totality(cfg.seed, cfg.iters, formulas, 3));
  out.push_back(law_value_confluence(cfg.seed + 1, cfg.iters, small, cfg.max_depth, 3));
  out.push_back(law_negation_canonicity(cfg.seed + 2, cfg.iters, uce, chain_len, 3));
  out.push_back(law_bisimulation(cfg.seed + 3, cfg.iters, cfg.max_atoms));
  out.push_back(law_dnf_cnf(cfg.seed + 4, cfg.iters, uce, chain_len));
  out.push_back(law_elementary_complementation(cfg.seed + 5, cfg.iters, cfg.max_atoms, chain_len));
  for (auto& r : law_boolean_algebra(cfg.seed + 6, cfg.iters, uce, chain_len)) out.push_back(std::move(r));
  out.push_back(law_classical_fragment(cfg.seed + 7, cfg.iters, {cfg.max_atoms, 11, 3, false}));
  out.push_back(law_decide_agreement(cfg.seed + 8, cfg.iters, small));
  return out;
}

} // namespace gradual::laws
