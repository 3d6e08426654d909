#include "gradual/laws.hpp"
#include "gradual/reduce.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace gradual;

namespace {

Formula must(std::string_view text) {
  auto r = parse(text);
  REQUIRE(r.ok());
  return r.value();
}

// Independent redex scanner: re-pattern-matches every rule's left-hand
// side from scratch, written against the rule table rather than the
// library's applicable_rules.
void scan(const Formula& f, Path& p, std::vector<std::pair<Rule, Path>>& out) {
  if (f.is(Op::Not)) {
    const Formula& a = f.child();
    if (a.is(Op::Elem)) out.emplace_back(Rule::NEG1, p);
    if (a.is(Op::And)) out.emplace_back(Rule::NEG2, p);
    if (a.is(Op::Or)) out.emplace_back(Rule::NEG3, p);
    if (a.is(Op::Grad) && a.left().is(Op::Elem)) out.emplace_back(Rule::NEG4, p);
    p.push_back(0);
    scan(a, p, out);
    p.pop_back();
    return;
  }
  if (f.is(Op::Grad)) {
    if (f.left().is(Op::Grad)) out.emplace_back(Rule::GRAD1, p);
    if (f.left().is(Op::And)) out.emplace_back(Rule::GRAD2, p);
    if (f.left().is(Op::Or)) out.emplace_back(Rule::GRAD3, p);
    if (f.right().is(Op::And)) out.emplace_back(Rule::GRAD4, p);
    if (f.right().is(Op::Or)) out.emplace_back(Rule::GRAD5, p);
  }
  if (!f.is(Op::Elem)) {
    p.push_back(0);
    scan(f.left(), p, out);
    p.back() = 1;
    scan(f.right(), p, out);
    p.pop_back();
  }
}

std::vector<std::pair<Rule, Path>> scan_all(const Formula& f) {
  std::vector<std::pair<Rule, Path>> out;
  Path p;
  scan(f, p, out);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("redex sets match a brute-force pattern scan") {
  laws::Rng rng(23);
  auto pool = laws::atom_pool(3);
  for (int i = 0; i < 1000; ++i) {
    Formula f = laws::gen_formula(rng, pool, 13, 3, true);
    auto got = applicable_rules(f);
    std::sort(got.begin(), got.end());
    CHECK(got == scan_all(f));
  }
}

TEST_CASE("redexes of the named examples") {
  auto only = [](const Formula& f) {
    auto v = applicable_rules(f);
    REQUIRE(v.size() == 1);
    return v.front();
  };
  auto [r1, p1] = only(must("!(a > b)"));
  CHECK(r1 == Rule::NEG4);
  CHECK(p1.empty());

  // the negation rule needs an S-element head, so only the inner
  // conjunction fires
  auto [r2, p2] = only(must("!((a & b) > c)"));
  CHECK(r2 == Rule::GRAD2);
  CHECK(p2 == Path{0});

  CHECK(applicable_rules(must("a | (b > c)")).empty());
}

TEST_CASE("apply_rule rewrites exactly the named subterm") {
  Formula f = must("(a > b) > c");
  Formula g = apply_rule(f, Rule::GRAD1, {});
  CHECK(g == must("(a > c) & ((a > b) | (a > b > c))"));

  CHECK(apply_rule(must("!top"), Rule::NEG1, {}) == Formula::bot());
  CHECK(apply_rule(must("!(a & b)"), Rule::NEG2, {}) == must("!a | !b"));
  CHECK_THROWS_AS(apply_rule(must("a & b"), Rule::NEG2, {}), Error);
}

TEST_CASE("a step changes nothing outside its position") {
  laws::Rng rng(29);
  auto pool = laws::atom_pool(3);
  for (int i = 0; i < 300; ++i) {
    Formula f = laws::gen_formula(rng, pool, 13, 3, true);
    auto redexes = applicable_rules(f);
    if (redexes.empty()) continue;
    auto [rule, pos] = redexes[rng.pick(redexes.size())];
    Formula g = apply_rule(f, rule, pos);
    // outside the redex the trees are identical: replacing the rewritten
    // subterm back restores the original
    CHECK(detail::replace_at(g, pos, 0, subterm(f, pos)) == f);
  }
}

TEST_CASE("deterministic reduction of the named examples") {
  CHECK(reduce(must("!(hat > yellow)")) == must("hat' | (hat > yellow')"));
  CHECK(reduce(must("(a & b) > c")) == must("(a > c) & (b > c)"));

  Formula f = must("(a > b) > c");
  Trace t = reduce_to_uce(f);
  CHECK(t.initial == f);
  CHECK(t.final == must("(a > c) & ((a > b) | (a > b > c))"));
  CHECK(is_unit_chain_expansion(t.final));
  REQUIRE(t.steps.size() == 1);
  CHECK(t.steps.front().rule == Rule::GRAD1);
}

TEST_CASE("traces compose and replay") {
  laws::Rng rng(31);
  auto pool = laws::atom_pool(3);
  for (int i = 0; i < 200; ++i) {
    Formula f = laws::gen_formula(rng, pool, 11, 2, true);
    for (auto strategy : {ReductionStrategy::deterministic(), ReductionStrategy::random(i)}) {
      Trace t = reduce_to_uce(f, strategy);
      CHECK(is_unit_chain_expansion(t.final));
      Formula cur = t.initial;
      for (const auto& s : t.steps) {
        CHECK(s.before == cur);
        CHECK(apply_rule(cur, s.rule, s.position) == s.after);
        cur = s.after;
      }
      CHECK(cur == t.final);
    }
  }
}

TEST_CASE("random rule order is reproducible per seed") {
  Formula f = must("!((a | b) > (c & a)) > b");
  Trace a = reduce_to_uce(f, ReductionStrategy::random(1234));
  Trace b = reduce_to_uce(f, ReductionStrategy::random(1234));
  REQUIRE(a.steps.size() == b.steps.size());
  CHECK(a.final == b.final);
  Trace c = reduce_to_uce(f, ReductionStrategy::random(4321));
  CHECK(is_unit_chain_expansion(c.final));
}

TEST_CASE("trace line format") {
  Trace t = reduce_to_uce(must("!(hat > yellow)"));
  REQUIRE(t.steps.size() == 2);
  CHECK(trace_line(t.steps[0]) == "NEG4 @ /: !(hat > yellow) => hat' | (hat > !yellow)");
  CHECK(trace_line(t.steps[1]) == "NEG1 @ /1/1: !yellow => yellow'");
}

TEST_CASE("recursive_reduce on the named examples") {
  CHECK(recursive_reduce(must("a")) == must("a'"));
  CHECK(recursive_reduce(must("a & b")) == must("a' | b'"));
  // chain expansion, right-nested
  CHECK(recursive_reduce(must("a > b > c")) == must("a' | ((a > b') | (a > b > c'))"));
  CHECK_THROWS_AS(recursive_reduce(must("!a")), NotUnitChainError);
}

TEST_CASE("negation of a unit-chain expansion reduces canonically") {
  auto res = laws::law_negation_canonicity(101, 300, {3, 9, 0, true}, 4, 4);
  INFO(res.first_failure);
  CHECK(res.fail == 0);
}

TEST_CASE("all rule orders agree in value") {
  auto res = laws::law_value_confluence(103, 200, {3, 9, 2, true}, 2, 4);
  INFO(res.first_failure);
  CHECK(res.fail == 0);
}

TEST_CASE("rewrite schemata are value-level bisimulations") {
  auto res = laws::law_bisimulation(107, 300, 2);
  INFO(res.first_failure);
  CHECK(res.fail == 0);
}

TEST_CASE("normal forms: shape and the named distributions") {
  Formula d = to_dnf(must("a & (b | c)"));
  CHECK(d == must("(a & b) | (a & c)"));
  CHECK(to_dnf(must("a")) == must("a"));
  CHECK(to_cnf(must("a")) == must("a"));

  Formula f = must("(a | b) & (c | d)");
  Formula dd = to_dnf(f);
  CHECK(dd == must("((a & c) | (a & d)) | ((b & c) | (b & d))"));
  CHECK(is_dnf_shape(dd));
  // truth-table equivalence on the `>`-free fragment, checked without
  // the frame machinery
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    std::map<AtomName, bool> assign{{"a", (bits & 1) != 0},
                                    {"b", (bits & 2) != 0},
                                    {"c", (bits & 4) != 0},
                                    {"d", (bits & 8) != 0}};
    CHECK(laws::eval_classical(dd, assign) == laws::eval_classical(f, assign));
  }
  CHECK_THROWS_AS(to_dnf(must("!a")), NotUnitChainError);
}

TEST_CASE("normal forms on random unit-chain expansions") {
  auto res = laws::law_dnf_cnf(109, 300, {3, 9, 0, true}, 3);
  INFO(res.first_failure);
  CHECK(res.fail == 0);
}

TEST_CASE("chains stay intact under dnf/cnf") {
  Formula f = must("(a > b > c) & (x | (y > z))");
  Formula d = to_dnf(f);
  CHECK(is_dnf_shape(d));
  CHECK(d == must("((a > b > c) & x) | ((a > b > c) & (y > z))"));
}
