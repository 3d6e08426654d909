#include "gradual/core.hpp"
#include "gradual/laws.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gradual;

namespace {
Formula lit(const char* n, bool neg = false) { return Formula::lit(n, neg); }
}

TEST_CASE("complement flips polarity and swaps the nullaries") {
  CHECK(SElem::lit("p").complement() == SElem::lit("p", true));
  CHECK(SElem::top().complement() == SElem::bot());
  CHECK(SElem::bot().complement() == SElem::top());
  CHECK(SElem::lit("q", true).complement().complement() == SElem::lit("q", true));
}

TEST_CASE("complement is involutive on random elements") {
  laws::Rng rng(2024);
  auto pool = laws::atom_pool(4);
  for (int i = 0; i < 500; ++i) {
    SElem s = laws::gen_elem(rng, pool);
    CHECK(s.complement().complement() == s);
  }
}

TEST_CASE("atom names are identifiers and never the reserved tokens") {
  CHECK(is_valid_atom_name("hat"));
  CHECK(is_valid_atom_name("_x9"));
  CHECK_FALSE(is_valid_atom_name(""));
  CHECK_FALSE(is_valid_atom_name("top"));
  CHECK_FALSE(is_valid_atom_name("bot"));
  CHECK_FALSE(is_valid_atom_name("9a"));
  CHECK_FALSE(is_valid_atom_name("a'"));
  CHECK_THROWS_AS(SElem::lit("top"), Error);
}

TEST_CASE("f_size counts leaves and connectives") {
  CHECK(f_size(Formula::top()) == 1);
  CHECK(f_size(Formula::conj(lit("a"), lit("b"))) == 3);
  CHECK(f_size(Formula::neg(lit("a"))) == 2);
  CHECK(f_size(Formula::grad(lit("a"), Formula::grad(lit("b"), lit("c")))) == 5);
}

TEST_CASE("neg_max tracks the deepest negation nesting") {
  CHECK(neg_max(lit("a")) == 0);
  CHECK(neg_max(Formula::neg(Formula::neg(lit("a")))) == 2);
  CHECK(neg_max(Formula::conj(Formula::neg(lit("a")),
                              Formula::neg(Formula::neg(lit("b"))))) == 2);
}

TEST_CASE("f_size and neg_max agree with an independent walk") {
  // reference implementations kept deliberately separate from the
  // library's, down to the recursion style
  struct Ref {
    static std::size_t size(const Formula& f) {
      if (f.is(Op::Elem)) return 1;
      if (f.is(Op::Not)) return 1 + size(f.child());
      return 1 + size(f.left()) + size(f.right());
    }
    static std::size_t negs(const Formula& f) {
      if (f.is(Op::Elem)) return 0;
      if (f.is(Op::Not)) return 1 + negs(f.child());
      std::size_t l = negs(f.left()), r = negs(f.right());
      return l > r ? l : r;
    }
  };
  laws::Rng rng(7);
  auto pool = laws::atom_pool(3);
  for (int i = 0; i < 500; ++i) {
    Formula f = laws::gen_formula(rng, pool, 15, 3, true);
    CHECK(f_size(f) == Ref::size(f));
    CHECK(neg_max(f) == Ref::negs(f));
  }
}

TEST_CASE("unit chain expansion recognizer") {
  Formula a = lit("a"), b = lit("b"), c = lit("c");
  CHECK(is_unit_chain_expansion(Formula::grad(a, Formula::grad(b, c))));
  CHECK_FALSE(is_unit_chain_expansion(Formula::grad(Formula::conj(a, b), c)));
  CHECK(is_unit_chain_expansion(Formula::disj(a, Formula::grad(b, c))));
  CHECK_FALSE(is_unit_chain_expansion(Formula::neg(a)));
  CHECK_FALSE(is_unit_chain_expansion(Formula::grad(a, Formula::conj(b, c))));
}

TEST_CASE("max_object_level is the longest chain's last position") {
  Formula a = lit("a"), b = lit("b"), c = lit("c");
  CHECK(max_object_level(Formula::disj(a, b)) == 0);
  CHECK(max_object_level(Formula::grad(a, Formula::grad(b, c))) == 2);
  CHECK(max_object_level(Formula::conj(Formula::grad(a, b), c)) == 1);
  CHECK_THROWS_AS(max_object_level(Formula::neg(a)), NotUnitChainError);
}

TEST_CASE("max_object_level is zero exactly for chain-free formulas") {
  laws::Rng rng(11);
  auto pool = laws::atom_pool(3);
  auto has_grad = [](auto&& self, const Formula& f) -> bool {
    if (f.is(Op::Elem)) return false;
    if (f.is(Op::Grad)) return true;
    if (f.is(Op::Not)) return self(self, f.child());
    return self(self, f.left()) || self(self, f.right());
  };
  for (int i = 0; i < 300; ++i) {
    Formula f = laws::gen_uce(rng, pool, 9, 3);
    CHECK((max_object_level(f) == 0) == !has_grad(has_grad, f));
  }
}

TEST_CASE("unit chains round-trip through formulas") {
  laws::Rng rng(13);
  auto pool = laws::atom_pool(3);
  for (int i = 0; i < 300; ++i) {
    UnitChain u = laws::gen_unit_chain(rng, pool, 5);
    auto back = UnitChain::from_formula(u.to_formula());
    REQUIRE(back.has_value());
    CHECK(*back == u);
  }
  CHECK_FALSE(UnitChain::from_formula(Formula::conj(lit("a"), lit("b"))).has_value());
  auto single = UnitChain::from_formula(lit("a"));
  REQUIRE(single.has_value());
  CHECK(single->size() == 1);
}

TEST_CASE("structural equality does not reassociate") {
  Formula a = lit("a"), b = lit("b"), c = lit("c");
  CHECK(Formula::conj(a, Formula::conj(b, c)) != Formula::conj(Formula::conj(a, b), c));
  CHECK(Formula::conj(a, b) != Formula::conj(b, a));
  CHECK(Formula::conj(a, b) == Formula::conj(a, b));
}

TEST_CASE("the empty prefix is distinct from any length-1 prefix") {
  Prefix eps;
  Prefix one{{SElem::top()}};
  CHECK(eps.length() == 0);
  CHECK_FALSE(eps == one);
}
