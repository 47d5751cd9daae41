#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "gen.hpp"
#include "l1/syntax.hpp"

using l1::Formula;
using l1::NameVar;

TEST_CASE("atoms parse in functional and juxtaposed form") {
  Formula f = l1::parse_core("eps(a,b)");
  CHECK(f.is_eps());
  CHECK(f.eps_left() == NameVar{"a"});
  CHECK(f.eps_right() == NameVar{"b"});
  CHECK(l1::parse_core("εab") == f);
  CHECK(l1::parse_core(" eps( a , b ) ") == f);
  CHECK(l1::parse_core("eps(alpha,beta)").eps_left() == NameVar{"alpha"});
}

TEST_CASE("unicode connectives alias the ascii ones") {
  CHECK(l1::parse_core("∼εab ∨ εaa") ==
        l1::parse_core("~eps(a,b) | eps(a,a)"));
  CHECK(l1::parse_core("εab ∧ εbc ⊃ εac") ==
        l1::parse_core("eps(a,b) & eps(b,c) -> eps(a,c)"));
  CHECK(l1::parse_core("εaa ≡ εaa") ==
        l1::parse_core("eps(a,a) <-> eps(a,a)"));
}

TEST_CASE("precedence: not, and, or, implies, iff") {
  CHECK(l1::parse_core("~eps(a,a) | eps(b,b)") ==
        Formula::disj(Formula::neg(Formula::eps("a", "a")),
                      Formula::eps("b", "b")));
  // & binds tighter than |
  CHECK(l1::parse_core("eps(a,a) | eps(b,b) & eps(c,c)") ==
        l1::parse_core("eps(a,a) | (eps(b,b) & eps(c,c))"));
  // | binds tighter than ->
  CHECK(l1::parse_core("eps(a,a) | eps(b,b) -> eps(c,c)") ==
        l1::parse_core("(eps(a,a) | eps(b,b)) -> eps(c,c)"));
  // -> binds tighter than <->
  CHECK(l1::parse_core("eps(a,a) -> eps(b,b) <-> eps(c,c)") ==
        l1::parse_core("(eps(a,a) -> eps(b,b)) <-> eps(c,c)"));
}

TEST_CASE("binary connectives are right-associated") {
  CHECK(l1::parse_core("eps(a,a) | eps(b,b) | eps(c,c)") ==
        Formula::disj(Formula::eps("a", "a"),
                      Formula::disj(Formula::eps("b", "b"),
                                    Formula::eps("c", "c"))));
  CHECK(l1::parse_core("eps(a,a) -> eps(b,b) -> eps(c,c)") ==
        l1::parse_core("eps(a,a) -> (eps(b,b) -> eps(c,c))"));
}

TEST_CASE("desugaring compiles the defined connectives away") {
  CHECK(l1::parse_core("eps(a,b) -> eps(a,a)") ==
        Formula::disj(Formula::neg(Formula::eps("a", "b")),
                      Formula::eps("a", "a")));
  CHECK(l1::parse_core("eps(a,a) & eps(b,b)") ==
        Formula::neg(Formula::disj(Formula::neg(Formula::eps("a", "a")),
                                   Formula::neg(Formula::eps("b", "b")))));
  CHECK(l1::parse_core("eps(a,a) <-> eps(b,b)") ==
        l1::parse_core("(eps(a,a) -> eps(b,b)) & (eps(b,b) -> eps(a,a))"));
}

TEST_CASE("parse errors carry offset and expectations") {
  try {
    l1::parse_core("eps(a,");
    FAIL("should have thrown");
  } catch (const l1::ParseError& e) {
    CHECK(e.offset == 6);
    CHECK(!e.expected.empty());
  }
  CHECK_THROWS_AS(l1::parse_core(""), l1::ParseError);
  CHECK_THROWS_AS(l1::parse_core("eps(a,b) |"), l1::ParseError);
  CHECK_THROWS_AS(l1::parse_core("eps(a,b) eps(b,c)"), l1::ParseError);
  CHECK_THROWS_AS(l1::parse_core("(eps(a,b)"), l1::ParseError);
  CHECK_THROWS_AS(l1::parse_core("eps(A,b)"), l1::ParseError);
}

TEST_CASE("the reserved variable is invisible to user input") {
  CHECK_THROWS_AS(l1::parse_core("eps(a0,a0)"), l1::ParseError);
  Formula f = l1::parse_internal("eps(a0,a0)");
  CHECK(f.eps_left() == l1::kDesignatedVar);
  CHECK(f.render() == "eps(a0,a0)");
}

TEST_CASE("render parses back to the same formula") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 2000; ++i) {
    Formula f = gen::random_formula(rng, 3, 5);
    CHECK(l1::parse_core(f.render()) == f);
  }
}

TEST_CASE("render parenthesizes only where the grammar needs it") {
  Formula f = Formula::disj(
      Formula::disj(Formula::eps("a", "a"), Formula::eps("b", "b")),
      Formula::eps("c", "c"));
  CHECK(f.render() == "(eps(a,a) | eps(b,b)) | eps(c,c)");
  CHECK(Formula::neg(Formula::disj(Formula::eps("a", "a"),
                                   Formula::eps("b", "b")))
            .render() == "~(eps(a,a) | eps(b,b))");
  CHECK(Formula::neg(Formula::neg(Formula::eps("a", "b"))).render() ==
        "~~eps(a,b)");
}

TEST_CASE("substitution is simultaneous") {
  Formula f = l1::parse_core("~eps(a,b) | eps(b,a)");
  std::map<NameVar, NameVar> swap{{NameVar{"a"}, NameVar{"b"}},
                                  {NameVar{"b"}, NameVar{"a"}}};
  CHECK(l1::substitute(f, swap) == l1::parse_core("~eps(b,a) | eps(a,b)"));
  CHECK(l1::substitute(l1::substitute(f, swap), swap) == f);
  std::map<NameVar, NameVar> collapse{{NameVar{"a"}, NameVar{"c"}},
                                      {NameVar{"b"}, NameVar{"c"}}};
  CHECK(l1::substitute(f, collapse) == l1::parse_core("~eps(c,c) | eps(c,c)"));
}

TEST_CASE("variables come back in first-occurrence order") {
  Formula f = l1::parse_core("~eps(b,c) | (eps(a,b) | eps(c,c))");
  std::vector<NameVar> vars = l1::variables(f);
  REQUIRE(vars.size() == 3);
  CHECK(vars[0] == NameVar{"b"});
  CHECK(vars[1] == NameVar{"c"});
  CHECK(vars[2] == NameVar{"a"});
}

TEST_CASE("structural size and subformula counting") {
  Formula f = l1::parse_core("~eps(a,b) | ~eps(a,b)");
  CHECK(f.size() == 5);
  // eps(a,b), ~eps(a,b), and the disjunction
  CHECK(l1::distinct_subformula_count(f) == 3);
}

TEST_CASE("convenience constructors") {
  Formula a = Formula::eps("a", "a");
  Formula b = Formula::eps("b", "b");
  Formula c = Formula::eps("c", "c");
  CHECK(l1::implication(a, b) == Formula::disj(Formula::neg(a), b));
  CHECK(l1::disjunction_of({a, b, c}) == Formula::disj(a, Formula::disj(b, c)));
  CHECK(l1::disjunction_of({a}) == a);
}

TEST_CASE("the exhaustive generator is canonical and duplicate-free") {
  std::vector<Formula> all = gen::exhaustive(3, 9, 2);
  std::set<std::string> seen;
  for (const Formula& f : all) {
    CHECK(seen.insert(f.render()).second);
    std::vector<NameVar> vars = l1::variables(f);
    REQUIRE(!vars.empty());
    CHECK(vars.front() == NameVar{"a"});
    if (vars.size() > 1) CHECK(vars[1] == NameVar{"b"});
  }
  // 2 atoms, 2+8 with one connective, 2+24+64 with two, 2+48+320+640 with three
  CHECK(all.size() == 2 + 10 + 90 + 1010);
}
