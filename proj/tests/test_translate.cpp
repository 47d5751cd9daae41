#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <string>

#include "doctest.h"
#include "gen.hpp"
#include "l1/model.hpp"
#include "l1/translate.hpp"

using l1::FolFormula;
using l1::FolStructure;
using l1::Formula;
using l1::NameValue;
using l1::NameVar;

TEST_CASE("one atom expands to a description with fresh bound variables") {
  FolFormula t = l1::t_transform(l1::parse_core("eps(a,b)"));
  CHECK(l1::render_fol(t) ==
        "(exists x1. (a(x1) & b(x1))) & "
        "(forall x1. (forall y1. ((a(x1) & a(y1)) -> x1 = y1)))");

  // occurrences are numbered left to right
  FolFormula both = l1::t_transform(l1::parse_core("eps(a,b) | eps(b,a)"));
  std::string text = l1::render_fol(both);
  CHECK(text.find("x1") != std::string::npos);
  CHECK(text.find("x2") != std::string::npos);
  CHECK(text.find("x3") == std::string::npos);
}

TEST_CASE("negation and disjunction pass through the translation") {
  FolFormula t = l1::t_transform(l1::parse_core("~eps(a,a)"));
  CHECK(t.kind() == FolFormula::Kind::Not);
  t = l1::t_transform(l1::parse_core("eps(a,a) | eps(b,b)"));
  CHECK(t.kind() == FolFormula::Kind::Or);
}

TEST_CASE("the translated atom means the same as the set semantics") {
  for (std::uint32_t ma = 0; ma < 16; ++ma) {
    for (std::uint32_t mb = 0; mb < 16; ++mb) {
      NameValue a, b;
      for (int n = 0; n < 4; ++n) {
        if (ma & (1u << n)) a.insert(n + 1);
        if (mb & (1u << n)) b.insert(n + 1);
      }
      CHECK(l1::atom_semantics_equivalence(a, b, {1, 2, 3, 4}));
    }
  }
}

TEST_CASE("translated formulas agree with direct evaluation") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    Formula f = gen::random_formula(rng, 3, 4);
    l1::L1Model m = gen::random_model(rng, 4, 3);

    FolStructure s;
    s.domain = m.universe;
    for (const auto& [var, val] : m.assignment) s.preds[var] = val;

    CHECK(l1::eval_fol(s, l1::t_transform(f)) == l1::eval(m, f));
  }
}

TEST_CASE("validity oracle on the schemata") {
  CHECK(l1::oracle_valid(l1::parse_core("eps(a,b) -> eps(a,a)")));
  CHECK(l1::oracle_valid(l1::parse_core("eps(a,b) & eps(b,c) -> eps(a,c)")));
  CHECK(l1::oracle_valid(l1::parse_core("eps(a,b) & eps(b,b) -> eps(b,a)")));
  CHECK(l1::oracle_valid(l1::parse_core("eps(a,b) & eps(b,c) -> eps(b,a)")));
  CHECK(l1::oracle_valid(l1::parse_core("~eps(a,b) | eps(a,b)")));
  CHECK(!l1::oracle_valid(l1::parse_core("eps(a,b)")));
  CHECK(!l1::oracle_valid(l1::parse_core("eps(a,b) -> eps(b,a)")));
  CHECK(!l1::oracle_valid(l1::parse_core("eps(a,b) | ~eps(b,a)")));
}

TEST_CASE("oracle equivalence") {
  Formula f = l1::parse_core("eps(a,b)");
  CHECK(l1::oracle_equivalent(f, l1::parse_core("eps(a,b) | eps(a,b)")));
  CHECK(!l1::oracle_equivalent(f, l1::parse_core("eps(b,a)")));
  CHECK(l1::oracle_equivalent(l1::parse_core("~~eps(a,b)"), f));
}

TEST_CASE("a larger universe never flips the verdict on small formulas") {
  for (const Formula& f : gen::exhaustive(4, 9, 2)) {
    std::size_t v = l1::variables(f).size();
    bool narrow = l1::oracle_valid(f);
    bool wide = l1::oracle_valid_universe(f, static_cast<int>(2 * v + 2));
    CHECK(narrow == wide);
  }
}

TEST_CASE("resource limits are reported, not silently truncated") {
  CHECK_THROWS_AS(
      l1::oracle_valid(l1::parse_core(
          "eps(a,b) | eps(c,d) | eps(e,f) | eps(g,h) | eps(i,j)")),
      l1::ResourceLimit);
  CHECK_THROWS_AS(
      l1::oracle_valid_universe(l1::parse_core("eps(a,b)"), 31),
      l1::ResourceLimit);
}

TEST_CASE("unbound variables are an error, not a default") {
  FolStructure s;
  s.domain = {1};
  s.preds[NameVar{"a"}] = {1};
  FolFormula bare = FolFormula::pred(NameVar{"a"}, "x1");
  CHECK_THROWS_AS(l1::eval_fol(s, bare), l1::UnboundVariable);
}

TEST_CASE("tptp rendering is a single closed conjecture") {
  std::string t =
      l1::render_tptp(l1::t_transform(l1::parse_core("eps(a,b)")), "goal");
  CHECK(t.substr(0, 22) == "fof(goal, conjecture, ");
  CHECK(t.back() == '.');
  CHECK(t.find("?[X1]") != std::string::npos);
  CHECK(t.find("![Y1]") != std::string::npos);
  CHECK(t.find("=>") != std::string::npos);
  CHECK(t.find("f_a(X1)") != std::string::npos);
  CHECK(t.find("f_b(X1)") != std::string::npos);
  // no lowercase bound variables leak through
  CHECK(t.find("x1") == std::string::npos);
}
