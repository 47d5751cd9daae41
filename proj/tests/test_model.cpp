#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "gen.hpp"
#include "l1/model.hpp"
#include "l1/parts.hpp"

using l1::Formula;
using l1::L1Model;
using l1::NameValue;
using l1::NameVar;

namespace {

const char* kTwoChain =
    "~eps(a,b) | ~eps(b,a) | ~eps(a,a) | ~eps(b,b)";
const char* kChainWithTail =
    "~eps(a,b) | ~eps(b,c) | ~eps(a,c) | ~eps(b,a) | ~eps(a,a) | ~eps(b,b)";
const char* kTwoChainsTwoTails =
    "~(eps(a,a) | ~eps(b,b)) | ~eps(a,b) | ~eps(d,c) | eps(c,b) | ~eps(b,b) "
    "| ~eps(b,a) | ~eps(a,a) | ~eps(d,d) | ~eps(a,e) | ~eps(b,e)";

}  // namespace

TEST_CASE("atom evaluation needs a unit on the left") {
  CHECK(l1::eval_atom(NameValue{1}, NameValue{1}));
  CHECK(l1::eval_atom(NameValue{1}, NameValue{1, 2}));
  CHECK(!l1::eval_atom(NameValue{1, 2}, NameValue{1, 2}));
  CHECK(!l1::eval_atom(NameValue{}, NameValue{1}));
  CHECK(!l1::eval_atom(NameValue{1}, NameValue{}));
  CHECK(!l1::eval_atom(NameValue{2}, NameValue{1}));
}

TEST_CASE("chain and tail analysis") {
  l1::ChainAnalysis an = l1::analyze(l1::parse_core(kChainWithTail));
  REQUIRE(an.chains.size() == 1);
  CHECK(an.chains[0] == std::vector<NameVar>{"a", "b"});
  REQUIRE(an.tails.size() == 1);
  CHECK(an.tails.at("c") == std::set<std::size_t>{0});
  CHECK(an.others.empty());

  an = l1::analyze(l1::parse_core(kTwoChainsTwoTails));
  REQUIRE(an.chains.size() == 2);
  CHECK(an.chains[0] == std::vector<NameVar>{"a", "b"});
  CHECK(an.chains[1] == std::vector<NameVar>{"d"});
  CHECK(an.tails.at("e") == std::set<std::size_t>{0});
  CHECK(an.tails.at("c") == std::set<std::size_t>{1});

  // no negative atoms at all: everything is unconstrained
  an = l1::analyze(l1::parse_core("eps(a,b)"));
  CHECK(an.chains.empty());
  CHECK(an.tails.empty());
  CHECK(an.others == std::vector<NameVar>{"a", "b"});

  CHECK_THROWS_AS(l1::analyze(l1::parse_core("~eps(a,b)")), l1::NotHintikka);
}

TEST_CASE("canonical countermodels for the three worked examples") {
  L1Model m = l1::build_model(l1::parse_core(kTwoChain));
  CHECK(m.assignment ==
        std::map<NameVar, NameValue>{{"a", {1}}, {"b", {1}}});
  CHECK(m.universe == std::set<int>{1});

  m = l1::build_model(l1::parse_core(kChainWithTail));
  CHECK(m.assignment == std::map<NameVar, NameValue>{
                            {"a", {1}}, {"b", {1}}, {"c", {1, 2}}});
  CHECK(m.universe == std::set<int>{1, 2});

  m = l1::build_model(l1::parse_core(kTwoChainsTwoTails));
  CHECK(m.assignment ==
        std::map<NameVar, NameValue>{{"a", {1}},
                                     {"b", {1}},
                                     {"c", {2, 4}},
                                     {"d", {2}},
                                     {"e", {1, 3}}});
  CHECK(m.universe == std::set<int>{1, 2, 3, 4});
}

TEST_CASE("the countermodel falsifies what it was built from") {
  std::mt19937_64 rng(5);
  int rejected = 0;
  for (int i = 0; i < 300; ++i) {
    Formula f = gen::random_formula(rng, 3, 4);
    l1::Verdict v = l1::decide(f);
    if (v.kind != l1::VerdictKind::Rejected) continue;
    rejected++;
    L1Model m = l1::build_model(*v.hintikka_leaf);
    CHECK(!l1::eval(m, *v.hintikka_leaf));
    CHECK(!l1::eval(m, f));
    for (const l1::PartOccurrence& p : l1::enumerate_parts(*v.hintikka_leaf)) {
      bool val = l1::eval(m, p.subformula);
      if (p.path.polarity == l1::Polarity::Positive)
        CHECK(!val);
      else
        CHECK(val);
    }
  }
  CHECK(rejected > 100);
}

TEST_CASE("subset models always pass the axiom audit") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    L1Model m = gen::random_model(rng, 4, 3);
    CHECK(l1::audit_l1_axioms(m).empty());
  }
}

TEST_CASE("singular names are the non-atoms with exactly one member") {
  L1Model m = l1::build_model(l1::parse_core(kChainWithTail));
  // c holds {1,2}: not an atom, and {1} is its only member
  CHECK(l1::singular_names(m) == std::vector<NameValue>{{1, 2}});

  L1Model plain = l1::build_model(l1::parse_core(kTwoChain));
  CHECK(l1::singular_names(plain).empty());
}

TEST_CASE("the characteristic-equivalence audit spots singular names") {
  L1Model m = l1::build_model(l1::parse_core(kChainWithTail));
  CHECK(!l1::audit_L_axiom(m).empty());
  CHECK(l1::audit_L_axiom(m).front().axiom == "epsilon-characterization");

  L1Model plain = l1::build_model(l1::parse_core(kTwoChain));
  CHECK(l1::audit_L_axiom(plain).empty());
}

TEST_CASE("upgrading removes singular names and keeps truth values") {
  Formula h = l1::parse_core(kChainWithTail);
  L1Model m = l1::build_model(h);
  L1Model up = l1::upgrade_to_L(m);

  CHECK(l1::singular_names(up).empty());
  CHECK(l1::audit_L_axiom(up).empty());
  CHECK(up.assignment == m.assignment);
  REQUIRE(up.anonymous.size() == 1);
  CHECK(up.anonymous[0] == NameValue{2});
  CHECK(!l1::eval(up, h));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    L1Model r = gen::random_model(rng, 4, 3);
    L1Model ru = l1::upgrade_to_L(r);
    CHECK(l1::singular_names(ru).empty());
    CHECK(l1::audit_L_axiom(ru).empty());
    for (int k = 0; k < 20; ++k) {
      Formula f = gen::random_formula(rng, 3, 4);
      CHECK(l1::eval(r, f) == l1::eval(ru, f));
    }
  }
}

TEST_CASE("upgrade is the identity without singular names") {
  L1Model m = l1::build_model(l1::parse_core(kTwoChain));
  L1Model up = l1::upgrade_to_L(m);
  CHECK(up.assignment == m.assignment);
  CHECK(up.anonymous.empty());
}

TEST_CASE("missing variables denote the empty value") {
  L1Model m;
  CHECK(m.value_of("z") == NameValue{});
  std::vector<NameValue> dom = m.domain_values();
  REQUIRE(dom.size() == 1);
  CHECK(dom[0] == NameValue{});
}
