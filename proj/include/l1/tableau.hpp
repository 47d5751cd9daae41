#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "l1/parts.hpp"
#include "l1/syntax.hpp"

namespace l1 {

// Which third epsilon rule the calculus runs with. The default derives
// eps(b,a) from negative eps(a,b) and eps(b,b); the variant derives it from
// negative eps(a,b) and eps(b,c).
enum class EpsMode : std::uint8_t { Eps3b, Eps3 };

enum class RuleKind : std::uint8_t { OrNeg, Eps1, Eps2, Eps3b, Eps3 };

const char* rule_kind_name(RuleKind k);

// One way of extending a branch at a given formula.
//
//   OrNeg: principal is a negative disjunction A | B; two children append
//          ~A and ~B respectively.
//   Eps1:  principal is a negative eps(a,b); appends ~eps(a,a).
//   Eps2:  principals are negative eps(a,b), eps(b,c); appends ~eps(a,c).
//   Eps3b: principals are negative eps(a,b), eps(b,b); appends ~eps(b,a).
//   Eps3:  principals are negative eps(a,b), eps(b,c); appends ~eps(b,a).
//
// An instance is only applicable when the branch formula is not closed and
// no appended formula's body already occurs as a negative part (structural
// equality of contents, not paths). For OrNeg that covers both disjuncts.
struct RuleInstance {
  RuleKind kind;
  std::vector<OccurrencePath> principals;
  std::vector<Formula> introduced;  // the negated disjuncts the children append
};

struct TableauNode {
  enum class LeafKind : std::uint8_t { None, Closed, Hintikka };

  Formula formula;
  std::optional<RuleInstance> rule;  // absent at leaves
  std::vector<TableauNode> children;
  LeafKind leaf = LeafKind::None;
  std::optional<Closure> witness;  // Closed leaves only
};

struct Tableau {
  Formula root_formula;
  EpsMode mode;
  TableauNode root;
};

enum class VerdictKind : std::uint8_t { Provable, Rejected };

struct Verdict {
  VerdictKind kind;
  Tableau tableau;
  // For Rejected: the leftmost saturated open leaf and the branch formulas
  // leading to it, root first.
  std::optional<Formula> hintikka_leaf;
  std::vector<Formula> witness_branch;
};

struct NotHintikka : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Downward-saturated open formula: no subformula occurs as both a positive
// and a negative part; every negative disjunction already has a disjunct
// among the negative parts; the negative atoms are closed under deriving
// eps(a,a) from eps(a,b), eps(a,c) from eps(a,b) and eps(b,c), and eps(b,a)
// from eps(a,b) and eps(b,b).
bool is_hintikka(const Formula& f);

// All applicable rule instances, ordered by rule kind (OrNeg, Eps1, Eps2,
// then the mode's third rule) and principal paths within a kind. Empty when
// the formula is closed or saturated.
std::vector<RuleInstance> applicable(const Formula& f, EpsMode mode);

// Picks the index of the instance to apply at the given branch formula.
using RuleSelection =
    std::function<std::size_t(const Formula&, const std::vector<RuleInstance>&)>;

// Epsilon rules before OrNeg; within the candidate set, an instance all of
// whose children close immediately is preferred, otherwise the first in
// listed order. Keeps certificates short and reproducible.
RuleSelection default_strategy();

// seed == 0 yields the default strategy, anything else a uniformly random
// choice among applicable instances driven by that seed.
RuleSelection seeded_strategy(std::uint64_t seed);

Verdict build_tableau(const Formula& f, const RuleSelection& pick,
                      EpsMode mode);

// build_tableau with the default strategy and default mode.
Verdict decide(const Formula& f);
Verdict decide(const Formula& f, EpsMode mode);

}  // namespace l1
