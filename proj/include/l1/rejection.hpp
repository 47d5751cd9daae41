#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "l1/syntax.hpp"
#include "l1/tableau.hpp"

namespace l1 {

// Counter-axiomatic derivations: a formula is rejected by deriving it from
// rejected axioms with rules that run detachment and substitution backwards.
enum class System : std::uint8_t {
  HAR,  // rejected axioms are the designated-variable atom and its negation
  HL1,  // rejected axioms are the Hintikka formulas
};

enum class StepRule : std::uint8_t {
  Thesis,      // accepted side: the formula is provable
  AxEps,       // rejected axiom eps(a0,a0)
  AxNotEps,    // rejected axiom ~eps(a0,a0)
  Detach,      // accepted A -> B and rejected B give rejected A
  Subst,       // rejected instance gives rejected schema
  Append,      // rejected literal disjunction absorbs a fresh atom
  HintikkaAx,  // rejected axiom: any Hintikka formula
};

const char* rule_name(StepRule r);
const char* system_name(System s);

enum class Judgment : std::uint8_t { Accepted, Rejected };

struct RejectionStep {
  Judgment judgment;
  Formula formula;
  StepRule rule;
  std::vector<std::size_t> premises;      // indices of earlier steps
  std::map<NameVar, NameVar> substitution;  // Subst only
  std::optional<Formula> appended;          // Append only: the atom
};

struct RejectionDerivation {
  System system;
  Formula goal;
  std::vector<RejectionStep> steps;
};

struct CheckResult {
  bool ok;
  std::size_t step;    // first failing step when !ok
  std::string reason;  // empty when ok
};

// Validates every step: rule availability in the derivation's system,
// premise ordering and judgments, side conditions, and that the accepted
// steps are in fact provable. The last step must reject the goal.
CheckResult check_derivation(const RejectionDerivation& d);

struct IsProvable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Derives the rejection of any Hintikka formula. Throws NotHintikka
// otherwise.
RejectionDerivation reject_hintikka(const Formula& h);

// Derives the rejection of any non-provable formula by walking its tableau
// to an open leaf, rejecting the leaf, and pulling the rejection back up the
// branch. Throws IsProvable when the formula has a closed tableau.
RejectionDerivation reject_formula(const Formula& f,
                                   EpsMode mode = EpsMode::Eps3b);

// Same pullback but the open leaf is discharged as a rejected axiom.
RejectionDerivation reject_formula_hl1(const Formula& f,
                                       EpsMode mode = EpsMode::Eps3b);

}  // namespace l1
