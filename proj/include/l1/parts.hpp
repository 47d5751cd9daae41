#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "l1/syntax.hpp"

namespace l1 {

enum class Polarity : std::uint8_t { Positive, Negative };

inline Polarity flip(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

// One step of descent. Descending into a disjunct is only legal from a
// positive occurrence; descending through a negation flips polarity.
enum class Step : std::uint8_t { OrLeft, OrRight, NotBody };

struct OccurrencePath {
  std::vector<Step> steps;
  Polarity polarity = Polarity::Positive;

  auto operator<=>(const OccurrencePath&) const = default;
};

struct PartOccurrence {
  OccurrencePath path;
  Formula subformula;
};

struct InvalidOccurrence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The removal of a whole formula leaves nothing; by convention the
// disjunction of nothing with A is A itself.
using MaybeFormula = std::optional<Formula>;

// All part occurrences of f in depth-first, left-to-right order. The whole
// formula is the first entry (positive). A negative disjunction is a part
// but its disjuncts are not.
std::vector<PartOccurrence> enumerate_parts(const Formula& f);

// Subformula reached by a raw step path (no polarity checking).
Formula subformula_at(const Formula& f, const std::vector<Step>& steps);

// Checks that the path addresses a genuine part occurrence of f with the
// stated polarity. Throws InvalidOccurrence otherwise.
void validate_occurrence(const Formula& f, const OccurrencePath& occ);

// Replaces the subtree at a raw step path.
Formula replace_at(const Formula& f, const std::vector<Step>& steps,
                   const Formula& replacement);

// Removes the part occurrence, yielding the rest of the formula (or nothing
// when the whole formula is removed). Throws InvalidOccurrence on paths that
// do not address a part.
MaybeFormula remove_part(const Formula& f, const OccurrencePath& occ);

// Part occurrences containing no smaller part: atoms of either polarity and
// negative disjunctions.
std::vector<PartOccurrence> minimal_parts(const Formula& f);

// The equivalent flat disjunct list: minimal positive parts kept as they
// are, minimal negative parts negated, in left-to-right order.
std::vector<Formula> flatten(const Formula& f);

struct Closure {
  Formula subformula;
  OccurrencePath positive;
  OccurrencePath negative;
};

// Finds a subformula occurring both as positive and as negative part, if
// any. Deterministic: the smallest such formula (node count, then rendered
// text), with the leftmost occurrence on each side.
std::optional<Closure> find_closure(const Formula& f);

}  // namespace l1
