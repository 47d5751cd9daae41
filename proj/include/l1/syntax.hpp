#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace l1 {

// A name variable of the object language. The parser only accepts nonempty
// ASCII lowercase words, so "a0" can never collide with user input; it is
// reserved as the designated variable of the rejection axioms.
struct NameVar {
  std::string text;

  NameVar() = default;
  NameVar(std::string t) : text(std::move(t)) {}
  NameVar(const char* t) : text(t) {}

  auto operator<=>(const NameVar&) const = default;
};

inline const NameVar kDesignatedVar{"a0"};

// Core formula: epsilon atoms, binary disjunction, negation. Values are
// immutable shared trees; equality is structural.
class Formula {
 public:
  enum class Kind : std::uint8_t { Eps, Or, Not };

  static Formula eps(NameVar a, NameVar b);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula neg(Formula body);

  Kind kind() const;
  bool is_eps() const { return kind() == Kind::Eps; }
  bool is_or() const { return kind() == Kind::Or; }
  bool is_not() const { return kind() == Kind::Not; }

  const NameVar& eps_left() const;
  const NameVar& eps_right() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& body() const;

  // Number of AST nodes.
  std::size_t size() const;
  std::size_t hash() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  std::string render() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
  friend class SurfaceFormula;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Total order used wherever a deterministic choice among formulas is needed:
// by node count first, then by rendered text.
bool formula_less(const Formula& a, const Formula& b);

// Parser-level formula; conjunction, implication and equivalence are
// accepted on input and compiled away by desugar().
class SurfaceFormula {
 public:
  enum class Kind : std::uint8_t { Eps, Or, And, Implies, Iff, Not };

  static SurfaceFormula eps(NameVar a, NameVar b);
  static SurfaceFormula binary(Kind k, SurfaceFormula lhs, SurfaceFormula rhs);
  static SurfaceFormula neg(SurfaceFormula body);

  Kind kind() const;
  const NameVar& eps_left() const;
  const NameVar& eps_right() const;
  const SurfaceFormula& lhs() const;
  const SurfaceFormula& rhs() const;
  const SurfaceFormula& body() const;

  bool operator==(const SurfaceFormula& other) const;
  bool operator!=(const SurfaceFormula& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit SurfaceFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t offset, const std::string& message,
             std::vector<std::string> expected);

  std::size_t offset;                  // byte offset into the input
  std::vector<std::string> expected;   // token spellings that would have been accepted
};

// Grammar (ASCII spellings, with unicode aliases in parentheses):
//   atom:  eps(<ident>,<ident>)        (ε)
//   ~A    negation                     (∼)
//   A | B disjunction, also \/         (∨)
//   A & B conjunction, also /\         (∧)
//   A -> B implication, right assoc    (⊃)
//   A <-> B equivalence                (≡)
// Precedence, tightest first: ~  &  |  ->  <->.  | is right-associated.
SurfaceFormula parse(std::string_view text);

// A & B  =>  ~(~A | ~B);  A -> B  =>  ~A | B;  A <-> B  =>  (A->B) & (B->A).
Formula desugar(const SurfaceFormula& f);

// desugar(parse(text)), the usual entry point.
Formula parse_core(std::string_view text);

// Like parse_core but also admits digit-suffixed identifiers, which never
// come from user input; certificates rendered by this library may contain
// the reserved variable and must read back.
Formula parse_internal(std::string_view text);

// Simultaneous substitution of name variables.
Formula substitute(const Formula& f, const std::map<NameVar, NameVar>& map);

// Variables in first-occurrence (depth-first, left-to-right) order. This
// order is the canonical numbering source for model construction.
std::vector<NameVar> variables(const Formula& f);

// Convenience constructors.
Formula implication(const Formula& a, const Formula& b);  // ~a | b
Formula disjunction_of(const std::vector<Formula>& parts);  // right-nested; parts nonempty

// Distinct subformulas (by structural equality).
std::size_t distinct_subformula_count(const Formula& f);

}  // namespace l1
