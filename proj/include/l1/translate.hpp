#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>

#include "l1/model.hpp"
#include "l1/syntax.hpp"

namespace l1 {

// First-order formula over unary predicates (one per name variable),
// equality, and individual variables.
class FolFormula {
 public:
  enum class Kind : std::uint8_t {
    Pred, Equal, Or, And, Not, Implies, Exists, Forall
  };

  static FolFormula pred(NameVar p, std::string var);
  static FolFormula equal(std::string a, std::string b);
  static FolFormula f_or(FolFormula a, FolFormula b);
  static FolFormula f_and(FolFormula a, FolFormula b);
  static FolFormula f_not(FolFormula a);
  static FolFormula f_implies(FolFormula a, FolFormula b);
  static FolFormula exists(std::string var, FolFormula body);
  static FolFormula forall(std::string var, FolFormula body);

  Kind kind() const;
  const NameVar& pred_sym() const;
  const std::string& var() const;   // Pred argument, bound var, Equal's first
  const std::string& var2() const;  // Equal only: the second operand
  const FolFormula& lhs() const;
  const FolFormula& rhs() const;
  const FolFormula& body() const;       // Not and quantifiers

 private:
  struct Node;
  explicit FolFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Interpretation: a finite domain of individuals and one subset per name
// variable. Predicates not listed denote the empty subset.
struct FolStructure {
  std::set<int> domain;
  std::map<NameVar, std::set<int>> preds;
};

struct UnboundVariable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// eps(a,b) becomes
//   ex x (a(x) & b(x)) & all x,y (a(x) & a(y) -> x = y)
// with bound variables x1,y1, x2,y2, ... indexed per atom occurrence in
// depth-first order; | and ~ translate homomorphically.
FolFormula t_transform(const Formula& f);

// Tarskian truth in a finite structure; the formula must be a sentence.
bool eval_fol(const FolStructure& s, const FolFormula& f);

std::string render_fol(const FolFormula& f);
std::string render_tptp(const FolFormula& f, const std::string& name);

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Brute-force validity over set assignments: every variable ranges over all
// subsets of {1..2v} where v is the number of distinct variables. Throws
// ResourceLimit when v exceeds var_cap.
bool oracle_valid(const Formula& f, std::size_t var_cap = 4);

// Same enumeration with an explicit universe {1..universe_size}; used to
// confirm the 2v bound is already stable.
bool oracle_valid_universe(const Formula& f, int universe_size,
                           std::size_t var_cap = 4);

// True when f and g agree under every set assignment over {1..2v}, with v
// counting the union of their variables.
bool oracle_equivalent(const Formula& f, const Formula& g,
                       std::size_t var_cap = 4);

// Checks that eval_atom agrees with the first-order expansion of a single
// atom over the given universe: the structure interprets the two predicates
// by the two values.
bool atom_semantics_equivalence(const NameValue& a, const NameValue& b,
                                const std::set<int>& universe);

}  // namespace l1
