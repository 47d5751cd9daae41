#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "l1/syntax.hpp"
#include "l1/tableau.hpp"

namespace l1 {

// The value of a name variable: a finite set of positive naturals, compared
// extensionally (there is exactly one empty value).
using NameValue = std::set<int>;

// A finite assignment of values to name variables. Variables not listed
// denote the empty value. domain_values() always contains the empty value
// for that reason. Anonymous values are domain elements no variable names;
// the upgrade that repairs singular names creates them.
struct L1Model {
  std::map<NameVar, NameValue> assignment;
  std::vector<NameValue> anonymous;
  std::set<int> universe{1};

  std::vector<NameValue> domain_values() const;
  NameValue value_of(const NameVar& v) const;
};

// Maximal groups of variables whose epsilon atoms occur negatively in both
// directions (including the diagonal), plus the variables such groups point
// at from outside.
struct ChainAnalysis {
  std::vector<std::vector<NameVar>> chains;        // first-occurrence order
  std::map<NameVar, std::set<std::size_t>> tails;  // tail -> indices of chains ending at it
  std::vector<NameVar> others;
};

ChainAnalysis analyze(const Formula& hintikka);

// Canonical countermodel for a downward-saturated open formula: the members
// of the i-th chain share the unit value {i}; each tail gets the numbers of
// the chains ending at it plus one fresh number; everything else is empty.
// Fresh numbers are handed out by (first chain ending at the tail, then the
// tail's first occurrence). With no chains at all the universe is {1}.
L1Model build_model(const Formula& hintikka);

// eps is true iff the first value is a unit set whose element lies in the
// second.
bool eval_atom(const NameValue& a, const NameValue& b);
bool eval_atom(const L1Model& m, const NameVar& a, const NameVar& b);
bool eval(const L1Model& m, const Formula& f);

struct AxiomViolation {
  std::string axiom;
  std::vector<NameValue> values;
};

// Instantiates quasi-reflexivity (eps(a,b) -> eps(a,a)), transitivity
// (eps(a,b) & eps(b,c) -> eps(a,c)) and singular symmetry (eps(a,b) &
// eps(b,b) -> eps(b,a)) over every tuple of domain values.
std::vector<AxiomViolation> audit_l1_axioms(const L1Model& m);

// Values that are not atoms (eps(v,v) false) yet have exactly one member
// under eval_atom.
std::vector<NameValue> singular_names(const L1Model& m);

// Adjoins unit values until no singular names remain. Existing variable
// assignments are untouched, so truth values of formulas are preserved.
L1Model upgrade_to_L(const L1Model& m);

// Checks the characteristic equivalence
//   eps(a,b) <-> ex x (eps(x,a) & eps(x,b))
//                & all x,y (eps(x,a) & eps(y,a) -> eps(x,y))
// with the quantifiers ranging over domain_values().
std::vector<AxiomViolation> audit_L_axiom(const L1Model& m);

}  // namespace l1
