#include "l1/model.hpp"

#include <algorithm>
#include <cassert>

#include "l1/parts.hpp"

namespace l1 {

std::vector<NameValue> L1Model::domain_values() const {
  std::set<NameValue> seen;
  seen.insert(NameValue{});
  for (const auto& [var, val] : assignment) seen.insert(val);
  for (const NameValue& val : anonymous) seen.insert(val);
  return {seen.begin(), seen.end()};
}

NameValue L1Model::value_of(const NameVar& v) const {
  auto it = assignment.find(v);
  return it == assignment.end() ? NameValue{} : it->second;
}

namespace {

std::set<std::pair<NameVar, NameVar>> negative_atom_pairs(const Formula& f) {
  std::set<std::pair<NameVar, NameVar>> out;
  for (const PartOccurrence& p : enumerate_parts(f)) {
    if (p.path.polarity == Polarity::Negative && p.subformula.is_eps())
      out.insert({p.subformula.eps_left(), p.subformula.eps_right()});
  }
  return out;
}

}  // namespace

ChainAnalysis analyze(const Formula& hintikka) {
  if (!is_hintikka(hintikka))
    throw NotHintikka("chain analysis requires a downward-saturated open formula");

  std::vector<NameVar> vars = variables(hintikka);
  auto neg = negative_atom_pairs(hintikka);
  auto has = [&neg](const NameVar& x, const NameVar& y) {
    return neg.count({x, y}) != 0;
  };

  // Chain members are variables with a negative diagonal atom; two belong
  // together when both cross atoms are negative. Saturation makes this an
  // equivalence on the members, so a simple scan by first occurrence groups
  // them maximally.
  ChainAnalysis out;
  std::map<NameVar, std::size_t> chain_of;
  for (const NameVar& v : vars) {
    if (!has(v, v)) continue;
    bool placed = false;
    for (std::size_t i = 0; i < out.chains.size() && !placed; ++i) {
      const NameVar& head = out.chains[i].front();
      if (has(head, v) && has(v, head)) {
        out.chains[i].push_back(v);
        chain_of[v] = i;
        placed = true;
      }
    }
    if (!placed) {
      chain_of[v] = out.chains.size();
      out.chains.push_back({v});
    }
  }

  for (const auto& [a, b] : neg) {
    auto ia = chain_of.find(a);
    if (ia == chain_of.end()) continue;
    if (chain_of.count(b)) {
      // A variable a chain points at is never a member of another chain;
      // saturation would have merged the two.
      assert(chain_of.at(b) == ia->second);
      continue;
    }
    out.tails[b].insert(ia->second);
  }

  for (const NameVar& v : vars)
    if (!chain_of.count(v) && !out.tails.count(v)) out.others.push_back(v);
  return out;
}

L1Model build_model(const Formula& hintikka) {
  ChainAnalysis an = analyze(hintikka);
  std::vector<NameVar> vars = variables(hintikka);

  L1Model m;
  for (std::size_t i = 0; i < an.chains.size(); ++i)
    for (const NameVar& v : an.chains[i])
      m.assignment[v] = NameValue{static_cast<int>(i + 1)};

  auto occurrence_index = [&vars](const NameVar& v) {
    return std::find(vars.begin(), vars.end(), v) - vars.begin();
  };
  std::vector<NameVar> tail_order;
  for (const auto& [t, ends] : an.tails) tail_order.push_back(t);
  std::sort(tail_order.begin(), tail_order.end(),
            [&](const NameVar& x, const NameVar& y) {
              std::size_t cx = *an.tails.at(x).begin();
              std::size_t cy = *an.tails.at(y).begin();
              if (cx != cy) return cx < cy;
              return occurrence_index(x) < occurrence_index(y);
            });

  int fresh = static_cast<int>(an.chains.size());
  for (const NameVar& t : tail_order) {
    NameValue val;
    for (std::size_t c : an.tails.at(t)) val.insert(static_cast<int>(c + 1));
    val.insert(++fresh);
    m.assignment[t] = std::move(val);
  }

  for (const NameVar& v : an.others) m.assignment[v] = NameValue{};

  m.universe.clear();
  for (int n = 1; n <= fresh; ++n) m.universe.insert(n);
  if (m.universe.empty()) m.universe.insert(1);
  return m;
}

bool eval_atom(const NameValue& a, const NameValue& b) {
  return a.size() == 1 && b.count(*a.begin()) != 0;
}

bool eval_atom(const L1Model& m, const NameVar& a, const NameVar& b) {
  return eval_atom(m.value_of(a), m.value_of(b));
}

bool eval(const L1Model& m, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eps:
      return eval_atom(m, f.eps_left(), f.eps_right());
    case Formula::Kind::Not:
      return !eval(m, f.body());
    case Formula::Kind::Or:
      return eval(m, f.lhs()) || eval(m, f.rhs());
  }
  return false;
}

std::vector<AxiomViolation> audit_l1_axioms(const L1Model& m) {
  std::vector<AxiomViolation> out;
  std::vector<NameValue> dom = m.domain_values();
  for (const NameValue& a : dom) {
    for (const NameValue& b : dom) {
      if (eval_atom(a, b) && !eval_atom(a, a))
        out.push_back({"quasi-reflexivity", {a, b}});
      if (eval_atom(a, b) && eval_atom(b, b) && !eval_atom(b, a))
        out.push_back({"singular-symmetry", {a, b}});
      for (const NameValue& c : dom) {
        if (eval_atom(a, b) && eval_atom(b, c) && !eval_atom(a, c))
          out.push_back({"transitivity", {a, b, c}});
      }
    }
  }
  return out;
}

std::vector<NameValue> singular_names(const L1Model& m) {
  std::vector<NameValue> out;
  std::vector<NameValue> dom = m.domain_values();
  for (const NameValue& v : dom) {
    if (eval_atom(v, v)) continue;
    std::size_t members = 0;
    for (const NameValue& u : dom)
      if (eval_atom(u, v)) ++members;
    if (members == 1) out.push_back(v);
  }
  return out;
}

L1Model upgrade_to_L(const L1Model& m) {
  L1Model out = m;
  std::set<int> elements;
  for (const NameValue& v : out.domain_values())
    elements.insert(v.begin(), v.end());

  // Each pass adjoins one new unit value, and units only ever come from
  // elements already present, so this converges.
  for (std::size_t round = 0; round <= elements.size() + 1; ++round) {
    std::vector<NameValue> singular = singular_names(out);
    if (singular.empty()) return out;
    const NameValue& v = singular.front();
    // A singular value has exactly one member, a unit set {p}, and at least
    // one further element; adjoining a unit value for the largest other
    // element makes v non-singular without disturbing any variable's value.
    int p = 0;
    for (const NameValue& u : out.domain_values())
      if (eval_atom(u, v)) p = *u.begin();
    NameValue rest = v;
    rest.erase(p);
    assert(!rest.empty());
    out.anonymous.push_back(NameValue{*rest.rbegin()});
  }
  throw std::logic_error("singular-name repair failed to converge");
}

std::vector<AxiomViolation> audit_L_axiom(const L1Model& m) {
  std::vector<AxiomViolation> out;
  std::vector<NameValue> dom = m.domain_values();
  for (const NameValue& a : dom) {
    for (const NameValue& b : dom) {
      bool lhs = eval_atom(a, b);
      bool some_shared = false;
      for (const NameValue& x : dom)
        if (eval_atom(x, a) && eval_atom(x, b)) { some_shared = true; break; }
      bool unique = true;
      for (const NameValue& x : dom) {
        for (const NameValue& y : dom) {
          if (eval_atom(x, a) && eval_atom(y, a) && !eval_atom(x, y))
            unique = false;
        }
      }
      if (lhs != (some_shared && unique))
        out.push_back({"epsilon-characterization", {a, b}});
    }
  }
  return out;
}

}  // namespace l1
