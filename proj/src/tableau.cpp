#include "l1/tableau.hpp"

#include <memory>
#include <random>
#include <set>
#include <unordered_set>
#include <utility>

namespace l1 {

const char* rule_kind_name(RuleKind k) {
  switch (k) {
    case RuleKind::OrNeg: return "or-neg";
    case RuleKind::Eps1: return "eps1";
    case RuleKind::Eps2: return "eps2";
    case RuleKind::Eps3b: return "eps3b";
    case RuleKind::Eps3: return "eps3";
  }
  return "?";
}

namespace {

using VarPair = std::pair<NameVar, NameVar>;

struct PartsIndex {
  std::unordered_set<Formula, FormulaHash> negative_contents;
  std::vector<PartOccurrence> negative_atoms;  // DFS order
  std::vector<PartOccurrence> negative_ors;    // DFS order
  std::set<VarPair> negative_atom_pairs;

  explicit PartsIndex(const Formula& f) {
    for (PartOccurrence& p : enumerate_parts(f)) {
      if (p.path.polarity != Polarity::Negative) continue;
      negative_contents.insert(p.subformula);
      if (p.subformula.is_eps()) {
        negative_atom_pairs.insert(
            {p.subformula.eps_left(), p.subformula.eps_right()});
        negative_atoms.push_back(std::move(p));
      } else if (p.subformula.is_or()) {
        negative_ors.push_back(std::move(p));
      }
    }
  }

  bool has_negative(const Formula& g) const {
    return negative_contents.count(g) != 0;
  }

  bool has_negative_atom(const NameVar& a, const NameVar& b) const {
    return negative_atom_pairs.count({a, b}) != 0;
  }
};

}  // namespace

bool is_hintikka(const Formula& f) {
  if (find_closure(f)) return false;
  PartsIndex idx(f);
  for (const PartOccurrence& p : idx.negative_ors) {
    if (!idx.has_negative(p.subformula.lhs()) &&
        !idx.has_negative(p.subformula.rhs()))
      return false;
  }
  for (const VarPair& ab : idx.negative_atom_pairs) {
    if (!idx.has_negative_atom(ab.first, ab.first)) return false;
    if (idx.has_negative_atom(ab.second, ab.second) &&
        !idx.has_negative_atom(ab.second, ab.first))
      return false;
    for (const VarPair& cd : idx.negative_atom_pairs) {
      if (ab.second == cd.first && !idx.has_negative_atom(ab.first, cd.second))
        return false;
    }
  }
  return true;
}

std::vector<RuleInstance> applicable(const Formula& f, EpsMode mode) {
  std::vector<RuleInstance> out;
  if (find_closure(f)) return out;
  PartsIndex idx(f);

  auto atom = [](const NameVar& x, const NameVar& y) {
    return Formula::eps(x, y);
  };

  for (const PartOccurrence& p : idx.negative_ors) {
    const Formula& l = p.subformula.lhs();
    const Formula& r = p.subformula.rhs();
    if (idx.has_negative(l) || idx.has_negative(r)) continue;
    out.push_back({RuleKind::OrNeg,
                   {p.path},
                   {Formula::neg(l), Formula::neg(r)}});
  }
  for (const PartOccurrence& p : idx.negative_atoms) {
    Formula body = atom(p.subformula.eps_left(), p.subformula.eps_left());
    if (idx.has_negative(body)) continue;
    out.push_back({RuleKind::Eps1, {p.path}, {Formula::neg(body)}});
  }
  const auto& atoms = idx.negative_atoms;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if (i == j) continue;
      const Formula& first = atoms[i].subformula;
      const Formula& second = atoms[j].subformula;
      if (first.eps_right() != second.eps_left()) continue;
      Formula body = atom(first.eps_left(), second.eps_right());
      if (idx.has_negative(body)) continue;
      out.push_back({RuleKind::Eps2,
                     {atoms[i].path, atoms[j].path},
                     {Formula::neg(body)}});
    }
  }
  if (mode == EpsMode::Eps3b) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      for (std::size_t j = 0; j < atoms.size(); ++j) {
        if (i == j) continue;
        const Formula& first = atoms[i].subformula;
        const Formula& second = atoms[j].subformula;
        if (second.eps_left() != second.eps_right()) continue;
        if (first.eps_right() != second.eps_left()) continue;
        Formula body = atom(first.eps_right(), first.eps_left());
        if (idx.has_negative(body)) continue;
        out.push_back({RuleKind::Eps3b,
                       {atoms[i].path, atoms[j].path},
                       {Formula::neg(body)}});
      }
    }
  } else {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      for (std::size_t j = 0; j < atoms.size(); ++j) {
        if (i == j) continue;
        const Formula& first = atoms[i].subformula;
        const Formula& second = atoms[j].subformula;
        if (first.eps_right() != second.eps_left()) continue;
        Formula body = atom(first.eps_right(), first.eps_left());
        if (idx.has_negative(body)) continue;
        out.push_back({RuleKind::Eps3,
                       {atoms[i].path, atoms[j].path},
                       {Formula::neg(body)}});
      }
    }
  }
  return out;
}

namespace {

std::vector<Formula> child_formulas(const Formula& f, const RuleInstance& inst) {
  std::vector<Formula> out;
  out.reserve(inst.introduced.size());
  for (const Formula& g : inst.introduced)
    out.push_back(Formula::disj(f, g));
  return out;
}

bool closes(const Formula& f) { return find_closure(f).has_value(); }

}  // namespace

RuleSelection default_strategy() {
  return [](const Formula& f, const std::vector<RuleInstance>& opts) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < opts.size(); ++i)
      if (opts[i].kind != RuleKind::OrNeg) candidates.push_back(i);
    if (candidates.empty())
      for (std::size_t i = 0; i < opts.size(); ++i) candidates.push_back(i);

    for (std::size_t i : candidates) {
      bool all_close = true;
      for (const Formula& child : child_formulas(f, opts[i]))
        if (!closes(child)) { all_close = false; break; }
      if (all_close) return i;
    }
    return candidates.front();
  };
}

RuleSelection seeded_strategy(std::uint64_t seed) {
  if (seed == 0) return default_strategy();
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](const Formula&, const std::vector<RuleInstance>& opts) {
    std::uniform_int_distribution<std::size_t> dist(0, opts.size() - 1);
    return dist(*rng);
  };
}

namespace {

struct Builder {
  const RuleSelection& pick;
  EpsMode mode;
  std::size_t max_branch;

  // Leftmost open-leaf bookkeeping.
  bool all_closed = true;
  std::optional<Formula> first_hintikka;
  std::vector<Formula> first_branch;

  TableauNode grow(const Formula& f, std::vector<Formula>& branch) {
    branch.push_back(f);
    if (branch.size() > max_branch)
      throw std::logic_error("tableau branch exceeded its termination bound");

    TableauNode node{f, std::nullopt, {}, TableauNode::LeafKind::None,
                     std::nullopt};
    if (auto cl = find_closure(f)) {
      node.leaf = TableauNode::LeafKind::Closed;
      node.witness = std::move(cl);
      branch.pop_back();
      return node;
    }
    std::vector<RuleInstance> opts = applicable(f, mode);
    if (opts.empty()) {
      if (!is_hintikka(f))
        throw std::logic_error("saturated open branch is not downward saturated");
      node.leaf = TableauNode::LeafKind::Hintikka;
      all_closed = false;
      if (!first_hintikka) {
        first_hintikka = f;
        first_branch = branch;
      }
      branch.pop_back();
      return node;
    }
    std::size_t chosen = pick(f, opts);
    if (chosen >= opts.size())
      throw std::logic_error("rule selection out of range");
    RuleInstance inst = opts[chosen];
    for (const Formula& child : child_formulas(f, inst))
      node.children.push_back(grow(child, branch));
    node.rule = std::move(inst);
    branch.pop_back();
    return node;
  }
};

}  // namespace

Verdict build_tableau(const Formula& f, const RuleSelection& pick,
                      EpsMode mode) {
  std::size_t vars = variables(f).size();
  Builder b{pick, mode,
            distinct_subformula_count(f) + 3 * vars * vars, true,
            std::nullopt, {}};
  std::vector<Formula> branch;
  TableauNode root = b.grow(f, branch);
  Verdict v{b.all_closed ? VerdictKind::Provable : VerdictKind::Rejected,
            Tableau{f, mode, std::move(root)}, std::move(b.first_hintikka),
            std::move(b.first_branch)};
  return v;
}

Verdict decide(const Formula& f) { return decide(f, EpsMode::Eps3b); }

Verdict decide(const Formula& f, EpsMode mode) {
  return build_tableau(f, default_strategy(), mode);
}

}  // namespace l1
