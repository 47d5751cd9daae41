#include "l1/parts.hpp"

#include <algorithm>
#include <unordered_map>

namespace l1 {

namespace {

void walk_parts(const Formula& f, std::vector<Step>& steps, Polarity pol,
                std::vector<PartOccurrence>& out) {
  out.push_back({OccurrencePath{steps, pol}, f});
  switch (f.kind()) {
    case Formula::Kind::Eps:
      return;
    case Formula::Kind::Not:
      steps.push_back(Step::NotBody);
      walk_parts(f.body(), steps, flip(pol), out);
      steps.pop_back();
      return;
    case Formula::Kind::Or:
      if (pol == Polarity::Positive) {
        steps.push_back(Step::OrLeft);
        walk_parts(f.lhs(), steps, pol, out);
        steps.back() = Step::OrRight;
        walk_parts(f.rhs(), steps, pol, out);
        steps.pop_back();
      }
      return;
  }
}

}  // namespace

std::vector<PartOccurrence> enumerate_parts(const Formula& f) {
  std::vector<PartOccurrence> out;
  std::vector<Step> steps;
  walk_parts(f, steps, Polarity::Positive, out);
  return out;
}

Formula subformula_at(const Formula& f, const std::vector<Step>& steps) {
  Formula cur = f;
  for (Step s : steps) {
    switch (s) {
      case Step::OrLeft:
        if (!cur.is_or()) throw InvalidOccurrence("OrLeft step at a non-disjunction");
        cur = cur.lhs();
        break;
      case Step::OrRight:
        if (!cur.is_or()) throw InvalidOccurrence("OrRight step at a non-disjunction");
        cur = cur.rhs();
        break;
      case Step::NotBody:
        if (!cur.is_not()) throw InvalidOccurrence("NotBody step at a non-negation");
        cur = cur.body();
        break;
    }
  }
  return cur;
}

void validate_occurrence(const Formula& f, const OccurrencePath& occ) {
  Formula cur = f;
  Polarity pol = Polarity::Positive;
  for (Step s : occ.steps) {
    switch (s) {
      case Step::OrLeft:
      case Step::OrRight:
        if (!cur.is_or())
          throw InvalidOccurrence("disjunct step at a non-disjunction");
        if (pol != Polarity::Positive)
          throw InvalidOccurrence("descent into a negative disjunction");
        cur = (s == Step::OrLeft) ? cur.lhs() : cur.rhs();
        break;
      case Step::NotBody:
        if (!cur.is_not())
          throw InvalidOccurrence("NotBody step at a non-negation");
        cur = cur.body();
        pol = flip(pol);
        break;
    }
  }
  if (pol != occ.polarity)
    throw InvalidOccurrence("stated polarity does not match the path");
}

Formula replace_at(const Formula& f, const std::vector<Step>& steps,
                   const Formula& replacement) {
  if (steps.empty()) return replacement;

  struct Impl {
    const std::vector<Step>& steps;
    const Formula& replacement;

    Formula at(const Formula& cur, std::size_t i) {
      if (i == steps.size()) return replacement;
      switch (steps[i]) {
        case Step::OrLeft:
          if (!cur.is_or()) throw InvalidOccurrence("OrLeft step at a non-disjunction");
          return Formula::disj(at(cur.lhs(), i + 1), cur.rhs());
        case Step::OrRight:
          if (!cur.is_or()) throw InvalidOccurrence("OrRight step at a non-disjunction");
          return Formula::disj(cur.lhs(), at(cur.rhs(), i + 1));
        case Step::NotBody:
          if (!cur.is_not()) throw InvalidOccurrence("NotBody step at a non-negation");
          return Formula::neg(at(cur.body(), i + 1));
      }
      throw std::logic_error("unreachable step");
    }
  };
  return Impl{steps, replacement}.at(f, 0);
}

MaybeFormula remove_part(const Formula& f, const OccurrencePath& occ) {
  validate_occurrence(f, occ);

  // Peeling a trailing NotBody step reduces the problem to removing the
  // enclosing negation; a trailing disjunct step is local surgery that
  // drops one disjunct of the parent.
  std::vector<Step> steps = occ.steps;
  while (!steps.empty() && steps.back() == Step::NotBody) steps.pop_back();
  if (steps.empty()) return std::nullopt;

  Step last = steps.back();
  steps.pop_back();
  Formula parent = subformula_at(f, steps);
  Formula kept = (last == Step::OrLeft) ? parent.rhs() : parent.lhs();
  return replace_at(f, steps, kept);
}

std::vector<PartOccurrence> minimal_parts(const Formula& f) {
  std::vector<PartOccurrence> out;
  for (PartOccurrence& p : enumerate_parts(f)) {
    bool atom = p.subformula.is_eps();
    bool blocked_or = p.subformula.is_or() &&
                      p.path.polarity == Polarity::Negative;
    if (atom || blocked_or) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Formula> flatten(const Formula& f) {
  std::vector<Formula> out;
  for (const PartOccurrence& p : minimal_parts(f)) {
    if (p.path.polarity == Polarity::Positive)
      out.push_back(p.subformula);
    else
      out.push_back(Formula::neg(p.subformula));
  }
  return out;
}

std::optional<Closure> find_closure(const Formula& f) {
  struct Seen {
    std::optional<OccurrencePath> pos, neg;
  };
  std::unordered_map<Formula, Seen, FormulaHash> seen;
  std::vector<Formula> order;
  for (const PartOccurrence& p : enumerate_parts(f)) {
    auto [it, fresh] = seen.try_emplace(p.subformula);
    if (fresh) order.push_back(p.subformula);
    auto& slot = p.path.polarity == Polarity::Positive ? it->second.pos
                                                       : it->second.neg;
    if (!slot) slot = p.path;
  }
  std::optional<Closure> best;
  for (const Formula& g : order) {
    const Seen& s = seen.at(g);
    if (!s.pos || !s.neg) continue;
    if (!best || formula_less(g, best->subformula))
      best = Closure{g, *s.pos, *s.neg};
  }
  return best;
}

}  // namespace l1
