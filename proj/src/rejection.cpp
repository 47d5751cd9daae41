#include "l1/rejection.hpp"

#include <cassert>
#include <utility>

#include "l1/parts.hpp"

namespace l1 {

const char* rule_name(StepRule r) {
  switch (r) {
    case StepRule::Thesis: return "thesis";
    case StepRule::AxEps: return "axiom-eps";
    case StepRule::AxNotEps: return "axiom-not-eps";
    case StepRule::Detach: return "detach";
    case StepRule::Subst: return "subst";
    case StepRule::Append: return "append";
    case StepRule::HintikkaAx: return "hintikka";
  }
  assert(false);
  return "";
}

const char* system_name(System s) {
  return s == System::HAR ? "har" : "hl1";
}

namespace {

bool is_literal(const Formula& f) {
  return f.is_eps() || (f.is_not() && f.body().is_eps());
}

bool is_literal_disjunction(const Formula& f) {
  if (f.is_or()) return is_literal_disjunction(f.lhs()) && is_literal_disjunction(f.rhs());
  return is_literal(f);
}

bool occurs_negative(const Formula& f, const Formula& part) {
  for (const PartOccurrence& occ : enumerate_parts(f))
    if (occ.path.polarity == Polarity::Negative && occ.subformula == part)
      return true;
  return false;
}

Formula designated_atom() {
  return Formula::eps(kDesignatedVar, kDesignatedVar);
}

}  // namespace

CheckResult check_derivation(const RejectionDerivation& d) {
  auto fail = [](std::size_t i, std::string reason) {
    return CheckResult{false, i, std::move(reason)};
  };
  if (d.steps.empty()) return fail(0, "derivation has no steps");
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const RejectionStep& s = d.steps[i];
    bool har = d.system == System::HAR;
    if (!har && (s.rule == StepRule::AxEps || s.rule == StepRule::AxNotEps ||
                 s.rule == StepRule::Subst || s.rule == StepRule::Append))
      return fail(i, std::string(rule_name(s.rule)) + " is not available in this system");
    if (har && s.rule == StepRule::HintikkaAx)
      return fail(i, "hintikka is not available in this system");

    Judgment want_judgment =
        s.rule == StepRule::Thesis ? Judgment::Accepted : Judgment::Rejected;
    if (s.judgment != want_judgment)
      return fail(i, "wrong judgment for the rule");

    std::size_t want_premises = 0;
    if (s.rule == StepRule::Detach) want_premises = 2;
    if (s.rule == StepRule::Subst || s.rule == StepRule::Append) want_premises = 1;
    if (s.premises.size() != want_premises)
      return fail(i, "wrong number of premises");
    for (std::size_t p : s.premises)
      if (p >= i) return fail(i, "premise does not precede the step");

    if (s.rule != StepRule::Subst && !s.substitution.empty())
      return fail(i, "unexpected substitution payload");
    if (s.rule != StepRule::Append && s.appended)
      return fail(i, "unexpected appended atom");

    switch (s.rule) {
      case StepRule::Thesis:
        if (decide(s.formula).kind != VerdictKind::Provable)
          return fail(i, "accepted formula is not provable");
        break;
      case StepRule::AxEps:
        if (!(s.formula == designated_atom()))
          return fail(i, "axiom must be the designated-variable atom");
        break;
      case StepRule::AxNotEps:
        if (!(s.formula == Formula::neg(designated_atom())))
          return fail(i, "axiom must be the negated designated-variable atom");
        break;
      case StepRule::Detach: {
        const RejectionStep& acc = d.steps[s.premises[0]];
        const RejectionStep& rej = d.steps[s.premises[1]];
        if (acc.judgment != Judgment::Accepted)
          return fail(i, "first premise must be accepted");
        if (rej.judgment != Judgment::Rejected)
          return fail(i, "second premise must be rejected");
        if (!acc.formula.is_or() || !acc.formula.lhs().is_not())
          return fail(i, "accepted premise is not an implication");
        if (!(acc.formula.lhs().body() == s.formula))
          return fail(i, "conclusion differs from the implication antecedent");
        if (!(acc.formula.rhs() == rej.formula))
          return fail(i, "rejected premise differs from the implication consequent");
        break;
      }
      case StepRule::Subst: {
        const RejectionStep& rej = d.steps[s.premises[0]];
        if (rej.judgment != Judgment::Rejected)
          return fail(i, "premise must be rejected");
        if (!(substitute(s.formula, s.substitution) == rej.formula))
          return fail(i, "premise is not the stated instance of the conclusion");
        break;
      }
      case StepRule::Append: {
        const RejectionStep& rej = d.steps[s.premises[0]];
        if (rej.judgment != Judgment::Rejected)
          return fail(i, "premise must be rejected");
        if (!s.appended || !s.appended->is_eps())
          return fail(i, "appended formula must be an atom");
        if (!(s.formula == Formula::disj(rej.formula, *s.appended)))
          return fail(i, "conclusion must append the atom to the premise");
        if (!is_literal_disjunction(rej.formula))
          return fail(i, "premise is not a disjunction of literals");
        if (!is_hintikka(rej.formula))
          return fail(i, "premise is not a Hintikka formula");
        if (occurs_negative(rej.formula, *s.appended))
          return fail(i, "appended atom occurs negated in the premise");
        break;
      }
      case StepRule::HintikkaAx:
        if (!is_hintikka(s.formula))
          return fail(i, "formula is not a Hintikka formula");
        break;
    }
  }
  const RejectionStep& last = d.steps.back();
  if (last.judgment != Judgment::Rejected || !(last.formula == d.goal))
    return fail(d.steps.size() - 1, "last step does not reject the goal");
  return CheckResult{true, 0, ""};
}

namespace {

class Builder {
 public:
  Builder(System sys, Formula goal) : d_{sys, std::move(goal), {}} {}

  std::size_t thesis(Formula f) {
    return push({Judgment::Accepted, std::move(f), StepRule::Thesis,
                 {}, {}, std::nullopt});
  }
  std::size_t ax(bool positive) {
    if (positive)
      return push({Judgment::Rejected, designated_atom(), StepRule::AxEps,
                   {}, {}, std::nullopt});
    return push({Judgment::Rejected, Formula::neg(designated_atom()),
                 StepRule::AxNotEps, {}, {}, std::nullopt});
  }
  std::size_t detach(Formula concl, std::size_t accepted, std::size_t rejected) {
    return push({Judgment::Rejected, std::move(concl), StepRule::Detach,
                 {accepted, rejected}, {}, std::nullopt});
  }
  std::size_t subst(Formula concl, std::size_t premise,
                    std::map<NameVar, NameVar> map) {
    return push({Judgment::Rejected, std::move(concl), StepRule::Subst,
                 {premise}, std::move(map), std::nullopt});
  }
  std::size_t append(Formula concl, std::size_t premise, Formula atom) {
    return push({Judgment::Rejected, std::move(concl), StepRule::Append,
                 {premise}, {}, std::move(atom)});
  }
  std::size_t hintikka_axiom(Formula f) {
    return push({Judgment::Rejected, std::move(f), StepRule::HintikkaAx,
                 {}, {}, std::nullopt});
  }
  // Rejects `from` given the step rejecting `to`; the implication from->to
  // must be provable.
  std::size_t pull_back(Formula from, const Formula& to, std::size_t to_step) {
    std::size_t t = thesis(implication(from, to));
    return detach(std::move(from), t, to_step);
  }
  RejectionDerivation take() && { return std::move(d_); }

 private:
  std::size_t push(RejectionStep s) {
    d_.steps.push_back(std::move(s));
    return d_.steps.size() - 1;
  }
  RejectionDerivation d_;
};

// Rejects a disjunction of atoms (positive true) or of negated atoms
// (positive false) by collapsing every variable onto the designated one and
// folding the resulting repetitions into the matching axiom.
std::size_t reject_uniform(Builder& b, const std::vector<Formula>& lits,
                           bool positive) {
  Formula target = disjunction_of(lits);
  Formula unit = positive ? designated_atom() : Formula::neg(designated_atom());
  std::map<NameVar, NameVar> collapse;
  for (const NameVar& v : variables(target))
    if (!(v == kDesignatedVar)) collapse[v] = kDesignatedVar;
  Formula collapsed = substitute(target, collapse);
  std::size_t cur = b.ax(positive);
  if (!(collapsed == unit)) cur = b.pull_back(collapsed, unit, cur);
  if (!(target == collapsed)) cur = b.subst(target, cur, std::move(collapse));
  return cur;
}

// Rejects the right-nested disjunction of the given literals, a mix of atoms
// and negated atoms. The negated ones are rejected first, then each plain
// atom is absorbed; the mixed case needs the negated block to carry the
// saturation conditions, which it inherits from the caller's input.
std::size_t reject_literals(Builder& b, const std::vector<Formula>& lits) {
  std::vector<Formula> neg, pos;
  for (const Formula& l : lits) (l.is_not() ? neg : pos).push_back(l);
  if (neg.empty() || pos.empty()) return reject_uniform(b, lits, neg.empty());
  std::size_t cur = reject_uniform(b, neg, false);
  Formula grown = disjunction_of(neg);
  for (const Formula& p : pos) {
    Formula next = Formula::disj(grown, p);
    cur = b.append(next, cur, p);
    grown = std::move(next);
  }
  Formula target = disjunction_of(lits);
  if (!(target == grown)) cur = b.pull_back(target, grown, cur);
  return cur;
}

std::size_t emit_hintikka_rejection(Builder& b, const Formula& h) {
  if (!is_hintikka(h)) throw NotHintikka(h.render());
  // Peel the negated-disjunction elements largest first: the entailment
  // justifying each peel runs through strictly smaller elements, which are
  // then all still present.
  std::vector<std::vector<Formula>> stages{flatten(h)};
  for (;;) {
    const std::vector<Formula>& cur = stages.back();
    std::size_t best = cur.size();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (is_literal(cur[i])) continue;
      if (best == cur.size() || cur[i].size() > cur[best].size()) best = i;
    }
    if (best == cur.size()) break;
    std::vector<Formula> next;
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (i != best) next.push_back(cur[i]);
    stages.push_back(std::move(next));
  }
  std::size_t cur = reject_literals(b, stages.back());
  for (std::size_t j = stages.size() - 1; j-- > 0;)
    cur = b.pull_back(disjunction_of(stages[j]),
                      disjunction_of(stages[j + 1]), cur);
  Formula start = disjunction_of(stages.front());
  if (!(h == start)) cur = b.pull_back(h, start, cur);
  return cur;
}

}  // namespace

RejectionDerivation reject_hintikka(const Formula& h) {
  Builder b(System::HAR, h);
  emit_hintikka_rejection(b, h);
  return std::move(b).take();
}

RejectionDerivation reject_formula(const Formula& f, EpsMode mode) {
  Verdict v = decide(f, mode);
  if (v.kind == VerdictKind::Provable) throw IsProvable(f.render());
  Builder b(System::HAR, f);
  std::size_t cur = emit_hintikka_rejection(b, v.witness_branch.back());
  for (std::size_t i = v.witness_branch.size() - 1; i-- > 0;)
    cur = b.pull_back(v.witness_branch[i], v.witness_branch[i + 1], cur);
  (void)cur;
  return std::move(b).take();
}

RejectionDerivation reject_formula_hl1(const Formula& f, EpsMode mode) {
  Verdict v = decide(f, mode);
  if (v.kind == VerdictKind::Provable) throw IsProvable(f.render());
  Builder b(System::HL1, f);
  std::size_t cur = b.hintikka_axiom(v.witness_branch.back());
  for (std::size_t i = v.witness_branch.size() - 1; i-- > 0;)
    cur = b.pull_back(v.witness_branch[i], v.witness_branch[i + 1], cur);
  (void)cur;
  return std::move(b).take();
}

}  // namespace l1
