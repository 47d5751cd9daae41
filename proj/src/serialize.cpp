#include "l1/serialize.hpp"

#include <algorithm>

namespace l1 {

using nlohmann::json;

std::string path_to_string(const OccurrencePath& p) {
  std::string out;
  for (Step s : p.steps) {
    switch (s) {
      case Step::OrLeft: out += 'l'; break;
      case Step::OrRight: out += 'r'; break;
      case Step::NotBody: out += 'n'; break;
    }
  }
  return out;
}

OccurrencePath path_from_string(std::string_view s) {
  OccurrencePath p;
  p.polarity = Polarity::Positive;
  for (char c : s) {
    switch (c) {
      case 'l': p.steps.push_back(Step::OrLeft); break;
      case 'r': p.steps.push_back(Step::OrRight); break;
      case 'n':
        p.steps.push_back(Step::NotBody);
        p.polarity = flip(p.polarity);
        break;
      default:
        throw BadCertificate("bad path character");
    }
  }
  return p;
}

namespace {

json node_to_json(const TableauNode& n) {
  json out;
  out["formula"] = n.formula.render();
  if (n.rule) {
    json rule;
    rule["kind"] = rule_kind_name(n.rule->kind);
    json principals = json::array();
    for (const OccurrencePath& p : n.rule->principals)
      principals.push_back(path_to_string(p));
    rule["principals"] = std::move(principals);
    json introduced = json::array();
    for (const Formula& f : n.rule->introduced)
      introduced.push_back(f.render());
    rule["introduced"] = std::move(introduced);
    out["rule"] = std::move(rule);
  }
  json children = json::array();
  for (const TableauNode& c : n.children) children.push_back(node_to_json(c));
  out["children"] = std::move(children);
  if (n.leaf == TableauNode::LeafKind::Closed) {
    out["leaf"] = "closed";
    json w;
    w["subformula"] = n.witness->subformula.render();
    w["positive"] = path_to_string(n.witness->positive);
    w["negative"] = path_to_string(n.witness->negative);
    out["witness"] = std::move(w);
  } else if (n.leaf == TableauNode::LeafKind::Hintikka) {
    out["leaf"] = "hintikka";
  }
  return out;
}

}  // namespace

json tableau_to_json(const Tableau& t, VerdictKind verdict) {
  json out;
  out["kind"] = "tableau";
  out["formula"] = t.root_formula.render();
  out["mode"] = t.mode == EpsMode::Eps3b ? "eps3b" : "eps3";
  out["verdict"] = verdict == VerdictKind::Provable ? "provable" : "rejected";
  out["tree"] = node_to_json(t.root);
  return out;
}

namespace {

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw BadCertificate(std::string("missing field: ") + name);
  return *it;
}

std::string str_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_string())
    throw BadCertificate(std::string("field is not a string: ") + name);
  return f.get<std::string>();
}

Formula formula_field(const json& j, const char* name) {
  std::string text = str_field(j, name);
  try {
    return parse_internal(text);
  } catch (const ParseError&) {
    throw BadCertificate("unparseable formula: " + text);
  }
}

struct TableauCheck {
  EpsMode mode;
  bool all_closed = true;
  bool any_hintikka = false;

  // Throws BadCertificate with a structural reason on the first violation.
  void node(const json& n, const Formula& expect) {
    Formula f = formula_field(n, "formula");
    if (!(f == expect))
      throw BadCertificate("node formula does not extend its parent: " +
                           f.render());
    const json& children = field(n, "children");
    if (!children.is_array()) throw BadCertificate("children is not an array");

    auto leaf_it = n.find("leaf");
    if (leaf_it != n.end()) {
      if (!children.empty())
        throw BadCertificate("leaf node has children");
      if (n.find("rule") != n.end())
        throw BadCertificate("leaf node has a rule");
      if (!leaf_it->is_string()) throw BadCertificate("leaf is not a string");
      std::string leaf = leaf_it->get<std::string>();
      if (leaf == "closed") {
        const json& w = field(n, "witness");
        Formula sub = formula_field(w, "subformula");
        OccurrencePath pos = path_from_string(str_field(w, "positive"));
        OccurrencePath neg = path_from_string(str_field(w, "negative"));
        if (pos.polarity != Polarity::Positive ||
            neg.polarity != Polarity::Negative)
          throw BadCertificate("witness paths have wrong polarities");
        try {
          validate_occurrence(f, pos);
          validate_occurrence(f, neg);
        } catch (const InvalidOccurrence&) {
          throw BadCertificate("witness path does not address a part");
        }
        if (!(subformula_at(f, pos.steps) == sub) ||
            !(subformula_at(f, neg.steps) == sub))
          throw BadCertificate("closure witness does not hold");
        return;
      }
      if (leaf == "hintikka") {
        if (!is_hintikka(f))
          throw BadCertificate("open leaf is not saturated: " + f.render());
        any_hintikka = true;
        all_closed = false;
        return;
      }
      throw BadCertificate("unknown leaf kind: " + leaf);
    }

    const json& rule = field(n, "rule");
    RuleInstance inst{RuleKind::OrNeg, {}, {}};
    std::string kind = str_field(rule, "kind");
    bool known = false;
    for (RuleKind k : {RuleKind::OrNeg, RuleKind::Eps1, RuleKind::Eps2,
                       RuleKind::Eps3b, RuleKind::Eps3})
      if (kind == rule_kind_name(k)) {
        inst.kind = k;
        known = true;
      }
    if (!known) throw BadCertificate("unknown rule kind: " + kind);
    const json& principals = field(rule, "principals");
    if (!principals.is_array())
      throw BadCertificate("principals is not an array");
    for (const json& p : principals) {
      if (!p.is_string()) throw BadCertificate("principal is not a string");
      inst.principals.push_back(path_from_string(p.get<std::string>()));
    }
    const json& introduced = field(rule, "introduced");
    if (!introduced.is_array())
      throw BadCertificate("introduced is not an array");
    for (const json& g : introduced) {
      if (!g.is_string()) throw BadCertificate("introduced is not a string");
      try {
        inst.introduced.push_back(parse_internal(g.get<std::string>()));
      } catch (const ParseError&) {
        throw BadCertificate("unparseable introduced formula");
      }
    }

    std::vector<RuleInstance> legal = applicable(f, mode);
    bool found = false;
    for (const RuleInstance& cand : legal) {
      if (cand.kind != inst.kind || cand.principals != inst.principals ||
          cand.introduced.size() != inst.introduced.size())
        continue;
      bool same = true;
      for (std::size_t i = 0; i < cand.introduced.size(); ++i)
        if (!(cand.introduced[i] == inst.introduced[i])) same = false;
      if (same) { found = true; break; }
    }
    if (!found)
      throw BadCertificate("rule instance is not applicable at: " + f.render());

    if (children.size() != inst.introduced.size())
      throw BadCertificate("child count does not match the rule");
    for (std::size_t i = 0; i < children.size(); ++i)
      node(children[i], Formula::disj(f, inst.introduced[i]));
  }
};

}  // namespace

CheckResult check_tableau_json(const json& j) {
  try {
    if (str_field(j, "kind") != "tableau")
      throw BadCertificate("not a tableau certificate");
    std::string mode_s = str_field(j, "mode");
    if (mode_s != "eps3b" && mode_s != "eps3")
      throw BadCertificate("unknown mode: " + mode_s);
    TableauCheck check{mode_s == "eps3b" ? EpsMode::Eps3b : EpsMode::Eps3};
    Formula root = formula_field(j, "formula");
    check.node(field(j, "tree"), root);
    std::string verdict = str_field(j, "verdict");
    if (verdict == "provable") {
      if (!check.all_closed)
        throw BadCertificate("verdict says provable but a leaf is open");
    } else if (verdict == "rejected") {
      if (!check.any_hintikka)
        throw BadCertificate("verdict says rejected but every leaf closes");
    } else {
      throw BadCertificate("unknown verdict: " + verdict);
    }
    return CheckResult{true, 0, ""};
  } catch (const BadCertificate& e) {
    return CheckResult{false, 0, e.what()};
  } catch (const json::exception& e) {
    return CheckResult{false, 0, e.what()};
  }
}

json derivation_to_json(const RejectionDerivation& d) {
  json out;
  out["kind"] = "rejection";
  out["system"] = system_name(d.system);
  out["goal"] = d.goal.render();
  json steps = json::array();
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const RejectionStep& s = d.steps[i];
    json step;
    step["index"] = i;
    step["judgment"] = s.judgment == Judgment::Accepted ? "+" : "-";
    step["formula"] = s.formula.render();
    step["rule"] = rule_name(s.rule);
    step["premises"] = s.premises;
    if (s.rule == StepRule::Subst) {
      json map = json::object();
      for (const auto& [from, to] : s.substitution) map[from.text] = to.text;
      step["substitution"] = std::move(map);
    }
    if (s.rule == StepRule::Append) step["appended"] = s.appended->render();
    steps.push_back(std::move(step));
  }
  out["steps"] = std::move(steps);
  return out;
}

RejectionDerivation derivation_from_json(const json& j) {
  if (str_field(j, "kind") != "rejection")
    throw BadCertificate("not a rejection certificate");
  std::string sys = str_field(j, "system");
  if (sys != "har" && sys != "hl1")
    throw BadCertificate("unknown system: " + sys);
  RejectionDerivation d{sys == "har" ? System::HAR : System::HL1,
                        formula_field(j, "goal"),
                        {}};
  const json& steps = field(j, "steps");
  if (!steps.is_array()) throw BadCertificate("steps is not an array");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const json& s = steps[i];
    const json& index = field(s, "index");
    if (!index.is_number_unsigned() || index.get<std::size_t>() != i)
      throw BadCertificate("step indices must count up from zero");
    std::string judgment = str_field(s, "judgment");
    if (judgment != "+" && judgment != "-")
      throw BadCertificate("unknown judgment: " + judgment);
    std::string rule_s = str_field(s, "rule");
    bool known = false;
    StepRule rule = StepRule::Thesis;
    for (StepRule r : {StepRule::Thesis, StepRule::AxEps, StepRule::AxNotEps,
                       StepRule::Detach, StepRule::Subst, StepRule::Append,
                       StepRule::HintikkaAx})
      if (rule_s == rule_name(r)) {
        rule = r;
        known = true;
      }
    if (!known) throw BadCertificate("unknown rule: " + rule_s);
    RejectionStep step{
        judgment == "+" ? Judgment::Accepted : Judgment::Rejected,
        formula_field(s, "formula"),
        rule,
        {},
        {},
        std::nullopt};
    const json& premises = field(s, "premises");
    if (!premises.is_array()) throw BadCertificate("premises is not an array");
    for (const json& p : premises) {
      if (!p.is_number_unsigned())
        throw BadCertificate("premise is not an index");
      step.premises.push_back(p.get<std::size_t>());
    }
    if (auto it = s.find("substitution"); it != s.end()) {
      if (!it->is_object())
        throw BadCertificate("substitution is not an object");
      for (const auto& [from, to] : it->items()) {
        if (!to.is_string())
          throw BadCertificate("substitution target is not a string");
        step.substitution[NameVar{from}] = NameVar{to.get<std::string>()};
      }
    }
    if (s.find("appended") != s.end())
      step.appended = formula_field(s, "appended");
    d.steps.push_back(std::move(step));
  }
  return d;
}

json model_to_json(const L1Model& m) {
  json out;
  json assignment = json::object();
  for (const auto& [var, val] : m.assignment)
    assignment[var.text] = json(val);
  out["assignment"] = std::move(assignment);
  json anonymous = json::array();
  for (const NameValue& v : m.anonymous) anonymous.push_back(json(v));
  out["anonymous"] = std::move(anonymous);
  out["universe"] = json(m.universe);
  return out;
}

L1Model model_from_json(const json& j) {
  L1Model m;
  auto as_value = [](const json& v) {
    if (!v.is_array()) throw BadCertificate("name value is not an array");
    NameValue out;
    for (const json& e : v) {
      if (!e.is_number_integer())
        throw BadCertificate("name value element is not an integer");
      out.insert(e.get<int>());
    }
    return out;
  };
  const json& assignment = field(j, "assignment");
  if (!assignment.is_object())
    throw BadCertificate("assignment is not an object");
  for (const auto& [var, val] : assignment.items())
    m.assignment[NameVar{var}] = as_value(val);
  const json& anonymous = field(j, "anonymous");
  if (!anonymous.is_array()) throw BadCertificate("anonymous is not an array");
  for (const json& v : anonymous) m.anonymous.push_back(as_value(v));
  m.universe = as_value(field(j, "universe"));
  return m;
}

CheckResult check_certificate(const json& j) {
  try {
    std::string kind = str_field(j, "kind");
    if (kind == "tableau") return check_tableau_json(j);
    if (kind == "rejection") return check_derivation(derivation_from_json(j));
    throw BadCertificate("unknown certificate kind: " + kind);
  } catch (const BadCertificate& e) {
    return CheckResult{false, 0, e.what()};
  } catch (const json::exception& e) {
    return CheckResult{false, 0, e.what()};
  }
}

}  // namespace l1
