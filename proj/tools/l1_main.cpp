#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "l1/model.hpp"
#include "l1/parts.hpp"
#include "l1/rejection.hpp"
#include "l1/serialize.hpp"
#include "l1/syntax.hpp"
#include "l1/tableau.hpp"
#include "l1/translate.hpp"

namespace {

using nlohmann::json;

// The argument is formula text, a file holding one, or "-" for stdin.
std::string read_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

struct Options {
  std::string input;
  std::string mode = "eps3b";
  std::string system = "har";
  std::uint64_t seed = 0;
  bool json_out = false;
  bool oracle = false;
  bool upgrade = false;
  bool tptp = false;
};

l1::EpsMode mode_of(const Options& o) {
  return o.mode == "eps3" ? l1::EpsMode::Eps3 : l1::EpsMode::Eps3b;
}

l1::Verdict run_tableau(const l1::Formula& f, const Options& o) {
  return l1::build_tableau(f, l1::seeded_strategy(o.seed), mode_of(o));
}

// Exit code 4 signals that the exhaustive semantic check contradicts the
// tableau verdict; that would be a bug, never an expected outcome.
int cross_check(const l1::Formula& f, bool provable) {
  if (l1::oracle_valid(f) == provable) return 0;
  std::cerr << "oracle disagrees with the verdict on: " << f.render() << "\n";
  return 4;
}

int cmd_decide(const Options& o) {
  l1::Formula f = l1::parse_core(read_input(o.input));
  l1::Verdict v = run_tableau(f, o);
  bool provable = v.kind == l1::VerdictKind::Provable;
  if (o.oracle) {
    if (int rc = cross_check(f, provable)) return rc;
  }
  if (o.json_out) {
    json out;
    out["formula"] = f.render();
    out["mode"] = o.mode;
    out["verdict"] = provable ? "provable" : "rejected";
    if (!provable) out["hintikka"] = v.hintikka_leaf->render();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (provable ? "PROVABLE" : "REJECTED") << "\n";
  }
  return provable ? 0 : 1;
}

void print_tree(const l1::TableauNode& n, std::size_t depth) {
  std::cout << std::string(2 * depth, ' ') << n.formula.render();
  if (n.rule) std::cout << "  [" << l1::rule_kind_name(n.rule->kind) << "]";
  if (n.leaf == l1::TableauNode::LeafKind::Closed)
    std::cout << "  [closed on " << n.witness->subformula.render() << "]";
  if (n.leaf == l1::TableauNode::LeafKind::Hintikka) std::cout << "  [open]";
  std::cout << "\n";
  for (const l1::TableauNode& c : n.children) print_tree(c, depth + 1);
}

int cmd_tableau(const Options& o) {
  l1::Formula f = l1::parse_core(read_input(o.input));
  l1::Verdict v = run_tableau(f, o);
  bool provable = v.kind == l1::VerdictKind::Provable;
  if (o.json_out) {
    std::cout << l1::tableau_to_json(v.tableau, v.kind).dump(2) << "\n";
  } else {
    print_tree(v.tableau.root, 0);
    std::cout << (provable ? "PROVABLE" : "REJECTED") << "\n";
  }
  return provable ? 0 : 1;
}

int cmd_reject(const Options& o) {
  l1::Formula f = l1::parse_core(read_input(o.input));
  try {
    l1::RejectionDerivation d =
        o.system == "hl1" ? l1::reject_formula_hl1(f, mode_of(o))
                          : l1::reject_formula(f, mode_of(o));
    std::cout << l1::derivation_to_json(d).dump(2) << "\n";
    return 0;
  } catch (const l1::IsProvable&) {
    std::cerr << "formula is provable; nothing to reject\n";
    return 1;
  }
}

json violations_to_json(const std::vector<l1::AxiomViolation>& vs) {
  json out = json::array();
  for (const l1::AxiomViolation& v : vs) {
    json item;
    item["axiom"] = v.axiom;
    json values = json::array();
    for (const l1::NameValue& nv : v.values) values.push_back(json(nv));
    item["values"] = std::move(values);
    out.push_back(std::move(item));
  }
  return out;
}

int cmd_model(const Options& o) {
  l1::Formula f = l1::parse_core(read_input(o.input));
  l1::Verdict v = run_tableau(f, o);
  if (v.kind == l1::VerdictKind::Provable) {
    std::cerr << "formula is provable; no countermodel exists\n";
    return 1;
  }
  l1::L1Model m = l1::build_model(*v.hintikka_leaf);
  json out;
  out["formula"] = f.render();
  out["hintikka"] = v.hintikka_leaf->render();
  out["model"] = l1::model_to_json(m);
  out["audit"] = violations_to_json(l1::audit_l1_axioms(m));
  json singular = json::array();
  for (const l1::NameValue& nv : l1::singular_names(m))
    singular.push_back(json(nv));
  out["singular_names"] = std::move(singular);
  if (o.upgrade) {
    l1::L1Model up = l1::upgrade_to_L(m);
    out["upgraded"] = l1::model_to_json(up);
    out["upgraded_audit"] = violations_to_json(l1::audit_L_axiom(up));
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_translate(const Options& o) {
  l1::Formula f = l1::parse_core(read_input(o.input));
  l1::FolFormula t = l1::t_transform(f);
  if (o.json_out) {
    json out;
    out["formula"] = f.render();
    out["fol"] = l1::render_fol(t);
    out["tptp"] = l1::render_tptp(t, "goal");
    std::cout << out.dump(2) << "\n";
  } else if (o.tptp) {
    std::cout << l1::render_tptp(t, "goal") << "\n";
  } else {
    std::cout << l1::render_fol(t) << "\n";
  }
  return 0;
}

int cmd_check(const Options& o) {
  std::string text = read_input(o.input);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::cerr << "certificate is not valid JSON: " << e.what() << "\n";
    return 2;
  }
  l1::CheckResult r = l1::check_certificate(j);
  if (r.ok) {
    std::cout << "VALID\n";
    return 0;
  }
  std::cerr << "INVALID";
  if (j.value("kind", "") == std::string("rejection"))
    std::cerr << " at step " << r.step;
  std::cerr << ": " << r.reason << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tableau proving, axiomatic rejection, countermodels, and a "
               "first-order translation for the epsilon fragment"};
  app.require_subcommand(1);
  Options o;

  auto add_formula = [&o](CLI::App* cmd) {
    cmd->add_option("formula", o.input,
                    "formula text, a file containing one, or - for stdin")
        ->required();
  };
  auto add_mode = [&o](CLI::App* cmd) {
    cmd->add_option("--mode", o.mode, "third epsilon rule variant")
        ->check(CLI::IsMember({"eps3b", "eps3"}));
    cmd->add_option("--seed", o.seed,
                    "0 = deterministic default strategy, else randomized");
  };

  CLI::App* decide = app.add_subcommand("decide", "print the verdict");
  add_formula(decide);
  add_mode(decide);
  decide->add_flag("--json", o.json_out, "machine-readable output");
  decide->add_flag("--oracle", o.oracle,
                   "cross-check against exhaustive set semantics");

  CLI::App* tableau = app.add_subcommand("tableau", "emit the full tree");
  add_formula(tableau);
  add_mode(tableau);
  tableau->add_flag("--json", o.json_out, "certificate JSON");

  CLI::App* reject = app.add_subcommand("reject", "emit a rejection derivation");
  add_formula(reject);
  add_mode(reject);
  reject->add_option("--system", o.system, "derivation system")
      ->check(CLI::IsMember({"har", "hl1"}));

  CLI::App* model = app.add_subcommand("model", "emit a countermodel");
  add_formula(model);
  add_mode(model);
  model->add_flag("--upgrade-L", o.upgrade,
                  "also emit the singular-name-free extension");

  CLI::App* translate =
      app.add_subcommand("translate", "emit the first-order form");
  add_formula(translate);
  translate->add_flag("--json", o.json_out, "machine-readable output");
  translate->add_flag("--tptp", o.tptp, "TPTP-FOF instead of plain text");

  CLI::App* check = app.add_subcommand("check", "validate a certificate");
  check->add_option("certificate", o.input, "certificate file or - for stdin")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (decide->parsed()) return cmd_decide(o);
    if (tableau->parsed()) return cmd_tableau(o);
    if (reject->parsed()) return cmd_reject(o);
    if (model->parsed()) return cmd_model(o);
    if (translate->parsed()) return cmd_translate(o);
    if (check->parsed()) return cmd_check(o);
  } catch (const l1::ParseError& e) {
    // e.what() already spells out the accepted tokens when there are any.
    std::cerr << "parse error at offset " << e.offset << ": " << e.what() << "\n";
    return 2;
  } catch (const l1::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
