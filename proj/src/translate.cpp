#include "l1/translate.hpp"

#include <cassert>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

namespace l1 {

struct FolFormula::Node {
  Kind kind;
  NameVar pred;
  std::string v1, v2;
  std::optional<FolFormula> left, right;
};

FolFormula::Kind FolFormula::kind() const { return node_->kind; }

FolFormula FolFormula::pred(NameVar p, std::string var) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pred;
  n->pred = std::move(p);
  n->v1 = std::move(var);
  return FolFormula(std::move(n));
}

FolFormula FolFormula::equal(std::string a, std::string b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Equal;
  n->v1 = std::move(a);
  n->v2 = std::move(b);
  return FolFormula(std::move(n));
}

FolFormula FolFormula::f_or(FolFormula a, FolFormula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->left = std::move(a);
  n->right = std::move(b);
  return FolFormula(std::move(n));
}
FolFormula FolFormula::f_and(FolFormula a, FolFormula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->left = std::move(a);
  n->right = std::move(b);
  return FolFormula(std::move(n));
}
FolFormula FolFormula::f_implies(FolFormula a, FolFormula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Implies;
  n->left = std::move(a);
  n->right = std::move(b);
  return FolFormula(std::move(n));
}

FolFormula FolFormula::f_not(FolFormula a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->left = std::move(a);
  return FolFormula(std::move(n));
}

FolFormula FolFormula::exists(std::string var, FolFormula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Exists;
  n->v1 = std::move(var);
  n->left = std::move(body);
  return FolFormula(std::move(n));
}
FolFormula FolFormula::forall(std::string var, FolFormula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Forall;
  n->v1 = std::move(var);
  n->left = std::move(body);
  return FolFormula(std::move(n));
}

const NameVar& FolFormula::pred_sym() const {
  assert(node_->kind == Kind::Pred);
  return node_->pred;
}
const std::string& FolFormula::var() const {
  assert(node_->kind == Kind::Pred || node_->kind == Kind::Exists ||
         node_->kind == Kind::Forall || node_->kind == Kind::Equal);
  return node_->v1;
}
const std::string& FolFormula::var2() const {
  assert(node_->kind == Kind::Equal);
  return node_->v2;
}
const FolFormula& FolFormula::lhs() const {
  assert(node_->kind == Kind::Or || node_->kind == Kind::And ||
         node_->kind == Kind::Implies);
  return *node_->left;
}
const FolFormula& FolFormula::rhs() const {
  assert(node_->kind == Kind::Or || node_->kind == Kind::And ||
         node_->kind == Kind::Implies);
  return *node_->right;
}
const FolFormula& FolFormula::body() const {
  assert(node_->kind == Kind::Not || node_->kind == Kind::Exists ||
         node_->kind == Kind::Forall);
  return *node_->left;
}

namespace {

// Expands one atom occurrence; k numbers the occurrence so bound variables
// stay distinct across the whole output.
FolFormula expand_atom(const NameVar& a, const NameVar& b, int k) {
  std::string x = "x" + std::to_string(k);
  std::string y = "y" + std::to_string(k);
  FolFormula some = FolFormula::exists(
      x, FolFormula::f_and(FolFormula::pred(a, x), FolFormula::pred(b, x)));
  FolFormula one = FolFormula::forall(
      x, FolFormula::forall(
             y, FolFormula::f_implies(
                    FolFormula::f_and(FolFormula::pred(a, x),
                                      FolFormula::pred(a, y)),
                    FolFormula::equal(x, y))));
  return FolFormula::f_and(std::move(some), std::move(one));
}

FolFormula transform_rec(const Formula& f, int& counter) {
  switch (f.kind()) {
    case Formula::Kind::Eps:
      return expand_atom(f.eps_left(), f.eps_right(), ++counter);
    case Formula::Kind::Or: {
      FolFormula l = transform_rec(f.lhs(), counter);
      FolFormula r = transform_rec(f.rhs(), counter);
      return FolFormula::f_or(std::move(l), std::move(r));
    }
    case Formula::Kind::Not:
      return FolFormula::f_not(transform_rec(f.body(), counter));
  }
  assert(false);
  std::abort();
}

}  // namespace

FolFormula t_transform(const Formula& f) {
  int counter = 0;
  return transform_rec(f, counter);
}

namespace {

using Env = std::map<std::string, int>;

bool eval_rec(const FolStructure& s, const FolFormula& f, Env& env) {
  switch (f.kind()) {
    case FolFormula::Kind::Pred: {
      auto v = env.find(f.var());
      if (v == env.end()) throw UnboundVariable(f.var());
      auto p = s.preds.find(f.pred_sym());
      return p != s.preds.end() && p->second.count(v->second) != 0;
    }
    case FolFormula::Kind::Equal: {
      auto v1 = env.find(f.var());
      auto v2 = env.find(f.var2());
      if (v1 == env.end()) throw UnboundVariable(f.var());
      if (v2 == env.end()) throw UnboundVariable(f.var2());
      return v1->second == v2->second;
    }
    case FolFormula::Kind::Or:
      return eval_rec(s, f.lhs(), env) || eval_rec(s, f.rhs(), env);
    case FolFormula::Kind::And:
      return eval_rec(s, f.lhs(), env) && eval_rec(s, f.rhs(), env);
    case FolFormula::Kind::Implies:
      return !eval_rec(s, f.lhs(), env) || eval_rec(s, f.rhs(), env);
    case FolFormula::Kind::Not:
      return !eval_rec(s, f.body(), env);
    case FolFormula::Kind::Exists: {
      for (int d : s.domain) {
        auto saved = env.find(f.var());
        std::optional<int> old;
        if (saved != env.end()) old = saved->second;
        env[f.var()] = d;
        bool ok = eval_rec(s, f.body(), env);
        if (old) env[f.var()] = *old; else env.erase(f.var());
        if (ok) return true;
      }
      return false;
    }
    case FolFormula::Kind::Forall: {
      for (int d : s.domain) {
        auto saved = env.find(f.var());
        std::optional<int> old;
        if (saved != env.end()) old = saved->second;
        env[f.var()] = d;
        bool ok = eval_rec(s, f.body(), env);
        if (old) env[f.var()] = *old; else env.erase(f.var());
        if (!ok) return false;
      }
      return true;
    }
  }
  assert(false);
  std::abort();
}

}  // namespace

bool eval_fol(const FolStructure& s, const FolFormula& f) {
  Env env;
  return eval_rec(s, f, env);
}

namespace {

// Wraps the operand in parentheses unless it is atomic or a negation.
void render_rec(const FolFormula& f, std::ostringstream& out) {
  auto paren = [&out](const FolFormula& g) {
    bool atom = g.kind() == FolFormula::Kind::Pred ||
                g.kind() == FolFormula::Kind::Equal ||
                g.kind() == FolFormula::Kind::Not;
    if (!atom) out << '(';
    render_rec(g, out);
    if (!atom) out << ')';
  };
  switch (f.kind()) {
    case FolFormula::Kind::Pred:
      out << f.pred_sym().text << '(' << f.var() << ')';
      return;
    case FolFormula::Kind::Equal:
      out << f.var() << " = " << f.var2();
      return;
    case FolFormula::Kind::Or:
      paren(f.lhs());
      out << " | ";
      paren(f.rhs());
      return;
    case FolFormula::Kind::And:
      paren(f.lhs());
      out << " & ";
      paren(f.rhs());
      return;
    case FolFormula::Kind::Implies:
      paren(f.lhs());
      out << " -> ";
      paren(f.rhs());
      return;
    case FolFormula::Kind::Not:
      out << '~';
      paren(f.body());
      return;
    case FolFormula::Kind::Exists:
      out << "exists " << f.var() << ". (";
      render_rec(f.body(), out);
      out << ')';
      return;
    case FolFormula::Kind::Forall:
      out << "forall " << f.var() << ". (";
      render_rec(f.body(), out);
      out << ')';
      return;
  }
}

std::string tptp_var(const std::string& v) {
  std::string out = v;
  out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

void render_tptp_rec(const FolFormula& f, std::ostringstream& out) {
  auto paren = [&out](const FolFormula& g) {
    out << '(';
    render_tptp_rec(g, out);
    out << ')';
  };
  switch (f.kind()) {
    case FolFormula::Kind::Pred:
      out << "f_" << f.pred_sym().text << '(' << tptp_var(f.var()) << ')';
      return;
    case FolFormula::Kind::Equal:
      out << tptp_var(f.var()) << " = " << tptp_var(f.var2());
      return;
    case FolFormula::Kind::Or:
      paren(f.lhs());
      out << " | ";
      paren(f.rhs());
      return;
    case FolFormula::Kind::And:
      paren(f.lhs());
      out << " & ";
      paren(f.rhs());
      return;
    case FolFormula::Kind::Implies:
      paren(f.lhs());
      out << " => ";
      paren(f.rhs());
      return;
    case FolFormula::Kind::Not:
      out << "~ ";
      paren(f.body());
      return;
    case FolFormula::Kind::Exists:
      out << "?[" << tptp_var(f.var()) << "] : ";
      paren(f.body());
      return;
    case FolFormula::Kind::Forall:
      out << "![" << tptp_var(f.var()) << "] : ";
      paren(f.body());
      return;
  }
}

}  // namespace

std::string render_fol(const FolFormula& f) {
  std::ostringstream out;
  render_rec(f, out);
  return out.str();
}

std::string render_tptp(const FolFormula& f, const std::string& name) {
  std::ostringstream out;
  out << "fof(" << name << ", conjecture, ";
  render_tptp_rec(f, out);
  out << ").";
  return out.str();
}

namespace {

// Truth of a core formula under an assignment of subset bitmasks.
bool eval_mask(const Formula& f,
               const std::map<NameVar, std::uint32_t>& assign) {
  switch (f.kind()) {
    case Formula::Kind::Eps: {
      std::uint32_t a = assign.at(f.eps_left());
      std::uint32_t b = assign.at(f.eps_right());
      bool unit = a != 0 && (a & (a - 1)) == 0;
      return unit && (a & b) != 0;
    }
    case Formula::Kind::Or:
      return eval_mask(f.lhs(), assign) || eval_mask(f.rhs(), assign);
    case Formula::Kind::Not:
      return !eval_mask(f.body(), assign);
  }
  assert(false);
  std::abort();
}

bool valid_over(const Formula& f, int universe_size, std::size_t var_cap) {
  std::vector<NameVar> vars = variables(f);
  if (vars.size() > var_cap)
    throw ResourceLimit("too many variables for exhaustive search");
  if (universe_size > 30)
    throw ResourceLimit("universe too large for bitmask enumeration");
  std::uint64_t subsets = std::uint64_t{1} << universe_size;
  std::map<NameVar, std::uint32_t> assign;
  for (const NameVar& v : vars) assign[v] = 0;

  // Odometer over all |vars| tuples of subsets.
  std::vector<std::uint64_t> idx(vars.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < vars.size(); ++i)
      assign[vars[i]] = static_cast<std::uint32_t>(idx[i]);
    if (!eval_mask(f, assign)) return false;
    std::size_t i = 0;
    for (; i < vars.size(); ++i) {
      if (++idx[i] < subsets) break;
      idx[i] = 0;
    }
    if (i == vars.size()) return true;
  }
}

}  // namespace

bool oracle_valid(const Formula& f, std::size_t var_cap) {
  std::size_t v = variables(f).size();
  return valid_over(f, static_cast<int>(2 * v), var_cap);
}

bool oracle_valid_universe(const Formula& f, int universe_size,
                           std::size_t var_cap) {
  return valid_over(f, universe_size, var_cap);
}

bool oracle_equivalent(const Formula& f, const Formula& g,
                       std::size_t var_cap) {
  std::vector<NameVar> vars = variables(f);
  for (const NameVar& v : variables(g)) {
    bool seen = false;
    for (const NameVar& w : vars) seen = seen || w == v;
    if (!seen) vars.push_back(v);
  }
  if (vars.size() > var_cap)
    throw ResourceLimit("too many variables for exhaustive search");
  int universe_size = static_cast<int>(2 * vars.size());
  std::uint64_t subsets = std::uint64_t{1} << universe_size;
  std::map<NameVar, std::uint32_t> assign;
  for (const NameVar& v : vars) assign[v] = 0;
  std::vector<std::uint64_t> idx(vars.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < vars.size(); ++i)
      assign[vars[i]] = static_cast<std::uint32_t>(idx[i]);
    if (eval_mask(f, assign) != eval_mask(g, assign)) return false;
    std::size_t i = 0;
    for (; i < vars.size(); ++i) {
      if (++idx[i] < subsets) break;
      idx[i] = 0;
    }
    if (i == vars.size()) return true;
  }
}

bool atom_semantics_equivalence(const NameValue& a, const NameValue& b,
                                const std::set<int>& universe) {
  bool direct = eval_atom(a, b);
  FolStructure s;
  s.domain = universe;
  NameVar pa{"a"}, pb{"b"};
  s.preds[pa] = a;
  s.preds[pb] = b;
  FolFormula fol = t_transform(Formula::eps(pa, pb));
  return direct == eval_fol(s, fol);
}

}  // namespace l1
