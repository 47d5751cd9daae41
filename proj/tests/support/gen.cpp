#include "gen.hpp"

#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>

namespace gen {

using l1::Formula;
using l1::NameVar;

NameVar letter(std::size_t i) {
  assert(i < 26);
  return std::string(1, static_cast<char>('a' + i));
}

namespace {

// Shapes with exactly n connectives, c of them disjunctions, atoms left as
// eps(a,a) placeholders. Memoized; shape counts stay in the hundreds for
// the budgets used here.
using ShapeKey = std::pair<std::size_t, std::size_t>;

const std::vector<Formula>& shapes(std::size_t n, std::size_t c,
                                   std::map<ShapeKey, std::vector<Formula>>& memo) {
  auto it = memo.find({n, c});
  if (it != memo.end()) return it->second;
  std::vector<Formula> out;
  if (n == 0) {
    if (c == 0) out.push_back(Formula::eps("a", "a"));
  } else {
    if (c <= n - 1)
      for (const Formula& t : shapes(n - 1, c, memo))
        out.push_back(Formula::neg(t));
    if (c >= 1) {
      for (std::size_t i = 0; i + 1 <= n; ++i) {
        for (std::size_t ci = 0; ci + 1 <= c; ++ci) {
          std::size_t j = n - 1 - i;
          std::size_t cj = c - 1 - ci;
          if (ci > i || cj > j) continue;
          for (const Formula& lt : shapes(i, ci, memo))
            for (const Formula& rt : shapes(j, cj, memo))
              out.push_back(Formula::disj(lt, rt));
        }
      }
    }
  }
  return memo.emplace(ShapeKey{n, c}, std::move(out)).first->second;
}

Formula relabel(const Formula& shape, const std::vector<NameVar>& slots,
                std::size_t& next) {
  switch (shape.kind()) {
    case Formula::Kind::Eps: {
      const NameVar& x = slots[next++];
      const NameVar& y = slots[next++];
      return Formula::eps(x, y);
    }
    case Formula::Kind::Not:
      return Formula::neg(relabel(shape.body(), slots, next));
    case Formula::Kind::Or: {
      Formula l = relabel(shape.lhs(), slots, next);
      Formula r = relabel(shape.rhs(), slots, next);
      return Formula::disj(l, r);
    }
  }
  throw std::logic_error("unreachable shape kind");
}

void labelings(std::size_t slots, std::size_t max_vars,
               std::vector<NameVar>& current, std::size_t used,
               std::vector<std::vector<NameVar>>& out) {
  if (current.size() == slots) {
    out.push_back(current);
    return;
  }
  std::size_t width = used < max_vars ? used + 1 : max_vars;
  for (std::size_t v = 0; v < width; ++v) {
    current.push_back(letter(v));
    labelings(slots, max_vars, current, std::max(used, v + 1), out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Formula> exhaustive(std::size_t max_connectives,
                                std::size_t max_nodes, std::size_t max_vars) {
  std::map<ShapeKey, std::vector<Formula>> memo;
  std::vector<Formula> out;
  for (std::size_t n = 0; n <= max_connectives; ++n) {
    for (std::size_t c = 0; c <= n; ++c) {
      // nodes = connectives + atoms, atoms = disjunctions + 1
      if (n + c + 1 > max_nodes) continue;
      for (const Formula& shape : shapes(n, c, memo)) {
        std::size_t slots = 2 * (c + 1);
        std::vector<std::vector<NameVar>> labels;
        std::vector<NameVar> current;
        labelings(slots, max_vars, current, 0, labels);
        for (const std::vector<NameVar>& l : labels) {
          std::size_t next = 0;
          out.push_back(relabel(shape, l, next));
        }
      }
    }
  }
  return out;
}

Formula random_formula(std::mt19937_64& rng, std::size_t max_vars,
                       std::size_t max_depth) {
  auto var = [&] {
    return letter(std::uniform_int_distribution<std::size_t>(0, max_vars - 1)(rng));
  };
  if (max_depth == 0 ||
      std::uniform_int_distribution<int>(0, 9)(rng) < 3)
    return Formula::eps(var(), var());
  if (std::uniform_int_distribution<int>(0, 1)(rng))
    return Formula::neg(random_formula(rng, max_vars, max_depth - 1));
  Formula l = random_formula(rng, max_vars, max_depth - 1);
  Formula r = random_formula(rng, max_vars, max_depth - 1);
  return Formula::disj(l, r);
}

Formula random_provable(std::mt19937_64& rng, std::size_t max_vars,
                        std::size_t depth) {
  auto var = [&] {
    return letter(std::uniform_int_distribution<std::size_t>(0, max_vars - 1)(rng));
  };
  int which = std::uniform_int_distribution<int>(0, depth == 0 ? 3 : 5)(rng);
  switch (which) {
    case 0: {
      // anything or its negation
      Formula x = random_formula(rng, max_vars, 2);
      return Formula::disj(Formula::neg(x), x);
    }
    case 1: {
      NameVar a = var(), b = var();
      return Formula::disj(Formula::neg(Formula::eps(a, b)),
                           Formula::eps(a, a));
    }
    case 2: {
      NameVar a = var(), b = var(), c = var();
      Formula both = Formula::disj(Formula::neg(Formula::eps(a, b)),
                                   Formula::neg(Formula::eps(b, c)));
      return Formula::disj(Formula::neg(Formula::neg(both)),
                           Formula::eps(a, c));
    }
    case 3: {
      NameVar a = var(), b = var();
      Formula both = Formula::disj(Formula::neg(Formula::eps(a, b)),
                                   Formula::neg(Formula::eps(b, b)));
      return Formula::disj(Formula::neg(Formula::neg(both)),
                           Formula::eps(b, a));
    }
    case 4: {
      // weakening on either side
      Formula p = random_provable(rng, max_vars, depth - 1);
      Formula w = random_formula(rng, max_vars, 2);
      return std::uniform_int_distribution<int>(0, 1)(rng)
                 ? Formula::disj(p, w)
                 : Formula::disj(w, p);
    }
    default: {
      Formula p = random_provable(rng, max_vars, depth - 1);
      Formula q = random_provable(rng, max_vars, depth - 1);
      return Formula::disj(p, q);
    }
  }
}

l1::L1Model random_model(std::mt19937_64& rng, int universe_size,
                         std::size_t n_vars) {
  l1::L1Model m;
  m.universe.clear();
  for (int n = 1; n <= universe_size; ++n) m.universe.insert(n);
  auto subset = [&] {
    l1::NameValue v;
    for (int n = 1; n <= universe_size; ++n)
      if (std::uniform_int_distribution<int>(0, 1)(rng)) v.insert(n);
    return v;
  };
  for (std::size_t i = 0; i < n_vars; ++i) m.assignment[letter(i)] = subset();
  if (std::uniform_int_distribution<int>(0, 3)(rng) == 0)
    m.anonymous.push_back(subset());
  return m;
}

}  // namespace gen
