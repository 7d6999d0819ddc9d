#pragma once

#include <random>
#include <string>
#include <vector>

#include "contralg/formula.hpp"

namespace formula_gen {

inline contralg::FormulaPtr random_formula(std::mt19937& rng,
                                           const std::vector<std::string>& vars, int depth) {
  using namespace contralg;
  std::uniform_int_distribution<int> leaf(0, 2 + static_cast<int>(vars.size()) - 1);
  std::uniform_int_distribution<int> node(0, 5);
  if (depth == 0 || vars.empty()) {
    if (vars.empty()) return rng() % 2 ? f_true() : f_false();
    const int pick = leaf(rng);
    if (pick == 0) return f_false();
    if (pick == 1) return f_true();
    return f_var(vars[pick - 2]);
  }
  switch (node(rng)) {
    case 0: return f_not(random_formula(rng, vars, depth - 1));
    case 1: return f_and(random_formula(rng, vars, depth - 1), random_formula(rng, vars, depth - 1));
    case 2: return f_or(random_formula(rng, vars, depth - 1), random_formula(rng, vars, depth - 1));
    case 3: return f_imp(random_formula(rng, vars, depth - 1), random_formula(rng, vars, depth - 1));
    default: return random_formula(rng, vars, 0);
  }
}

}  // namespace formula_gen
