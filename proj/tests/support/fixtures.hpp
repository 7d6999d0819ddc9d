#pragma once

#include <utility>
#include <vector>

#include "contralg/lattice.hpp"

namespace fixtures {

using contralg::LatticePtr;

inline LatticePtr trivial() { return contralg::build_lattice(1, {}, {"0"}, "trivial"); }

// {0 < a,b < 1}, the four-element Boolean lattice.
inline LatticePtr diamond() {
  return contralg::build_lattice(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {"0", "a", "b", "1"},
                                 "diamond");
}

// 0 < a < c < 1 and 0 < b < 1 with b incomparable to a and c. The standard
// non-distributive witness.
inline LatticePtr pentagon() {
  return contralg::build_lattice(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}},
                                 {"0", "a", "c", "b", "1"}, "N5");
}

// {0 < a,b < d < 1}: distributive and Heyting but the Stone identity fails
// at a (and at b).
inline LatticePtr dense_top_diamond() {
  return contralg::build_lattice(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}},
                                 {"0", "a", "b", "d", "1"}, "dense-diamond");
}

// Two incomparable lower elements under two incomparable upper elements;
// joins do not exist.
inline std::pair<int, std::vector<std::pair<int, int>>> bowtie_relation() {
  return {4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}};
}

}  // namespace fixtures
