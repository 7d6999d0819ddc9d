#pragma once

// Brute-force oracles used by the tests. Everything here recomputes results
// from first principles (order relation scans, exhaustive function filters)
// so the tables and enumerators under test are checked against an
// independent route.

#include <optional>
#include <vector>

#include "contralg/lattice.hpp"

namespace oracles {

// Greatest lower bound computed from the order relation alone.
inline std::optional<int> glb_by_scan(const contralg::FiniteLattice& L, int x, int y) {
  std::vector<int> lower;
  for (int z = 0; z < L.size(); ++z)
    if (L.leq(z, x) && L.leq(z, y)) lower.push_back(z);
  for (int m : lower) {
    bool greatest = true;
    for (int z : lower)
      if (!L.leq(z, m)) greatest = false;
    if (greatest) return m;
  }
  return std::nullopt;
}

inline std::optional<int> lub_by_scan(const contralg::FiniteLattice& L, int x, int y) {
  std::vector<int> upper;
  for (int z = 0; z < L.size(); ++z)
    if (L.leq(x, z) && L.leq(y, z)) upper.push_back(z);
  for (int m : upper) {
    bool least = true;
    for (int z : upper)
      if (!L.leq(m, z)) least = false;
    if (least) return m;
  }
  return std::nullopt;
}

// max{a : a /\ x <= y} found by scanning all candidates and comparing them
// pairwise. Uses the meet table and leq but never the implication table.
inline std::optional<int> residual_by_scan(const contralg::FiniteLattice& L, int x, int y) {
  std::vector<int> cands;
  for (int a = 0; a < L.size(); ++a)
    if (L.leq(L.meet(a, x), y)) cands.push_back(a);
  for (int m : cands) {
    bool greatest = true;
    for (int a : cands)
      if (!L.leq(a, m)) greatest = false;
    if (greatest) return m;
  }
  return std::nullopt;
}

inline std::optional<int> pseudo_complement_by_scan(const contralg::FiniteLattice& L, int x) {
  return residual_by_scan(L, x, L.bot());
}

inline std::optional<int> closure_by_scan(const contralg::FiniteLattice& L, int x) {
  auto nx = pseudo_complement_by_scan(L, x);
  if (!nx) return std::nullopt;
  return pseudo_complement_by_scan(L, *nx);
}

// All total functions src -> dst passing the given pointwise predicate.
// The predicate receives the full map; enumeration order is the mixed-radix
// odometer with map[0] changing fastest.
template <typename Pred>
std::vector<std::vector<int>> filter_all_functions(int src_size, int dst_size, Pred&& keep) {
  std::vector<std::vector<int>> out;
  std::vector<int> map(src_size, 0);
  while (true) {
    if (keep(map)) out.push_back(map);
    int i = 0;
    while (i < src_size && ++map[i] == dst_size) map[i++] = 0;
    if (i == src_size) break;
  }
  return out;
}

}  // namespace oracles
