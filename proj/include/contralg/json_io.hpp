#pragma once

#include <optional>
#include <string>

#include "contralg/boolalg.hpp"
#include "contralg/stone.hpp"

namespace contralg {

// File schemas:
//   lattice:  {"name": str, "elements": [str], "leq": [[i, j], ...]}
//             plus optional "e": int for augmented Stone algebras
//   boolalg:  {"atoms": [str]} with optional "name"
//   hom:      {"source": str, "target": str, "map": [int]}

nlohmann::ordered_json lattice_to_json(const FiniteLattice& L, std::optional<int> e = {});
LatticePtr lattice_from_json(const nlohmann::json& j);
std::optional<int> json_declared_e(const nlohmann::json& j);

nlohmann::ordered_json boolalg_to_json(const BoolAlg& B);
BoolAlgPtr boolalg_from_json(const nlohmann::json& j);

inline bool json_is_boolalg(const nlohmann::json& j) { return j.is_object() && j.contains("atoms"); }
inline bool json_is_lattice(const nlohmann::json& j) { return j.is_object() && j.contains("elements"); }

nlohmann::ordered_json hom_to_json(const BoolHom& h);
nlohmann::ordered_json hom_to_json(const StoneHom& h);

// Hasse diagram (cover edges only), bottom-up rank direction.
std::string to_dot(const FiniteLattice& L);

// Aligned text operation tables (meet, join and, when Heyting, implication).
std::string to_table(const FiniteLattice& L);

}  // namespace contralg
