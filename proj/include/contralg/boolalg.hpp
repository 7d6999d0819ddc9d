#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "contralg/lattice.hpp"

namespace contralg {

using Mask = std::uint32_t;

class BoolAlg;
using BoolAlgPtr = std::shared_ptr<const BoolAlg>;

// Power-set Boolean algebra on k named atoms. Elements are k-bit masks and
// double as carrier indices, so all operations are single bitwise
// instructions. A full lattice view (order and operation tables) is
// materialized on demand for the law suites; it is capped because the tables
// are quadratic in 2^k.
class BoolAlg : public std::enable_shared_from_this<BoolAlg> {
 public:
  static constexpr int kMaxAtoms = 20;

  int atom_count() const { return k_; }
  int size() const { return 1 << k_; }
  Mask ones() const { return ones_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& atom_names() const { return atom_names_; }

  Mask meet(Mask x, Mask y) const { return check(x) & check(y); }
  Mask join(Mask x, Mask y) const { return check(x) | check(y); }
  Mask complement(Mask x) const { return check(x) ^ ones_; }
  Mask implies(Mask x, Mask y) const { return (check(x) ^ ones_) | check(y); }
  bool leq(Mask x, Mask y) const { return (check(x) & ~check(y)) == 0; }

  std::string element_name(Mask x) const;

  // Lattice view with index i <-> mask i. Built once; TooLarge above the cap.
  LatticePtr lattice(int carrier_cap = FiniteLattice::kDefaultCarrierCap) const;

  BoolAlg(int k, std::vector<std::string> atom_names, std::string name);

 private:
  Mask check(Mask x) const {
    if (x > ones_)
      throw Error(ErrorKind::BadIndex, "mask " + std::to_string(x) + " out of range for " + name_);
    return x;
  }

  int k_;
  Mask ones_;
  std::string name_;
  std::vector<std::string> atom_names_;

  mutable std::once_flag lattice_once_;
  mutable LatticePtr lattice_;
};

BoolAlgPtr powerset_algebra(int k, std::vector<std::string> atom_names = {},
                            std::string name = "");

// Free Boolean algebra on the given variables: the power-set algebra over
// 2^|vars| minterms. Variable i corresponds to the mask of minterms whose
// i-th assignment bit is set.
BoolAlgPtr free_boolean_algebra(const std::vector<std::string>& vars, std::string name = "");
Mask free_variable_mask(const BoolAlg& free_alg, int var_index, int var_count);

// A lattice recognized as Boolean: the power-set algebra over its atoms plus
// the isomorphism in both directions (lattice index <-> mask).
struct BooleanView {
  BoolAlgPtr alg;
  std::vector<Mask> mask_of;  // lattice index -> mask
  std::vector<int> elem_of;   // mask -> lattice index
};

// Requires L to pass the distributive and Heyting suites. Fails with
// NotComplemented (witness element) when some x has no true complement.
BooleanView as_boolean(const LatticePtr& L);

struct BoolHom {
  BoolAlgPtr src;
  BoolAlgPtr dst;
  std::vector<Mask> map;  // indexed by source mask

  Mask operator()(Mask x) const { return map[x]; }
};

BoolHom identity_bool_hom(const BoolAlgPtr& B);
BoolHom compose(const BoolHom& g, const BoolHom& f);  // g after f
bool same_map(const BoolHom& a, const BoolHom& b);

// The complete list of Boolean homomorphisms B -> B2, generated by assigning
// each atom of B2 to a block atom of B (equivalently: choosing pairwise
// disjoint atom images covering 1). Deterministic order.
std::vector<BoolHom> enumerate_bool_homs(const BoolAlgPtr& B, const BoolAlgPtr& B2);

// Exhaustive preservation report for meet, join, complement, 0 and 1.
LawReport check_bool_hom(const BoolHom& h);

}  // namespace contralg
