#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "contralg/stone.hpp"

namespace contralg {

// An assume/guarantee pair over a Boolean algebra. Valid as a contract when
// a \/ g = 1.
struct ContractPair {
  Mask a = 0;
  Mask g = 0;

  bool operator==(const ContractPair&) const = default;
};

// Closed-form operations on pairs. The implication takes the antecedent
// first; its residuation property is certified against the generic residual
// when the full algebra is built.
inline bool is_contract(const BoolAlg& B, ContractPair c) { return B.join(c.a, c.g) == B.ones(); }
ContractPair contract_meet(const BoolAlg& B, ContractPair x, ContractPair y);
ContractPair contract_join(const BoolAlg& B, ContractPair x, ContractPair y);
ContractPair contract_impl(const BoolAlg& B, ContractPair x, ContractPair y);
ContractPair contract_not(const BoolAlg& B, ContractPair x);
ContractPair contract_cl(const BoolAlg& B, ContractPair x);

class ContractAlgebra;
using ContractAlgebraPtr = std::shared_ptr<const ContractAlgebra>;

// The contract algebra over a finite Boolean algebra: carrier
// {(a, g) : a \/ g = 1} of size 3^k, with pairs indexed in lexicographic
// (a, g) order and the operation tables built from the closed forms. The
// augmented Stone view is fully certified at construction, which also proves
// the implication table is the Heyting residual.
class ContractAlgebra {
 public:
  const BoolAlgPtr& base() const { return base_; }
  const AugStonePtr& aug_stone() const { return view_; }
  int size() const { return static_cast<int>(pairs_.size()); }

  ContractPair pair_of(int idx) const;
  int index_of(ContractPair c) const;
  bool contains(ContractPair c) const;

  Mask pi1(int idx) const { return pair_of(idx).a; }
  Mask pi2(int idx) const { return pair_of(idx).g; }
  // Index of (!x, x); always a valid and closed contract.
  int delta(Mask x) const;

  int bot_index() const { return view_->bot(); }
  int top_index() const { return view_->top(); }
  int e_index() const { return view_->e(); }

  ContractAlgebra(BoolAlgPtr base, std::vector<ContractPair> pairs, AugStonePtr view);

 private:
  BoolAlgPtr base_;
  std::vector<ContractPair> pairs_;
  std::unordered_map<std::uint64_t, int> index_;
  AugStonePtr view_;
};

ContractAlgebraPtr contract_algebra(const BoolAlgPtr& B,
                                    int carrier_cap = FiniteLattice::kDefaultCarrierCap);

// The functor on morphisms: (a, g) -> (f a, f g). Requires the two contract
// algebras to be built over f's source and target.
StoneHom contract_on_hom(const BoolHom& f, const ContractAlgebraPtr& CB,
                         const ContractAlgebraPtr& CB2);

}  // namespace contralg
