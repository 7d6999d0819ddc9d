#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contralg/contract.hpp"

namespace contralg {

// Function-enumeration cap for the brute-force oracle. Overridable per call
// and via the CLI (--budget / CONTRALG_BUDGET).
inline constexpr long long kDefaultBudget = 10'000'000;

// f: B -> Cl(S) induces the contract-algebra morphism
//   (a, g) |-> f(g) /\ (f(a) -> e)
// computed in S. TargetMismatch when f does not land in the skeleton of S.
StoneHom alpha(const BoolHom& f, const ContractAlgebraPtr& CB, const AugStonePtr& S);

// f*: C(B) -> S restricts along Delta: b |-> f*(!b, b). The image is closed,
// so the result lands in Cl(S).
BoolHom beta(const StoneHom& fstar, const ContractAlgebraPtr& CB);

// Unit and counit, defined through the bijection so they inherit its
// correctness: unit = beta(id), counit = alpha(id).
BoolHom unit(const ContractAlgebraPtr& CB);                         // B -> Cl(C(B))
StoneHom counit(const AugStonePtr& S, const ContractAlgebraPtr& C_skel);  // C(Cl(S)) -> S

// Independent oracle: filter all |dst|^|src| functions by exhaustive
// preservation checks. SearchTooLarge when the function count exceeds the
// budget. Workers > 1 partitions the enumeration; output order is identical.
std::vector<BoolHom> brute_force_bool_homs(const BoolAlgPtr& src, const BoolAlgPtr& dst,
                                           long long budget = kDefaultBudget, int workers = 1);
std::vector<StoneHom> brute_force_stone_homs(const AugStonePtr& src, const AugStonePtr& dst,
                                             long long budget = kDefaultBudget, int workers = 1);

// Complete enumeration by constraint backtracking. Unlike alpha-enumeration
// this works for sources that are not contract algebras, and unlike the
// plain filter it stays cheap on 9^9-size search spaces. Cross-checked
// against brute force in the tests.
std::vector<StoneHom> enumerate_stone_homs(const AugStonePtr& src, const AugStonePtr& dst);

struct HomSetWitness {
  BoolAlgPtr B;
  AugStonePtr S;
  std::vector<BoolHom> bool_homs;    // B -> Cl(S)
  std::vector<StoneHom> stone_homs;  // alpha images, aligned with bool_homs
  std::vector<int> pairing;          // pairing[i] pairs bool_homs[i] with stone_homs
  bool beta_alpha_identity = false;
  bool alpha_beta_identity = false;
  bool counts_equal = false;
  std::optional<long long> brute_forced_count;  // absent when over budget
  bool image_matches_brute = false;

  bool passed() const {
    return beta_alpha_identity && alpha_beta_identity && counts_equal &&
           (!brute_forced_count || image_matches_brute);
  }
  nlohmann::ordered_json to_json() const;
};

// Verifies that alpha and beta are mutually inverse bijections between
// hom(B, Cl(S)) and hom(C(B), S), using the brute-forced Stone hom set as
// the independent route when it fits the budget.
HomSetWitness check_bijection(const BoolAlgPtr& B, const AugStonePtr& S,
                              long long budget = kDefaultBudget, int workers = 1,
                              ContractAlgebraPtr CB = nullptr);

struct FullyFaithfulReport {
  long long bool_hom_count = 0;
  long long stone_hom_count_alpha = 0;
  std::optional<long long> stone_hom_count_brute;
  bool injective = false;
  bool surjective_alpha = false;
  bool surjective_brute = true;  // vacuously true when brute force is over budget

  bool passed() const { return injective && surjective_alpha && surjective_brute; }
  nlohmann::ordered_json to_json() const;
};

// f |-> C(f) is a bijection hom(B, B2) -> hom(C(B), C(B2)).
FullyFaithfulReport check_fully_faithful(const BoolAlgPtr& B, const BoolAlgPtr& B2,
                                         long long budget = kDefaultBudget, int workers = 1);

struct NaturalityReport {
  long long squares_checked = 0;
  long long failures = 0;
  std::vector<std::string> witnesses;  // first few failing squares

  bool passed() const { return failures == 0; }
  nlohmann::ordered_json to_json() const;
};

// For rho: B' -> B and sigma: S -> S', checks both naturality squares
// pointwise over every f in hom(B, Cl(S)) and every f* in hom(C(B), S).
// Contract algebras over rho's source and target may be passed in to avoid
// rebuilding them inside sweeps.
NaturalityReport check_naturality(const BoolHom& rho, const StoneHom& sigma,
                                  ContractAlgebraPtr CB = nullptr,
                                  ContractAlgebraPtr CBprime = nullptr);

// Triangle identities. The first composes the counit with the contract image
// of the unit; the second composes the skeleton image of the counit with the
// unit of the skeleton.
bool check_triangle_on_base(const BoolAlgPtr& B);
bool check_triangle_on_stone(const AugStonePtr& S);

}  // namespace contralg
