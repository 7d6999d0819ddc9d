#include <doctest.h>

#include <set>

#include "contralg/contract.hpp"
#include "support/oracles.hpp"

using namespace contralg;

TEST_SUITE_BEGIN("contract");

TEST_CASE("contract algebra over the two-element base is the three-chain") {
  auto B = powerset_algebra(1);
  auto C = contract_algebra(B);
  CHECK_EQ(C->size(), 3);

  // lexicographic (a, g) enumeration is frozen
  CHECK_EQ(C->pair_of(0), ContractPair{0, 1});
  CHECK_EQ(C->pair_of(1), ContractPair{1, 0});
  CHECK_EQ(C->pair_of(2), ContractPair{1, 1});

  CHECK_EQ(C->top_index(), C->index_of({0, 1}));
  CHECK_EQ(C->bot_index(), C->index_of({1, 0}));
  CHECK_EQ(C->e_index(), C->index_of({1, 1}));

  const auto& L = *C->aug_stone()->lattice();
  CHECK(L.leq(C->bot_index(), C->e_index()));
  CHECK(L.leq(C->e_index(), C->top_index()));
  CHECK_FALSE(L.leq(C->e_index(), C->bot_index()));
}

TEST_CASE("carrier sizes are powers of three") {
  for (int k = 0; k <= 3; ++k) {
    long long expect = 1;
    for (int i = 0; i < k; ++i) expect *= 3;
    CHECK_EQ(contract_algebra(powerset_algebra(k))->size(), expect);
  }
  CHECK_THROWS_AS(contract_algebra(powerset_algebra(8)), Error);  // 6561 over the cap
}

TEST_CASE("index_of rejects non-contracts") {
  auto C = contract_algebra(powerset_algebra(1));
  CHECK_FALSE(C->contains({0, 0}));
  try {
    C->index_of({0, 0});
    FAIL("expected NotAContract");
  } catch (const Error& e) {
    CHECK_EQ(e.kind(), ErrorKind::NotAContract);
  }
}

TEST_CASE("negation and closure closed forms") {
  auto B = powerset_algebra(1);
  CHECK_EQ(contract_not(*B, {1, 1}), ContractPair{1, 0});
  CHECK_EQ(contract_cl(*B, {1, 1}), ContractPair{0, 1});

  for (int k = 0; k <= 3; ++k) {
    auto Bk = powerset_algebra(k);
    for (Mask a = 0; a < static_cast<Mask>(Bk->size()); ++a)
      for (Mask g = 0; g < static_cast<Mask>(Bk->size()); ++g) {
        if (!is_contract(*Bk, {a, g})) continue;
        CHECK_EQ(contract_not(*Bk, {a, g}), ContractPair{g, Bk->complement(g)});
        CHECK_EQ(contract_cl(*Bk, {a, g}), ContractPair{Bk->complement(g), g});
      }
  }
}

TEST_CASE("implication formula equals the generic residual") {
  for (int k = 0; k <= 3; ++k) {
    auto C = contract_algebra(powerset_algebra(k));
    const auto& L = *C->aug_stone()->lattice();
    for (int x = 0; x < C->size(); ++x)
      for (int y = 0; y < C->size(); ++y)
        CHECK_EQ(L.implies(x, y), oracles::residual_by_scan(L, x, y).value());
  }
}

TEST_CASE("full certification of contract algebras") {
  for (int k = 0; k <= 3; ++k) {
    auto C = contract_algebra(powerset_algebra(k));
    const auto& L = *C->aug_stone()->lattice();
    CHECK(check_bounded_distributive(L).passed());
    CHECK(check_heyting(L).passed());
    CHECK(check_stone(L).passed());
    CHECK(check_aug_props(*C->aug_stone()).passed());
    // e = (1, 1)
    CHECK_EQ(C->pair_of(C->e_index()), ContractPair{powerset_algebra(k)->ones(), powerset_algebra(k)->ones()});
  }
}

TEST_CASE("meet and join operate componentwise with swapped roles") {
  auto B = free_boolean_algebra({"p"});
  const Mask p = free_variable_mask(*B, 0, 1);
  // (1, p) /\ (1, q) has assumptions joined and guarantees met
  ContractPair one_p{B->ones(), p};
  ContractPair one_np{B->ones(), B->complement(p)};
  CHECK_EQ(contract_meet(*B, one_p, one_np), ContractPair{B->ones(), 0});
  CHECK_EQ(contract_join(*B, one_p, one_np), ContractPair{B->ones(), B->ones()});
}

TEST_CASE("contract_on_hom: identity maps to identity") {
  auto B = powerset_algebra(1);
  auto C = contract_algebra(B);
  auto h = contract_on_hom(identity_bool_hom(B), C, C);
  for (int i = 0; i < C->size(); ++i) CHECK_EQ(h.map[i], i);
  CHECK(check_stone_hom(h).passed());
}

TEST_CASE("contract_on_hom of an atom collapse passes all preservation checks") {
  auto B4 = powerset_algebra(2);
  auto B2 = powerset_algebra(1);
  auto C4 = contract_algebra(B4);
  auto C2 = contract_algebra(B2);
  auto homs = enumerate_bool_homs(B4, B2);
  REQUIRE_EQ(homs.size(), 2);
  for (const auto& f : homs) {
    auto Cf = contract_on_hom(f, C4, C2);
    CHECK_EQ(Cf.map.size(), 9);
    CHECK(check_stone_hom(Cf).passed());
    // e is preserved
    CHECK_EQ(Cf.map[C4->e_index()], C2->e_index());
  }
}

TEST_CASE("contract_on_hom is functorial") {
  auto B1 = powerset_algebra(1);
  auto B2 = powerset_algebra(2);
  auto C1 = contract_algebra(B1);
  auto C2 = contract_algebra(B2);
  for (const auto& f : enumerate_bool_homs(B1, B2))
    for (const auto& g : enumerate_bool_homs(B2, B1)) {
      auto lhs = contract_on_hom(compose(g, f), C1, C1);
      auto rhs = compose(contract_on_hom(g, C2, C1), contract_on_hom(f, C1, C2));
      CHECK(same_map(lhs, rhs));
    }
}

TEST_CASE("projections and delta") {
  auto B = powerset_algebra(2);
  auto C = contract_algebra(B);
  CHECK_EQ(C->delta(0), C->bot_index());
  CHECK_EQ(C->delta(B->ones()), C->top_index());
  for (Mask x = 0; x < static_cast<Mask>(B->size()); ++x) {
    CHECK_EQ(C->pi2(C->delta(x)), x);
    CHECK_EQ(C->pi1(C->delta(x)), B->complement(x));
  }
}

TEST_CASE("delta is a Boolean isomorphism onto the skeleton") {
  for (int k = 0; k <= 3; ++k) {
    auto B = powerset_algebra(k);
    auto C = contract_algebra(B);
    const auto& sk = C->aug_stone()->skeleton();
    CHECK_EQ(sk.alg->size(), B->size());

    // closed contracts are exactly the delta image {(!g, g)}
    std::set<int> delta_image, closed;
    for (Mask x = 0; x < static_cast<Mask>(B->size()); ++x) delta_image.insert(C->delta(x));
    for (int m = 0; m < sk.alg->size(); ++m) closed.insert(sk.to_ambient[m]);
    CHECK(delta_image == closed);

    for (int i = 0; i < C->size(); ++i) {
      const auto c = C->pair_of(i);
      const bool is_closed = C->aug_stone()->lattice()->is_closed(i);
      CHECK_EQ(is_closed, c.a == B->complement(c.g));
    }

    // pi2 inverts delta on the skeleton, and both preserve the operations
    for (int m = 0; m < sk.alg->size(); ++m) {
      const int amb = sk.to_ambient[m];
      CHECK_EQ(C->delta(C->pi2(amb)), amb);
    }
    for (Mask x = 0; x < static_cast<Mask>(B->size()); ++x)
      for (Mask y = 0; y < static_cast<Mask>(B->size()); ++y) {
        const auto& L = *C->aug_stone()->lattice();
        CHECK_EQ(C->delta(B->meet(x, y)), L.meet(C->delta(x), C->delta(y)));
        CHECK_EQ(C->delta(B->join(x, y)), L.join(C->delta(x), C->delta(y)));
      }
  }
}

TEST_CASE("the morphism-proof implication spelling differs only in its second leg") {
  // The first component (g' -> g) -> (a /\ !a') equals (a /\ !a') \/ (g' /\ !g)
  // as a Boolean identity; the second component there reads g -> g' while the
  // defining formula uses !g' \/ g = g' -> g. These are different functions.
  auto B = powerset_algebra(2);
  bool second_leg_differs_somewhere = false;
  for (Mask a = 0; a < static_cast<Mask>(B->size()); ++a)
    for (Mask g = 0; g < static_cast<Mask>(B->size()); ++g) {
      if (!is_contract(*B, {a, g})) continue;
      for (Mask a2 = 0; a2 < static_cast<Mask>(B->size()); ++a2)
        for (Mask g2 = 0; g2 < static_cast<Mask>(B->size()); ++g2) {
          if (!is_contract(*B, {a2, g2})) continue;
          const Mask lhs = B->implies(B->implies(g2, g), B->meet(a, B->complement(a2)));
          const Mask rhs = B->join(B->meet(a, B->complement(a2)), B->meet(g2, B->complement(g)));
          CHECK_EQ(lhs, rhs);
          if (B->implies(g2, g) != B->implies(g, g2)) second_leg_differs_somewhere = true;
        }
    }
  CHECK(second_leg_differs_somewhere);
}

TEST_SUITE_END();
