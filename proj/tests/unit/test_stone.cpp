#include <doctest.h>

#include "contralg/stone.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace contralg;

TEST_SUITE_BEGIN("stone");

TEST_CASE("closure element of Boolean algebras is the top") {
  for (int k = 0; k <= 3; ++k) {
    auto L = powerset_algebra(k)->lattice();
    CHECK_EQ(find_closure_element(*L), L->top());
  }
}

TEST_CASE("closure element of chains is the atom") {
  auto c3 = make_chain(3);
  CHECK_EQ(find_closure_element(*c3), 1);
  auto c4 = make_chain(4);
  CHECK_EQ(find_closure_element(*c4), 1);
  for (int n = 2; n <= 6; ++n) CHECK_EQ(find_closure_element(*make_chain(n)), n == 1 ? 0 : 1);
}

TEST_CASE("closure element equals the meet of all dense elements") {
  std::vector<LatticePtr> algebras;
  for (int k = 0; k <= 3; ++k) algebras.push_back(powerset_algebra(k)->lattice());
  for (int n = 2; n <= 6; ++n) algebras.push_back(make_chain(n));
  algebras.push_back(product_lattice(make_chain(2), make_chain(3)));
  algebras.push_back(product_lattice(make_chain(3), make_chain(3)));

  for (const auto& L : algebras) {
    const int e = find_closure_element(*L);
    int dense_meet = L->top();
    for (int x = 0; x < L->size(); ++x)
      if (L->is_dense(x)) dense_meet = L->meet(dense_meet, x);
    CHECK_EQ(e, dense_meet);

    // uniqueness: exactly one candidate passes the full sweep
    int passing = 0;
    for (int c = 0; c < L->size(); ++c) {
      bool ok = true;
      for (int x = 0; x < L->size(); ++x)
        if (L->implies(c, x) != L->closure(x)) ok = false;
      if (ok) ++passing;
    }
    CHECK_EQ(passing, 1);
  }
}

TEST_CASE("check_augmented verdicts") {
  auto [rep, e] = check_augmented(*make_chain(4));
  CHECK(rep.passed());
  CHECK_EQ(e.value(), 1);

  auto [rep5, e5] = check_augmented(*fixtures::pentagon());
  CHECK_FALSE(rep5.passed());
  CHECK_FALSE(e5.has_value());

  // The dense-top diamond satisfies the augmentation identity (with e = d)
  // even though it is not Stone.
  auto [repd, ed] = check_augmented(*fixtures::dense_top_diamond());
  CHECK(repd.passed());
  CHECK_EQ(ed.value(), 3);
}

TEST_CASE("make_aug_stone certifies and rejects") {
  auto S = make_aug_stone(make_chain(4));
  CHECK_EQ(S->e(), 1);
  CHECK_EQ(S->size(), 4);

  try {
    make_aug_stone(fixtures::dense_top_diamond());
    FAIL("expected CertificationError");
  } catch (const CertificationError& e) {
    CHECK(e.certification().distributive.passed());
    CHECK(e.certification().heyting.passed());
    CHECK_FALSE(e.certification().stone.passed());
  }

  CHECK_THROWS_AS(make_aug_stone(fixtures::pentagon()), CertificationError);
  CHECK_THROWS_AS(make_aug_stone(make_chain(4), 2), Error);  // wrong declared e
  CHECK_EQ(make_aug_stone(make_chain(4), 1)->e(), 1);
}

TEST_CASE("skeleton of a Boolean algebra is the algebra itself") {
  auto L = powerset_algebra(2)->lattice();
  auto sk = compute_skeleton(*L);
  CHECK_EQ(sk.alg->atom_count(), 2);
  for (int m = 0; m < 4; ++m) CHECK_EQ(sk.to_ambient[m], m);
}

TEST_CASE("skeleton of the three-chain is the two-element algebra") {
  auto sk = compute_skeleton(*make_chain(3));
  CHECK_EQ(sk.alg->atom_count(), 1);
  CHECK_EQ(sk.to_ambient[0], 0);
  CHECK_EQ(sk.to_ambient[1], 2);
  CHECK_EQ(sk.from_ambient[1], -1);  // the dense middle is not closed
}

TEST_CASE("skeleton embedding preserves operations") {
  for (auto L : {make_chain(4), make_chain(6), product_lattice(make_chain(2), make_chain(3))}) {
    auto sk = compute_skeleton(*L);
    const auto& alg = *sk.alg;
    for (int x = 0; x < alg.size(); ++x)
      for (int y = 0; y < alg.size(); ++y) {
        CHECK_EQ(sk.to_ambient[alg.meet(x, y)], L->meet(sk.to_ambient[x], sk.to_ambient[y]));
        CHECK_EQ(sk.to_ambient[alg.join(x, y)], L->join(sk.to_ambient[x], sk.to_ambient[y]));
      }
    // complement in the skeleton is the ambient pseudo-complement
    for (int x = 0; x < alg.size(); ++x)
      CHECK_EQ(sk.to_ambient[alg.complement(x)], L->pseudo_complement(sk.to_ambient[x]));
  }
}

TEST_CASE("aug props pass on the catalog") {
  std::vector<AugStonePtr> algebras;
  for (int k = 0; k <= 3; ++k) algebras.push_back(make_aug_stone(powerset_algebra(k)->lattice()));
  for (int n = 2; n <= 6; ++n) algebras.push_back(make_aug_stone(make_chain(n)));
  algebras.push_back(make_aug_stone(product_lattice(make_chain(2), make_chain(3))));
  for (const auto& S : algebras) {
    auto rep = check_aug_props(*S);
    CHECK(rep.passed());
  }
}

TEST_CASE("aug props on the four-chain, piece by piece") {
  auto S = make_aug_stone(make_chain(4));
  auto rep = check_aug_props(*S);
  CHECK(rep.passed());
  CHECK(rep.law_passed("iii-impl-into-e-dense"));
  // y -> e lands in {e, 1}, both dense
  const auto& L = *S->lattice();
  for (int y = 0; y < L.size(); ++y) {
    const int r = L.implies(y, S->e());
    CHECK((r == S->e() || r == L.top()));
    CHECK(L.is_dense(r));
  }
}

TEST_CASE("aug props flag a wrong closure element") {
  auto L = make_chain(4);
  AugStone bad(L, 2, compute_skeleton(*L), "bad-e");
  auto rep = check_aug_props(bad);
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(rep.law_passed("ii-closure-element-unique"));
}

TEST_CASE("check_stone_hom verdicts") {
  auto S = make_aug_stone(make_chain(3));
  CHECK(check_stone_hom(identity_stone_hom(S)).passed());

  // swapping e and top on the three-chain breaks e-preservation
  StoneHom swap{S, S, {0, 2, 1}};
  auto rep = check_stone_hom(swap);
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(rep.law_passed("preserves-e"));

  // embedding of the three-chain into the four-chain: 0 -> 0, e -> a, 1 -> 1
  auto C4 = make_aug_stone(make_chain(4));
  StoneHom emb{S, C4, {0, 1, 3}};
  CHECK(check_stone_hom(emb).passed());

  // collapsing e into top also breaks e-preservation
  StoneHom collapse{S, S, {0, 2, 2}};
  CHECK_FALSE(check_stone_hom(collapse).passed());
}

TEST_CASE("cl_on_hom restricts to skeletons") {
  auto S3 = make_aug_stone(make_chain(3));
  auto id3 = cl_on_hom(identity_stone_hom(S3));
  CHECK_EQ(id3.map, std::vector<Mask>{0, 1});
  CHECK(check_bool_hom(id3).passed());

  auto C4 = make_aug_stone(make_chain(4));
  StoneHom emb{S3, C4, {0, 1, 3}};
  auto restricted = cl_on_hom(emb);
  CHECK(check_bool_hom(restricted).passed());
  CHECK_EQ(restricted.map, std::vector<Mask>{0, 1});  // identity on two elements
}

TEST_CASE("cl_on_hom respects composition") {
  auto S3 = make_aug_stone(make_chain(3));
  auto S4 = make_aug_stone(make_chain(4));
  StoneHom f{S3, S4, {0, 1, 3}};
  StoneHom g{S4, S4, {0, 1, 3, 3}};  // lift b to top; the only non-identity endo
  REQUIRE(check_stone_hom(f).passed());
  REQUIRE(check_stone_hom(g).passed());
  auto gf = compose(g, f);
  CHECK(check_stone_hom(gf).passed());
  CHECK(same_map(cl_on_hom(gf), compose(cl_on_hom(g), cl_on_hom(f))));
}

TEST_SUITE_END();
