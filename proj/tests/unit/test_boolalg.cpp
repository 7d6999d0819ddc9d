#include <doctest.h>

#include <set>

#include "contralg/boolalg.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace contralg;

namespace {

// Definitional homomorphism filter, independent of enumerate_bool_homs.
bool is_bool_hom_map(const BoolAlg& B, const BoolAlg& B2, const std::vector<int>& map) {
  if (map[0] != 0) return false;
  if (map[B.ones()] != static_cast<int>(B2.ones())) return false;
  for (int x = 0; x < B.size(); ++x) {
    if (map[B.complement(x)] != static_cast<int>(B2.complement(map[x]))) return false;
    for (int y = 0; y < B.size(); ++y) {
      if (map[x & y] != (map[x] & map[y])) return false;
      if (map[x | y] != (map[x] | map[y])) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("boolalg");

TEST_CASE("powerset carriers and bitwise operations") {
  auto B0 = powerset_algebra(0);
  CHECK_EQ(B0->size(), 1);
  CHECK_EQ(B0->ones(), 0);

  auto B1 = powerset_algebra(1);
  CHECK_EQ(B1->size(), 2);
  CHECK_EQ(B1->complement(0), 1);

  auto B2 = powerset_algebra(2);
  CHECK_EQ(B2->size(), 4);
  CHECK_EQ(B2->complement(0b01), 0b10);
  CHECK_EQ(B2->implies(0b01, 0b10), 0b10);
  CHECK_EQ(B2->meet(0b01, 0b11), 0b01);
  CHECK_EQ(B2->join(0b01, 0b10), 0b11);
  CHECK(B2->leq(0b01, 0b11));
  CHECK_FALSE(B2->leq(0b11, 0b01));

  CHECK_THROWS_AS(powerset_algebra(21), Error);
}

TEST_CASE("bitwise implication agrees with the lattice residual") {
  auto B = powerset_algebra(2);
  auto L = B->lattice();
  for (int x = 0; x < B->size(); ++x)
    for (int y = 0; y < B->size(); ++y) {
      CHECK_EQ(static_cast<int>(B->implies(x, y)), oracles::residual_by_scan(*L, x, y).value());
      CHECK_EQ(static_cast<int>(B->complement(x)),
               oracles::pseudo_complement_by_scan(*L, x).value());
    }
}

TEST_CASE("powerset lattice view passes all law suites") {
  for (int k = 0; k <= 3; ++k) {
    auto L = powerset_algebra(k)->lattice();
    CHECK(check_bounded_distributive(*L).passed());
    CHECK(check_heyting(*L).passed());
    CHECK(check_stone(*L).passed());
  }
}

TEST_CASE("lattice view respects the carrier cap") {
  auto B = powerset_algebra(12);
  CHECK_THROWS_AS(B->lattice(16), Error);
  CHECK_EQ(B->lattice(4096)->size(), 4096);
}

TEST_CASE("free boolean algebra sizes and variable masks") {
  CHECK_EQ(free_boolean_algebra({})->size(), 2);

  auto Fp = free_boolean_algebra({"p"});
  CHECK_EQ(Fp->size(), 4);
  CHECK_EQ(free_variable_mask(*Fp, 0, 1), 0b10);

  auto Fpq = free_boolean_algebra({"p", "q"});
  CHECK_EQ(Fpq->size(), 16);
  const Mask p = free_variable_mask(*Fpq, 0, 2);
  const Mask q = free_variable_mask(*Fpq, 1, 2);
  CHECK_EQ(__builtin_popcount(Fpq->meet(p, q)), 1);  // p & q is a minterm
  CHECK_EQ(Fpq->join(p, Fpq->complement(p)), Fpq->ones());

  CHECK_THROWS_AS(free_boolean_algebra({"a", "b", "c", "d", "e"}), Error);
  CHECK_THROWS_AS(free_boolean_algebra({"p", "p"}), Error);
}

TEST_CASE("as_boolean recognizes Boolean lattices") {
  auto two = as_boolean(make_chain(2));
  CHECK_EQ(two.alg->atom_count(), 1);

  auto one = as_boolean(fixtures::trivial());
  CHECK_EQ(one.alg->atom_count(), 0);

  auto dia = as_boolean(fixtures::diamond());
  CHECK_EQ(dia.alg->atom_count(), 2);
  // the isomorphism transports meet/join to AND/OR
  auto L = fixtures::diamond();
  for (int x = 0; x < L->size(); ++x)
    for (int y = 0; y < L->size(); ++y) {
      CHECK_EQ(dia.mask_of[L->meet(x, y)], dia.alg->meet(dia.mask_of[x], dia.mask_of[y]));
      CHECK_EQ(dia.mask_of[L->join(x, y)], dia.alg->join(dia.mask_of[x], dia.mask_of[y]));
      CHECK_EQ(dia.elem_of[dia.mask_of[x]], x);
    }
}

TEST_CASE("as_boolean rejects the three-chain with witness") {
  try {
    as_boolean(make_chain(3));
    FAIL("expected NotComplemented");
  } catch (const Error& e) {
    CHECK_EQ(e.kind(), ErrorKind::NotComplemented);
    CHECK(std::string(e.what()).find("a") != std::string::npos);
  }
}

TEST_CASE("as_boolean of a powerset lattice view is the identity") {
  for (int k = 0; k <= 3; ++k) {
    auto B = powerset_algebra(k);
    auto view = as_boolean(B->lattice());
    CHECK_EQ(view.alg->atom_count(), k);
    for (int x = 0; x < B->size(); ++x) CHECK_EQ(view.mask_of[x], static_cast<Mask>(x));
  }
}

TEST_CASE("hom enumeration counts") {
  auto B1 = powerset_algebra(1);
  auto B2 = powerset_algebra(2);
  CHECK_EQ(enumerate_bool_homs(B1, B1).size(), 1);
  CHECK_EQ(enumerate_bool_homs(B2, B1).size(), 2);
  CHECK_EQ(enumerate_bool_homs(B2, B2).size(), 4);

  // |hom(2^X, 2^Y)| = |X|^|Y|
  for (int k1 = 1; k1 <= 3; ++k1)
    for (int k2 = 0; k2 <= 3; ++k2) {
      auto A = powerset_algebra(k1);
      auto B = powerset_algebra(k2);
      long long expect = 1;
      for (int i = 0; i < k2; ++i) expect *= k1;
      CHECK_EQ(static_cast<long long>(enumerate_bool_homs(A, B).size()), expect);
    }

  // degenerate source: no hom into a nontrivial algebra, one into itself
  auto B0 = powerset_algebra(0);
  CHECK_EQ(enumerate_bool_homs(B0, B2).size(), 0);
  CHECK_EQ(enumerate_bool_homs(B0, B0).size(), 1);
  CHECK_EQ(enumerate_bool_homs(B2, B0).size(), 1);
}

TEST_CASE("enumerated homs are exactly the brute-force homomorphisms") {
  for (auto [k1, k2] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {2, 3}}) {
    auto B = powerset_algebra(k1);
    auto B2 = powerset_algebra(k2);
    auto enumerated = enumerate_bool_homs(B, B2);

    std::set<std::vector<int>> expect;
    for (const auto& f :
         oracles::filter_all_functions(B->size(), B2->size(),
                                       [&](const std::vector<int>& m) { return is_bool_hom_map(*B, *B2, m); }))
      expect.insert(f);

    std::set<std::vector<int>> got;
    for (const auto& h : enumerated) {
      CHECK(check_bool_hom(h).passed());
      got.insert(std::vector<int>(h.map.begin(), h.map.end()));
    }
    CHECK_EQ(got.size(), enumerated.size());  // no duplicates
    CHECK(got == expect);
  }
}

TEST_CASE("check_bool_hom verdicts") {
  auto B2 = powerset_algebra(2);
  CHECK(check_bool_hom(identity_bool_hom(B2)).passed());

  BoolHom to_one{B2, B2, {3, 3, 3, 3}};
  auto rep = check_bool_hom(to_one);
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(rep.law_passed("preserves-0"));

  BoolHom swap{B2, B2, {0b00, 0b10, 0b01, 0b11}};
  CHECK(check_bool_hom(swap).passed());
}

TEST_CASE("hom composition") {
  auto B2 = powerset_algebra(2);
  auto B1 = powerset_algebra(1);
  auto homs = enumerate_bool_homs(B2, B1);
  REQUIRE_EQ(homs.size(), 2);
  auto up = enumerate_bool_homs(B1, B2);
  REQUIRE_EQ(up.size(), 1);
  auto c = compose(homs[0], up[0]);
  CHECK(check_bool_hom(c).passed());
  CHECK_EQ(c.src, B1);
  CHECK_EQ(c.dst, B1);
  CHECK_THROWS_AS(compose(up[0], up[0]), Error);
}

TEST_SUITE_END();
