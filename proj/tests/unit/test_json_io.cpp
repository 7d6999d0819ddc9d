#include <doctest.h>

#include "contralg/json_io.hpp"
#include "support/fixtures.hpp"

using namespace contralg;

TEST_SUITE_BEGIN("json_io");

TEST_CASE("lattice schema fields and order") {
  auto j = lattice_to_json(*make_chain(3));
  auto it = j.begin();
  CHECK_EQ(it.key(), "name");
  ++it;
  CHECK_EQ(it.key(), "elements");
  ++it;
  CHECK_EQ(it.key(), "leq");
  CHECK_EQ(j["name"], "chain3");
  CHECK_EQ(j["elements"].size(), 3);
  // all strict order pairs, ascending
  CHECK_EQ(j["leq"].dump(), "[[0,1],[0,2],[1,2]]");
}

TEST_CASE("lattice json round trip is byte-identical") {
  for (auto L : {make_chain(4), fixtures::diamond(),
                 product_lattice(make_chain(2), make_chain(3))}) {
    auto j = lattice_to_json(*L);
    auto L2 = lattice_from_json(nlohmann::json::parse(j.dump()));
    CHECK_EQ(lattice_to_json(*L2).dump(), j.dump());
    CHECK_EQ(L2->size(), L->size());
    for (int x = 0; x < L->size(); ++x)
      for (int y = 0; y < L->size(); ++y) {
        CHECK_EQ(L2->leq(x, y), L->leq(x, y));
        CHECK_EQ(L2->meet(x, y), L->meet(x, y));
      }
  }
}

TEST_CASE("augmented lattices carry their closure element") {
  auto S = make_aug_stone(make_chain(4));
  auto j = lattice_to_json(*S->lattice(), S->e());
  CHECK_EQ(j["e"], 1);
  auto back = lattice_from_json(nlohmann::json::parse(j.dump()));
  CHECK_EQ(json_declared_e(nlohmann::json::parse(j.dump())).value(), 1);
  auto S2 = make_aug_stone(back, 1);
  CHECK_EQ(S2->e(), S->e());
}

TEST_CASE("boolalg schema") {
  auto B = powerset_algebra(2);
  auto j = boolalg_to_json(*B);
  CHECK_EQ(j.dump(), R"({"atoms":["a","b"]})");
  auto B2 = boolalg_from_json(nlohmann::json::parse(j.dump()));
  CHECK_EQ(B2->atom_count(), 2);
  CHECK_EQ(B2->atom_names(), B->atom_names());
  CHECK(json_is_boolalg(nlohmann::json::parse(j.dump())));
  CHECK_FALSE(json_is_lattice(nlohmann::json::parse(j.dump())));
}

TEST_CASE("malformed json raises IoError") {
  CHECK_THROWS_AS(lattice_from_json(nlohmann::json::parse("{}")), Error);
  CHECK_THROWS_AS(lattice_from_json(nlohmann::json::parse(R"({"elements":[1]})")), Error);
  CHECK_THROWS_AS(lattice_from_json(nlohmann::json::parse(R"({"elements":["a"],"leq":[[0]]})")),
                  Error);
  CHECK_THROWS_AS(boolalg_from_json(nlohmann::json::parse("[]")), Error);
}

TEST_CASE("loading a non-lattice relation fails loudly") {
  nlohmann::json j;
  j["name"] = "bowtie";
  j["elements"] = {"p", "q", "r", "s"};
  j["leq"] = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  try {
    lattice_from_json(j);
    FAIL("expected NotALattice");
  } catch (const Error& e) {
    CHECK_EQ(e.kind(), ErrorKind::NotALattice);
  }
}

TEST_CASE("hom json") {
  auto B = powerset_algebra(1);
  auto j = hom_to_json(identity_bool_hom(B));
  CHECK_EQ(j["source"], B->name());
  CHECK_EQ(j["map"].dump(), "[0,1]");
}

TEST_CASE("dot export is the Hasse diagram") {
  auto dot = to_dot(*make_chain(3));
  CHECK(dot.find("digraph \"chain3\"") != std::string::npos);
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
  CHECK(dot.find("n1 -> n2;") != std::string::npos);
  CHECK(dot.find("n0 -> n2;") == std::string::npos);  // covers only
  CHECK(dot.find("label=\"a\"") != std::string::npos);
}

TEST_CASE("table export lists all three operations") {
  auto txt = to_table(*make_chain(3));
  CHECK(txt.find("meet:") != std::string::npos);
  CHECK(txt.find("join:") != std::string::npos);
  CHECK(txt.find("impl:") != std::string::npos);
  auto n5 = to_table(*fixtures::pentagon());
  CHECK(n5.find("impl: not a Heyting algebra") != std::string::npos);
}

TEST_CASE("law report json shape") {
  auto rep = check_stone(*fixtures::dense_top_diamond());
  auto j = rep.to_json();
  CHECK_EQ(j["suite"], "stone");
  CHECK_EQ(j["status"], "FAIL");
  CHECK_GE(j["violations"].size(), 1);
  CHECK_EQ(j["violations"][0]["law"], "stone-identity");
  CHECK(j["violations"][0]["where"].is_array());
  CHECK(j["violations"][0]["detail"].is_string());
}

TEST_SUITE_END();
