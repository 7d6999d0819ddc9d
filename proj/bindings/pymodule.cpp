#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "contralg/adjunction.hpp"
#include "contralg/formula.hpp"
#include "contralg/json_io.hpp"

namespace py = pybind11;
using namespace contralg;

namespace {

// The C++ API hands out shared_ptr-to-const; the objects are immutable, so
// shedding the const qualifier for the Python holder is safe.
template <typename T>
std::shared_ptr<T> unconst(std::shared_ptr<const T> p) {
  return std::const_pointer_cast<T>(std::move(p));
}

std::string report_json(const LawReport& r) { return r.to_json().dump(2); }

}  // namespace

PYBIND11_MODULE(_contralg, m) {
  m.doc() = "Finite contract algebras, augmented Stone algebras and the adjunction between them";

  py::register_exception<Error>(m, "ContralgError");

  py::class_<LawReport>(m, "LawReport")
      .def_property_readonly("suite", &LawReport::suite)
      .def_property_readonly("passed", &LawReport::passed)
      .def_property_readonly("checks", &LawReport::checks)
      .def_property_readonly("violations_total", &LawReport::violations_total)
      .def("law_passed", &LawReport::law_passed)
      .def("summary", &LawReport::summary)
      .def("json", &report_json)
      .def("__repr__", [](const LawReport& r) {
        return "<LawReport " + r.suite() + (r.passed() ? " PASS>" : " FAIL>");
      });

  py::class_<FiniteLattice, std::shared_ptr<FiniteLattice>>(m, "Lattice")
      .def_property_readonly("size", &FiniteLattice::size)
      .def_property_readonly("name", &FiniteLattice::name)
      .def_property_readonly("bot", &FiniteLattice::bot)
      .def_property_readonly("top", &FiniteLattice::top)
      .def("element_name", &FiniteLattice::element_name)
      .def("leq", py::overload_cast<int, int>(&FiniteLattice::leq, py::const_))
      .def("meet", py::overload_cast<int, int>(&FiniteLattice::meet, py::const_))
      .def("join", py::overload_cast<int, int>(&FiniteLattice::join, py::const_))
      .def("implies", py::overload_cast<int, int>(&FiniteLattice::implies, py::const_))
      .def("pseudo_complement", &FiniteLattice::pseudo_complement)
      .def("closure", &FiniteLattice::closure)
      .def("is_closed", &FiniteLattice::is_closed)
      .def("is_dense", &FiniteLattice::is_dense)
      .def("heyting", &FiniteLattice::heyting)
      .def("cover_pairs", &FiniteLattice::cover_pairs)
      .def("json", [](const FiniteLattice& L) { return lattice_to_json(L).dump(2); })
      .def("dot", [](const FiniteLattice& L) { return to_dot(L); })
      .def("table", [](const FiniteLattice& L) { return to_table(L); })
      .def("__len__", &FiniteLattice::size)
      .def("__repr__", [](const FiniteLattice& L) {
        return "<Lattice " + L.name() + " n=" + std::to_string(L.size()) + ">";
      });

  m.def(
      "build_lattice",
      [](int n, const std::vector<std::pair<int, int>>& pairs, std::vector<std::string> names,
         std::string name) { return unconst(build_lattice(n, pairs, std::move(names), std::move(name))); },
      py::arg("n"), py::arg("leq_pairs"), py::arg("names") = std::vector<std::string>{},
      py::arg("name") = "");
  m.def("make_chain", [](int n, std::string name) { return unconst(make_chain(n, std::move(name))); },
        py::arg("n"), py::arg("name") = "");
  m.def(
      "product_lattice",
      [](std::shared_ptr<FiniteLattice> a, std::shared_ptr<FiniteLattice> b, std::string name) {
        return unconst(product_lattice(a, b, std::move(name)));
      },
      py::arg("a"), py::arg("b"), py::arg("name") = "");
  m.def("lattice_from_json", [](const std::string& text) {
    return unconst(lattice_from_json(nlohmann::json::parse(text)));
  });

  m.def("check_bounded_distributive",
        [](std::shared_ptr<FiniteLattice> L) { return check_bounded_distributive(*L); });
  m.def("check_heyting", [](std::shared_ptr<FiniteLattice> L) { return check_heyting(*L); });
  m.def("check_stone", [](std::shared_ptr<FiniteLattice> L) { return check_stone(*L); });
  m.def("check_augmented", [](std::shared_ptr<FiniteLattice> L) { return check_augmented(*L); });
  m.def("find_closure_element",
        [](std::shared_ptr<FiniteLattice> L) { return find_closure_element(*L); });

  py::class_<BoolAlg, std::shared_ptr<BoolAlg>>(m, "BoolAlg")
      .def_property_readonly("size", &BoolAlg::size)
      .def_property_readonly("atom_count", &BoolAlg::atom_count)
      .def_property_readonly("ones", &BoolAlg::ones)
      .def_property_readonly("name", &BoolAlg::name)
      .def_property_readonly("atom_names", &BoolAlg::atom_names)
      .def("meet", &BoolAlg::meet)
      .def("join", &BoolAlg::join)
      .def("complement", &BoolAlg::complement)
      .def("implies", &BoolAlg::implies)
      .def("leq", &BoolAlg::leq)
      .def("element_name", &BoolAlg::element_name)
      .def(
          "lattice",
          [](const BoolAlg& B, int cap) { return unconst(B.lattice(cap)); },
          py::arg("carrier_cap") = FiniteLattice::kDefaultCarrierCap)
      .def("__len__", &BoolAlg::size)
      .def("__repr__", [](const BoolAlg& B) {
        return "<BoolAlg " + B.name() + " atoms=" + std::to_string(B.atom_count()) + ">";
      });

  m.def(
      "powerset_algebra",
      [](int k, std::vector<std::string> atoms, std::string name) {
        return unconst(powerset_algebra(k, std::move(atoms), std::move(name)));
      },
      py::arg("k"), py::arg("atom_names") = std::vector<std::string>{}, py::arg("name") = "");
  m.def(
      "free_boolean_algebra",
      [](const std::vector<std::string>& vars, std::string name) {
        return unconst(free_boolean_algebra(vars, std::move(name)));
      },
      py::arg("vars"), py::arg("name") = "");

  py::class_<BooleanView>(m, "BooleanView")
      .def_property_readonly("alg", [](const BooleanView& v) { return unconst(v.alg); })
      .def_readonly("mask_of", &BooleanView::mask_of)
      .def_readonly("elem_of", &BooleanView::elem_of);
  m.def("as_boolean", [](std::shared_ptr<FiniteLattice> L) { return as_boolean(L); });

  py::class_<BoolHom>(m, "BoolHom")
      .def(py::init([](std::shared_ptr<BoolAlg> src, std::shared_ptr<BoolAlg> dst,
                       std::vector<Mask> map) {
             return BoolHom{std::move(src), std::move(dst), std::move(map)};
           }),
           py::arg("src"), py::arg("dst"), py::arg("map"))
      .def_property_readonly("src", [](const BoolHom& h) { return unconst(h.src); })
      .def_property_readonly("dst", [](const BoolHom& h) { return unconst(h.dst); })
      .def_readonly("map", &BoolHom::map)
      .def("__call__", [](const BoolHom& h, Mask x) { return h.map.at(x); })
      .def("__eq__", [](const BoolHom& a, const BoolHom& b) { return same_map(a, b); });

  m.def("identity_bool_hom",
        [](std::shared_ptr<BoolAlg> B) { return identity_bool_hom(B); });
  m.def("enumerate_bool_homs", [](std::shared_ptr<BoolAlg> a, std::shared_ptr<BoolAlg> b) {
    return enumerate_bool_homs(a, b);
  });
  m.def("check_bool_hom", &check_bool_hom);
  m.def("compose_bool", [](const BoolHom& g, const BoolHom& f) { return compose(g, f); });

  py::class_<Skeleton>(m, "Skeleton")
      .def_property_readonly("alg", [](const Skeleton& s) { return unconst(s.alg); })
      .def_readonly("to_ambient", &Skeleton::to_ambient)
      .def_readonly("from_ambient", &Skeleton::from_ambient);

  py::class_<Certification>(m, "Certification")
      .def_readonly("distributive", &Certification::distributive)
      .def_readonly("heyting", &Certification::heyting)
      .def_readonly("stone", &Certification::stone)
      .def_readonly("augmented", &Certification::augmented)
      .def_readonly("closure_element", &Certification::closure_element)
      .def("ok", &Certification::ok)
      .def("summary", &Certification::summary)
      .def("json", [](const Certification& c) { return c.to_json().dump(2); });
  m.def("certify_lattice", [](std::shared_ptr<FiniteLattice> L) { return certify_lattice(*L); });

  py::class_<AugStone, std::shared_ptr<AugStone>>(m, "AugStone")
      .def_property_readonly("e", &AugStone::e)
      .def_property_readonly("size", &AugStone::size)
      .def_property_readonly("name", &AugStone::name)
      .def_property_readonly("lattice", [](const AugStone& s) { return unconst(s.lattice()); })
      .def_property_readonly("skeleton", &AugStone::skeleton)
      .def("__repr__", [](const AugStone& S) {
        return "<AugStone " + S.name() + " n=" + std::to_string(S.size()) +
               " e=" + std::to_string(S.e()) + ">";
      });
  m.def(
      "make_aug_stone",
      [](std::shared_ptr<FiniteLattice> L, std::optional<int> e, std::string name) {
        return unconst(make_aug_stone(L, e, std::move(name)));
      },
      py::arg("lattice"), py::arg("e") = std::nullopt, py::arg("name") = "");
  m.def("check_aug_props", [](std::shared_ptr<AugStone> S) { return check_aug_props(*S); });

  py::class_<StoneHom>(m, "StoneHom")
      .def(py::init([](std::shared_ptr<AugStone> src, std::shared_ptr<AugStone> dst,
                       std::vector<int> map) {
             return StoneHom{std::move(src), std::move(dst), std::move(map)};
           }),
           py::arg("src"), py::arg("dst"), py::arg("map"))
      .def_property_readonly("src", [](const StoneHom& h) { return unconst(h.src); })
      .def_property_readonly("dst", [](const StoneHom& h) { return unconst(h.dst); })
      .def_readonly("map", &StoneHom::map)
      .def("__call__", [](const StoneHom& h, int x) { return h.map.at(x); })
      .def("__eq__", [](const StoneHom& a, const StoneHom& b) { return same_map(a, b); });

  m.def("identity_stone_hom",
        [](std::shared_ptr<AugStone> S) { return identity_stone_hom(S); });
  m.def("check_stone_hom", &check_stone_hom);
  m.def("compose_stone", [](const StoneHom& g, const StoneHom& f) { return compose(g, f); });
  m.def("cl_on_hom", &cl_on_hom);

  py::class_<ContractPair>(m, "ContractPair")
      .def(py::init<Mask, Mask>(), py::arg("a"), py::arg("g"))
      .def_readonly("a", &ContractPair::a)
      .def_readonly("g", &ContractPair::g)
      .def("__eq__", [](const ContractPair& x, const ContractPair& y) { return x == y; })
      .def("__iter__",
           [](const ContractPair& c) {
             return py::iter(py::make_tuple(c.a, c.g));
           })
      .def("__repr__", [](const ContractPair& c) {
        return "ContractPair(a=" + std::to_string(c.a) + ", g=" + std::to_string(c.g) + ")";
      });

  py::class_<ContractAlgebra, std::shared_ptr<ContractAlgebra>>(m, "ContractAlgebra")
      .def_property_readonly("size", &ContractAlgebra::size)
      .def_property_readonly("base", [](const ContractAlgebra& c) { return unconst(c.base()); })
      .def_property_readonly("aug_stone",
                             [](const ContractAlgebra& c) { return unconst(c.aug_stone()); })
      .def("pair_of", &ContractAlgebra::pair_of)
      .def("index_of", &ContractAlgebra::index_of)
      .def("contains", &ContractAlgebra::contains)
      .def("pi1", &ContractAlgebra::pi1)
      .def("pi2", &ContractAlgebra::pi2)
      .def("delta", &ContractAlgebra::delta)
      .def_property_readonly("bot_index", &ContractAlgebra::bot_index)
      .def_property_readonly("top_index", &ContractAlgebra::top_index)
      .def_property_readonly("e_index", &ContractAlgebra::e_index)
      .def("__len__", &ContractAlgebra::size)
      .def("__repr__", [](const ContractAlgebra& c) {
        return "<ContractAlgebra over " + c.base()->name() + " n=" + std::to_string(c.size()) + ">";
      });

  m.def(
      "contract_algebra",
      [](std::shared_ptr<BoolAlg> B, int cap) { return unconst(contract_algebra(B, cap)); },
      py::arg("base"), py::arg("carrier_cap") = FiniteLattice::kDefaultCarrierCap);
  m.def("contract_on_hom",
        [](const BoolHom& f, std::shared_ptr<ContractAlgebra> CB,
           std::shared_ptr<ContractAlgebra> CB2) { return contract_on_hom(f, CB, CB2); });

  m.def("contract_meet",
        [](std::shared_ptr<BoolAlg> B, ContractPair x, ContractPair y) { return contract_meet(*B, x, y); });
  m.def("contract_join",
        [](std::shared_ptr<BoolAlg> B, ContractPair x, ContractPair y) { return contract_join(*B, x, y); });
  m.def("contract_impl",
        [](std::shared_ptr<BoolAlg> B, ContractPair x, ContractPair y) { return contract_impl(*B, x, y); });
  m.def("contract_not", [](std::shared_ptr<BoolAlg> B, ContractPair x) { return contract_not(*B, x); });
  m.def("contract_cl", [](std::shared_ptr<BoolAlg> B, ContractPair x) { return contract_cl(*B, x); });
  m.def("is_contract", [](std::shared_ptr<BoolAlg> B, ContractPair x) { return is_contract(*B, x); });

  m.def("alpha", [](const BoolHom& f, std::shared_ptr<ContractAlgebra> CB,
                    std::shared_ptr<AugStone> S) { return alpha(f, CB, S); });
  m.def("beta",
        [](const StoneHom& fstar, std::shared_ptr<ContractAlgebra> CB) { return beta(fstar, CB); });
  m.def("unit", [](std::shared_ptr<ContractAlgebra> CB) { return unit(CB); });
  m.def("counit", [](std::shared_ptr<AugStone> S, std::shared_ptr<ContractAlgebra> CCl) {
    return counit(S, CCl);
  });

  m.def(
      "brute_force_bool_homs",
      [](std::shared_ptr<BoolAlg> a, std::shared_ptr<BoolAlg> b, long long budget, int workers) {
        return brute_force_bool_homs(a, b, budget, workers);
      },
      py::arg("src"), py::arg("dst"), py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);
  m.def(
      "brute_force_stone_homs",
      [](std::shared_ptr<AugStone> a, std::shared_ptr<AugStone> b, long long budget, int workers) {
        return brute_force_stone_homs(a, b, budget, workers);
      },
      py::arg("src"), py::arg("dst"), py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);
  m.def("enumerate_stone_homs", [](std::shared_ptr<AugStone> a, std::shared_ptr<AugStone> b) {
    return enumerate_stone_homs(a, b);
  });

  py::class_<HomSetWitness>(m, "HomSetWitness")
      .def_readonly("bool_homs", &HomSetWitness::bool_homs)
      .def_readonly("stone_homs", &HomSetWitness::stone_homs)
      .def_readonly("pairing", &HomSetWitness::pairing)
      .def_readonly("beta_alpha_identity", &HomSetWitness::beta_alpha_identity)
      .def_readonly("alpha_beta_identity", &HomSetWitness::alpha_beta_identity)
      .def_readonly("counts_equal", &HomSetWitness::counts_equal)
      .def_readonly("brute_forced_count", &HomSetWitness::brute_forced_count)
      .def_readonly("image_matches_brute", &HomSetWitness::image_matches_brute)
      .def("passed", &HomSetWitness::passed)
      .def("json", [](const HomSetWitness& w) { return w.to_json().dump(2); });
  m.def(
      "check_bijection",
      [](std::shared_ptr<BoolAlg> B, std::shared_ptr<AugStone> S, long long budget, int workers) {
        return check_bijection(B, S, budget, workers);
      },
      py::arg("B"), py::arg("S"), py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);

  py::class_<FullyFaithfulReport>(m, "FullyFaithfulReport")
      .def_readonly("bool_hom_count", &FullyFaithfulReport::bool_hom_count)
      .def_readonly("stone_hom_count_alpha", &FullyFaithfulReport::stone_hom_count_alpha)
      .def_readonly("stone_hom_count_brute", &FullyFaithfulReport::stone_hom_count_brute)
      .def_readonly("injective", &FullyFaithfulReport::injective)
      .def_readonly("surjective_alpha", &FullyFaithfulReport::surjective_alpha)
      .def_readonly("surjective_brute", &FullyFaithfulReport::surjective_brute)
      .def("passed", &FullyFaithfulReport::passed)
      .def("json", [](const FullyFaithfulReport& r) { return r.to_json().dump(2); });
  m.def(
      "check_fully_faithful",
      [](std::shared_ptr<BoolAlg> B, std::shared_ptr<BoolAlg> B2, long long budget, int workers) {
        return check_fully_faithful(B, B2, budget, workers);
      },
      py::arg("B"), py::arg("B2"), py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);

  py::class_<NaturalityReport>(m, "NaturalityReport")
      .def_readonly("squares_checked", &NaturalityReport::squares_checked)
      .def_readonly("failures", &NaturalityReport::failures)
      .def_readonly("witnesses", &NaturalityReport::witnesses)
      .def("passed", &NaturalityReport::passed)
      .def("json", [](const NaturalityReport& r) { return r.to_json().dump(2); });
  m.def("check_naturality", [](const BoolHom& rho, const StoneHom& sigma) {
    return check_naturality(rho, sigma);
  });
  m.def("check_triangle_on_base",
        [](std::shared_ptr<BoolAlg> B) { return check_triangle_on_base(B); });
  m.def("check_triangle_on_stone",
        [](std::shared_ptr<AugStone> S) { return check_triangle_on_stone(S); });

  py::class_<Formula, std::shared_ptr<Formula>>(m, "Formula")
      .def("__str__", [](std::shared_ptr<Formula> f) { return to_string(f); })
      .def("__repr__", [](std::shared_ptr<Formula> f) { return "<Formula " + to_string(f) + ">"; })
      .def("__eq__", [](std::shared_ptr<Formula> a, std::shared_ptr<Formula> b) {
        return same_formula(a, b);
      });
  m.def("parse", [](const std::string& text) { return unconst(parse(text)); });

  py::class_<VarContext>(m, "VarContext")
      .def(py::init<std::vector<std::string>>())
      .def_property_readonly("vars", &VarContext::vars)
      .def_property_readonly("algebra", [](const VarContext& c) { return unconst(c.algebra()); })
      .def("var_mask", &VarContext::var_mask)
      .def("minterm_name", &VarContext::minterm_name);
  m.def("eval", [](std::shared_ptr<Formula> f, const VarContext& ctx) { return eval(f, ctx); });
  m.def(
      "parse_contract",
      [](const std::string& text, const VarContext& ctx, bool saturate) {
        return parse_contract(text, ctx, saturate);
      },
      py::arg("text"), py::arg("ctx"), py::arg("saturate") = false);
  m.def("render_mask", &render_mask);
}
