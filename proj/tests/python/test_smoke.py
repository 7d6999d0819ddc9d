"""Smoke tests for the python bindings: each main operation is exercised once
against values the C++ suites verify exhaustively."""

import json

import pytest

import contralg as ca


def test_lattice_basics():
    chain = ca.make_chain(4)
    assert chain.size == 4
    assert chain.bot == 0 and chain.top == 3
    assert chain.meet(1, 2) == 1
    assert chain.join(1, 2) == 2
    assert chain.implies(3, 1) == 1
    assert chain.closure(2) == 3
    assert not chain.is_closed(2)
    assert ca.find_closure_element(chain) == 1


def test_law_suites():
    diamond = ca.build_lattice(4, [(0, 1), (0, 2), (1, 3), (2, 3)], name="diamond")
    assert ca.check_bounded_distributive(diamond).passed
    assert ca.check_heyting(diamond).passed
    assert ca.check_stone(diamond).passed

    n5 = ca.build_lattice(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], name="n5")
    rep = ca.check_bounded_distributive(n5)
    assert not rep.passed
    assert rep.violations_total > 0
    assert json.loads(rep.json())["status"] == "FAIL"


def test_boolalg_and_homs():
    b4 = ca.powerset_algebra(2)
    assert b4.size == 4
    assert b4.complement(0b01) == 0b10
    homs = ca.enumerate_bool_homs(b4, ca.powerset_algebra(1))
    assert len(homs) == 2
    for h in homs:
        assert ca.check_bool_hom(h).passed


def test_contract_algebra():
    b = ca.powerset_algebra(2)
    c = ca.contract_algebra(b)
    assert c.size == 9
    assert c.pair_of(c.e_index) == ca.ContractPair(b.ones, b.ones)
    assert ca.contract_not(b, ca.ContractPair(b.ones, b.ones)) == ca.ContractPair(b.ones, 0)
    assert ca.check_aug_props(c.aug_stone).passed

    stone = c.aug_stone
    assert stone.e == c.e_index
    sk = stone.skeleton
    assert sk.alg.size == b.size


def test_adjunction_checks():
    b4 = ca.powerset_algebra(2)
    chain4 = ca.make_aug_stone(ca.make_chain(4))
    w = ca.check_bijection(b4, chain4)
    assert w.passed()
    assert len(w.bool_homs) == 2
    assert w.brute_forced_count == 2

    ff = ca.check_fully_faithful(b4, ca.powerset_algebra(1))
    assert ff.passed() and ff.bool_hom_count == 2

    assert ca.check_triangle_on_base(b4)
    assert ca.check_triangle_on_stone(chain4)


def test_parser():
    f = ca.parse("p -> q -> r")
    assert str(f) == "p -> q -> r"
    ctx = ca.VarContext(["p", "q"])
    assert ca.eval(ca.parse("p | !p"), ctx) == ctx.algebra.ones
    a, g = ca.parse_contract("(1, p)", ctx)
    assert a == ctx.algebra.ones
    assert g == ctx.var_mask("p")
    assert ca.render_mask(ctx, ca.eval(ca.parse("p & q"), ctx)) == "p & q"

    with pytest.raises(ca.ContralgError):
        ca.parse_contract("(p, q)", ctx)
    saturated = ca.parse_contract("(p, q)", ctx, saturate=True)
    assert ca.is_contract(ctx.algebra, saturated)


def test_errors_carry_kinds():
    with pytest.raises(ca.ContralgError, match="NotAPartialOrder"):
        ca.build_lattice(2, [(0, 1), (1, 0)])
    with pytest.raises(ca.ContralgError, match="TooLarge"):
        ca.contract_algebra(ca.powerset_algebra(8))
