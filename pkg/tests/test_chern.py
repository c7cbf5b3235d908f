from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from relchern.algebra.assoc import dual_numbers
from relchern.algebra.lie import abelian, heisenberg
from relchern.algebra.triangular import TriangularSpec, build_triangular
from relchern.chern.ce import CE, PsiTheta, perm_sign, wedge_normal
from relchern.chern.shuffle import shuffle_product
from relchern.chern.sw import SWComparison
from relchern.chern.tau import CLift, tau, tau_norm, tau_rank_certificate
from relchern.chern.trace import BlockMaps, SizeMismatch, trace_matrices
from relchern.chern.upsilon import expected_upsilon_constant, upsilon_of_one
from relchern.complexes.bar import BarComplex
from relchern.complexes.core import FunctionComplex, HNComplex
from relchern.complexes.cyclic import CyclicAlgebraComplex
from relchern.complexes.maps import ChainMap
from relchern.exactlin import Vector
from relchern.hopf import build_enveloping_hopf, build_group_hopf, cyclic_group
from relchern.verify.engine import (
    NoHomotopy, check_chain_map, find_homotopy, homotopy_from_json, homotopy_to_json, verify_certificate,
    verify_homotopy,
)


@pytest.fixture(scope="module")
def heis_sw():
    return SWComparison(heisenberg(), 3)


# -- small complexes for the homotopy engine ------------------------------------------


def interval():
    """Q a <- Q b with d b = a (and nothing else): contractible."""
    basis = {0: ["a"], 1: ["b"]}
    return FunctionComplex(lambda n: basis.get(n, []), lambda k: Vector({"a": 1}) if k == "b" else Vector())


def point():
    """Q p in degree 0, zero differential."""
    return FunctionComplex(lambda n: ["p"] if n == 0 else [], lambda k: Vector())


def test_homotopy_on_contractible_complex():
    C = interval()
    ident = ChainMap("id", C, C, Vector.basis)
    zero = ChainMap("0", C, C, lambda k: Vector())
    h = find_homotopy(ident, zero, 1)
    assert h
    assert verify_homotopy(h)["ok"]
    assert h(0, "a") == Vector({"b": 1})


def test_no_homotopy_has_certificate():
    P = point()
    ident = ChainMap("id", P, P, Vector.basis)
    zero = ChainMap("0", P, P, lambda k: Vector())
    h = find_homotopy(ident, zero, 1)
    assert isinstance(h, NoHomotopy) and not h
    assert verify_certificate(ident, zero, 1, h.certificate)


def test_homotopy_json_round_trip():
    C = interval()
    ident = ChainMap("id", C, C, Vector.basis)
    zero = ChainMap("0", C, C, lambda k: Vector())
    h = find_homotopy(ident, zero, 1)
    back = homotopy_from_json(homotopy_to_json(h), ident, zero, 1)
    assert verify_homotopy(back)["ok"]
    with pytest.raises(KeyError):
        homotopy_from_json({"0": {"zz": {"b": "1"}}}, ident, zero, 1)


# -- constants and closed forms ------------------------------------------------------------


def test_upsilon_constants():
    bar = BarComplex(build_group_hopf(cyclic_group(3)))
    got = upsilon_of_one(bar, 3)
    assert got == [expected_upsilon_constant(n) for n in range(4)]
    assert [(-1) ** n * factorial(2 * n) // factorial(n) for n in range(4)] == [1, -2, 12, -120]


def test_tau_on_grouplike_words():
    G = build_group_hopf(cyclic_group(3))
    bar = BarComplex(G)
    g = G.basis()[1]
    assert g != G.one
    w = (g, g)
    prod = G.group.mul(g, g)
    assert tau(bar, w) == Vector.basis((G.group.inverse(prod), g, g))


def test_tau_on_primitives_and_injective():
    U = build_enveloping_hopf(heisenberg(), 3)
    bar = BarComplex(U)
    x, y = U.generator(0), U.generator(1)
    assert tau_norm(bar, (x, y)) == Vector.basis((U.one, x, y))
    for n in range(3):
        assert tau_rank_certificate(bar, n)["injective"]


def test_c_projects_to_tau():
    U = build_enveloping_hopf(abelian(2), 3)
    bar = BarComplex(U)
    c = CLift(bar, 2)
    for w in bar.b_basis(2):
        assert HNComplex.pi(c(w)) == tau_norm(bar, w)


# -- Chevalley-Eilenberg side ---------------------------------------------------------------


@given(st.permutations(range(4)))
def test_perm_sign_matches_inversion_count(p):
    inv = sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j])
    assert perm_sign(p) == (-1) ** inv


def test_wedge_normal():
    assert wedge_normal((1, 0)) == (-1, (0, 1))
    assert wedge_normal((1, 1))[0] == 0


def test_heisenberg_ce_differential():
    ce = CE(heisenberg(), None)
    assert ce.d((0, 1)) == Vector({(2,): -1})
    assert not ce.d((0, 1, 2))


def test_flipped_e_sign_is_caught(heis_sw):
    sw, e, _ = heis_sw.maps()
    assert check_chain_map(e, 3)["ok"]
    flipped = ChainMap("e flipped", e.source, e.target,
                       lambda I: e(I).scale(-1) if len(I) == 2 else e(I))
    res = check_chain_map(flipped, 3)
    assert not res["ok"]
    assert res["witness"] == "(0,1)"  # x ^ y


def test_sw_is_a_chain_map(heis_sw):
    sw, _, _ = heis_sw.maps()
    assert check_chain_map(sw, 3)["ok"]


def test_shuffle_product_in_degree_one():
    # (1, x) * (1, y) = (1, x, y) - (1, y, x) over exponent tuples of S(Q^2)
    one, x, y = (0, 0), (1, 0), (0, 1)
    assert shuffle_product({(one, x): 1}, {(one, y): 1}) == {(one, x, y): 1, (one, y, x): -1}


def test_tau_psi_equals_b_theta_on_heisenberg():
    ce = CE(heisenberg(), 5)
    bar = BarComplex(ce.U)
    pt = PsiTheta(ce, bar, CyclicAlgebraComplex(ce.U), 2)
    for n in (1, 2, 3):
        for I in ce.wedge_basis(n):
            assert pt.tau_psi(I) == pt.B_theta(I)
    assert pt.tau_psi(()) != pt.B_theta(())


# -- traces and blocks ------------------------------------------------------------------------


def test_trace_examples():
    a, b = {"a": 1}, {"b": 1}
    assert trace_matrices([{(0, 1): a}, {(1, 0): b}]) == Vector({("a", "b"): 1})
    assert trace_matrices([{(0, 1): a}, {(0, 1): b}]) == Vector()
    with pytest.raises(SizeMismatch):
        trace_matrices([{(0, 2): a}], 2)


def test_fusion_and_rho_on_one_by_one_block():
    block = build_triangular(TriangularSpec(1, frozenset(), dual_numbers()))
    A = block.base_algebra
    eps = A.keys[1]
    maps = BlockMaps(block)
    # j(exp eps) = 1 + eps
    assert maps.fusion([1]) == {(0, 0): Vector({A.one: 1, eps: 1})}
    ce = CE(block.lie, 2)
    maps = BlockMaps(block, ce.U, 2)
    # rho(eps) = eps, traced
    assert maps.trace_vec(maps.rho(ce, (0,))) == Vector({(eps,): 1})
