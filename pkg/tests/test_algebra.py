from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relchern.algebra.assoc import AlgebraError, AlgebraSpec, FiniteAlgebra, dual_numbers, exp_log, validate_algebra
from relchern.algebra.lie import JacobiError, LieAlgebraSpec, abelian, heisenberg, lcs_weights, sl2, validate_lie
from relchern.algebra.malcev import MalcevGroup, Unsupported, bch_product
from relchern.algebra.pbw import PBWAlgebra
from relchern.algebra.triangular import TriangularSpec, build_triangular
from relchern.exactlin import Vector

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)
coords3 = st.tuples(rationals, rationals, rationals)


def test_nilpotency_classes():
    assert validate_lie(heisenberg()) == (True, 2)
    assert validate_lie(abelian(2)) == (True, 1)
    assert validate_lie(sl2()) == (True, "not nilpotent")
    assert lcs_weights(heisenberg()) == (1, 1, 2)


def test_jacobi_violation_is_reported():
    bad = LieAlgebraSpec(3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {0: 1}})
    with pytest.raises(JacobiError):
        validate_lie(bad)


def test_pbw_straightening_heisenberg():
    U = PBWAlgebra(heisenberg(), truncation=4)
    x, y, z = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    assert U.mul(y, x) == Vector({(1, 1, 0): 1, z: -1})
    assert U.mul(x, y) == Vector({(1, 1, 0): 1})
    # x*y*x has weight 3 and survives I^4; z*z has weight 4 and does not
    assert U.mul(z, z) == Vector()


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from([(1, 0, 0), (0, 1, 0), (0, 0, 1)]), min_size=3, max_size=3))
def test_pbw_associative(ms):
    U = PBWAlgebra(heisenberg(), truncation=5)
    a, b, c = ms
    assert U.mul_vec(U.mul(a, b), Vector.basis(c)) == U.mul_vec(Vector.basis(a), U.mul(b, c))


@settings(max_examples=40, deadline=None)
@given(coords3, coords3)
def test_bch_matches_closed_form(a, b):
    # exp(a) exp(b) = exp(a + b + [a, b]/2) in the Heisenberg group
    G = MalcevGroup(heisenberg())
    want = (a[0] + b[0], a[1] + b[1], a[2] + b[2] + Fraction(1, 2) * (a[0] * b[1] - a[1] * b[0]))
    assert bch_product(G, a, b) == want


@settings(max_examples=25, deadline=None)
@given(coords3, coords3, coords3)
def test_malcev_group_laws(a, b, c):
    G = MalcevGroup(heisenberg())
    a, b, c = G.element(a), G.element(b), G.element(c)
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.mul(a, G.inverse(a)) == G.identity


def test_malcev_rejects_non_nilpotent():
    with pytest.raises(Unsupported):
        MalcevGroup(sl2())


def test_dual_numbers_index_and_exp_log():
    assert validate_algebra(dual_numbers()) == 2
    A = FiniteAlgebra(dual_numbers())
    eps = A.keys[1]
    e = exp_log(A, Vector({eps: 1}))
    assert e == Vector({A.one: 1, eps: 1})
    assert exp_log(A, e, inverse=True) == Vector({eps: 1})
    with pytest.raises(AlgebraError):
        exp_log(A, Vector({A.one: 1}))


def test_non_associative_algebra_rejected():
    bad = AlgebraSpec(2, {0: 1}, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: 1}}, ({1: 1},))
    with pytest.raises(AlgebraError):
        validate_algebra(bad)


def test_triangular_blocks():
    T1 = build_triangular(TriangularSpec(1, frozenset(), dual_numbers()))
    assert T1.lie.dim == 1 and not T1.lie.brackets
    T2 = build_triangular(TriangularSpec(2, frozenset({(1, 2)}), dual_numbers()))
    # diagonal and lower entries in (eps), the (1,2) entry free: dim T = 2 + 1 + 2
    assert T2.dim_T == 5
    # T^2 contains E12 * eps E21 = eps E11, T^3 contains eps E11 * E12 = eps E12, T^4 = 0
    assert T2.index == 4
    assert validate_lie(T2.lie) == (True, 3)


def test_triangular_rejects_bad_order():
    with pytest.raises(AlgebraError):
        build_triangular(TriangularSpec(2, frozenset({(1, 2), (2, 1)}), dual_numbers()))
    with pytest.raises(AlgebraError):
        build_triangular(TriangularSpec(2, frozenset({(1, 3)}), dual_numbers()))


def test_straightening_x_yx():
    # x (y x) = x (x y - z) = x^2 y - x z; both terms have weight 3
    x, y = Vector.basis((1, 0, 0)), Vector.basis((0, 1, 0))
    for N, want in ((4, Vector({(2, 1, 0): 1, (1, 0, 1): -1})), (None, Vector({(2, 1, 0): 1, (1, 0, 1): -1})),
                    (3, Vector())):
        U = PBWAlgebra(heisenberg(), truncation=N)
        assert U.mul_vec(x, U.mul_vec(y, x)) == want
