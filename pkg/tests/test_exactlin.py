from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relchern.exactlin import (
    Echelon, FreeModule, Inconsistent, LinMap, QuotientSpace, ShapeError, Vector, fstr, rank_kernel_image,
    render, scalar, solve_linear,
)


def dense_rank(rows):
    """Plain Gauss-Jordan on a list of lists; the oracle for rank."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def linmap_from_rows(rows):
    ncols = len(rows[0])
    dom = FreeModule(range(ncols))
    cod = FreeModule(range(len(rows)))
    cols = [Vector((i, rows[i][j]) for i in range(len(rows))) for j in range(ncols)]
    return LinMap(dom, cod, cols)


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


def test_vector_drops_zeros_and_adds():
    v = Vector({"a": 1, "b": 0})
    assert v == {"a": Fraction(1)}
    w = v + Vector({"a": -1, "c": Fraction(1, 2)})
    assert w == {"c": Fraction(1, 2)}
    assert (w - w) == Vector()
    assert (-w)["c"] == Fraction(-1, 2)


def test_scalar_rejects_floats():
    with pytest.raises(TypeError):
        scalar(0.5)
    assert scalar("3/4") == Fraction(3, 4)


def test_render_and_fstr_are_stable():
    assert render((1, (0, 2))) == "(1,(0,2))"
    assert fstr(Fraction(-3, 6)) == "-1/2"
    assert fstr(Fraction(4)) == "4"


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_matches_dense_oracle(rows):
    rank, kernel, image = rank_kernel_image(linmap_from_rows(rows))
    assert rank == dense_rank(rows)
    assert len(kernel) == len(rows[0]) - rank
    m = linmap_from_rows(rows)
    for k in kernel:
        assert not m(k)


@settings(max_examples=60, deadline=None)
@given(matrices, st.lists(st.integers(-2, 2), min_size=5, max_size=5))
def test_solve_is_exact_or_certified(rows, x):
    m = linmap_from_rows(rows)
    target = m(Vector(enumerate(x[: len(rows[0])])))
    sol = solve_linear(m, target)
    assert not isinstance(sol, Inconsistent)
    assert m(sol) == target
    # perturb outside the image when the map is not onto
    if dense_rank(rows) < len(rows):
        for i in range(len(rows)):
            bad = target + Vector.basis(i)
            res = Echelon(m).solve(bad)
            if isinstance(res, Inconsistent):
                y = res.certificate
                assert all(not y.dot(col) for col in m.columns)
                assert y.dot(bad) != 0
                break
        else:
            pytest.fail("no inconsistent right-hand side found below full rank")


def test_shape_error_on_foreign_key():
    with pytest.raises(ShapeError):
        FreeModule(["a"]).check(Vector({"b": 1}))


def test_quotient_space_projection():
    amb = FreeModule(["a", "b", "c"])
    q = QuotientSpace(amb, [Vector({"a": 1, "b": 1})])
    assert q.sub_dim == 1
    assert q.project(Vector({"a": 1})) == q.project(Vector({"b": -1}))
    assert not q.project(Vector({"a": 2, "b": 2}))
