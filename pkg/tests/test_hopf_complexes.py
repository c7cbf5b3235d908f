
import pytest

from relchern.algebra.assoc import FiniteAlgebra, dual_numbers
from relchern.algebra.lie import abelian, heisenberg
from relchern.complexes.bar import BarComplex
from relchern.complexes.checks import (
    ConfigurationError, b_slice, c_slice, check_hn_square, check_slice, e_slice, filtration_truncate, mixed_to_HN,
)
from relchern.complexes.core import HNComplex, homology_table, lin
from relchern.complexes.cyclic import CyclicAlgebraComplex
from relchern.exactlin import Vector
from relchern.hopf import (
    CorruptedCoproduct, PrecisionError, build_enveloping_hopf, build_group_hopf, check_hopf_axioms, cyclic_group,
    delta_iter, delta_n,
)


@pytest.fixture(scope="module")
def U_heis():
    return build_enveloping_hopf(heisenberg(), 3)


def test_hopf_axioms_hold(U_heis):
    for h in (U_heis, build_group_hopf(cyclic_group(3))):
        report = check_hopf_axioms(h, h.basis(h.truncation))
        assert all(v["ok"] for v in report.values()), report


def test_corrupted_coproduct_is_caught(U_heis):
    bad = CorruptedCoproduct(U_heis)
    report = check_hopf_axioms(bad, U_heis.basis(U_heis.truncation))
    assert not report["counit"]["ok"]
    assert report["counit"]["witness"] is not None


def test_antipode_on_heisenberg(U_heis):
    # S(xy) = S(y) S(x) = yx = xy - z
    assert U_heis.antipode((1, 1, 0)) == Vector({(1, 1, 0): 1, (0, 0, 1): -1})
    assert U_heis.antipode((1, 0, 0)) == Vector({(1, 0, 0): -1})


def test_coproduct_of_primitive_power():
    U = build_enveloping_hopf(abelian(1), 4)
    # Delta(x^2) = x^2 (x) 1 + 2 x (x) x + 1 (x) x^2
    assert U.coproduct((2,)) == Vector({((2,), (0,)): 1, ((1,), (1,)): 2, ((0,), (2,)): 1})
    # iterated coproduct into three legs
    assert delta_n(U, (1,), 3) == Vector({((1,), (0,), (0,)): 1, ((0,), (1,), (0,)): 1, ((0,), (0,), (1,)): 1})


def test_group_hopf_grouplike():
    G = build_group_hopf(cyclic_group(3))
    for g in G.basis():
        assert G.coproduct(g) == Vector.basis((g, g))


def test_simplicial_and_cyclic_slices(U_heis):
    bar = BarComplex(U_heis)
    for s in (e_slice(bar), b_slice(bar), c_slice(CyclicAlgebraComplex(U_heis))):
        report = check_slice(s, 3)
        assert all(v["ok"] for v in report.values()), report


def test_mixed_axioms_dual_numbers():
    cyc = CyclicAlgebraComplex(FiniteAlgebra(dual_numbers()))
    for rel in (False, True):
        m = cyc.mixed(normalized=True, relative=rel)
        assert all(v["ok"] for v in m.check_axioms(4).values())
        assert check_hn_square(HNComplex(m, 2), 4)["ok"]


def test_bar_boundary_of_empty_word(U_heis):
    assert BarComplex(U_heis).b_boundary(()) == Vector()


def test_hochschild_of_dual_numbers():
    # Oracle: HH_0 = A (dim 2) and HH_n = Q for n >= 1 over Q[eps]/eps^2
    cyc = CyclicAlgebraComplex(FiniteAlgebra(dual_numbers()))
    assert homology_table(cyc.hochschild(normalized=True), 4) == [2, 1, 1, 1, 1]


def test_hn_caps_must_fit():
    cyc = CyclicAlgebraComplex(FiniteAlgebra(dual_numbers()))
    with pytest.raises(ConfigurationError):
        mixed_to_HN(cyc.mixed(), 3, degree_cap=4, internal_cap=5)


def test_hn_lift_and_pi():
    v = Vector({("a",): 2})
    lifted = HNComplex.lift(v, 1)
    assert lifted == Vector({(1, ("a",)): 2})
    assert HNComplex.pi(HNComplex.lift(v, 0)) == v


def test_filtration_truncate():
    U = build_enveloping_hopf(heisenberg(), 4)
    U3 = filtration_truncate(U, 3)
    assert U3.truncation == 3
    assert len(U3.basis(3)) < len(U.basis(4))
    with pytest.raises(TypeError):
        filtration_truncate(object(), 2)


def test_connes_B_lowers_to_zero_twice():
    cyc = CyclicAlgebraComplex(build_enveloping_hopf(abelian(2), 3))
    m = cyc.mixed()
    for n in range(3):
        for k in m.basis(n):
            assert not lin(m.B, m.B(k))


def test_delta_iter_precision_budget_and_soundness():
    low = build_enveloping_hopf(heisenberg(), 4)
    high = build_enveloping_hopf(heisenberg(), 7)
    with pytest.raises(PrecisionError):
        delta_iter(low, (1, 1, 0), 3, 2)
    for m in low.basis(4):
        # mod I^2 per factor from 2 factors needs input mod I^4; a finer input agrees
        assert delta_iter(low, m, 2, 2) == delta_iter(high, m, 2, 2)
