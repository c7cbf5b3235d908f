"""Exhaustive identity checks for simplicial and cyclic modules on finite slices.

A slice is described by ``basis(n)`` plus key-level operators ``face(t, i)``,
``degeneracy(t, j)`` and (optionally) the signed cyclic operator ``cyc(t)``.
Every check returns ``{"ok": bool, "witness": key or None, "checked": int}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..exactlin import Vector, render
from .core import HNComplex, MixedComplex, lin


@dataclass
class Slice:
    name: str
    basis: Callable
    face: Callable
    degeneracy: Callable
    cyc: Callable | None = None


def _run(slice_, degree_cap, lo, test):
    checked = 0
    for n in range(lo, degree_cap + 1):
        for t in slice_.basis(n):
            checked += 1
            bad = test(n, t)
            if bad:
                return {"ok": False, "witness": render(t), "detail": bad, "checked": checked}
    return {"ok": True, "witness": None, "checked": checked}


def _op(f, *args):
    return lambda v: lin(lambda k: f(k, *args), v)


def _compare(lhs, rhs, label):
    if lhs != rhs:
        return label
    return None


def check_simplicial(s: Slice, degree_cap: int) -> dict:
    """``d_i d_j = d_(j-1) d_i`` (i < j), the mixed ``d s`` rules, ``s_i s_j = s_(j+1) s_i``."""
    F, S = s.face, s.degeneracy

    def dd(n, t):
        if n < 2:
            return None
        for j in range(n + 1):
            for i in range(j):
                bad = _compare(_op(F, i)(F(t, j)), _op(F, j - 1)(F(t, i)), f"d{i}d{j}")
                if bad:
                    return bad
        return None

    def ds(n, t):
        v = Vector.basis(t)
        for j in range(n + 1):
            sj = S(t, j)
            for i in range(n + 2):
                lhs = _op(F, i)(sj)
                if i < j:
                    rhs = _op(S, j - 1)(F(t, i)) if n >= 1 else None
                elif i in (j, j + 1):
                    rhs = v
                else:
                    rhs = _op(S, j)(F(t, i - 1)) if n >= 1 else None
                if rhs is None:
                    continue
                bad = _compare(lhs, rhs, f"d{i}s{j}")
                if bad:
                    return bad
        return None

    def ss(n, t):
        for j in range(n + 1):
            for i in range(j + 1):
                bad = _compare(_op(S, i)(S(t, j)), _op(S, j + 1)(S(t, i)), f"s{i}s{j}")
                if bad:
                    return bad
        return None

    return {"d_i d_j": _run(s, degree_cap, 0, dd),
            "d_i s_j": _run(s, degree_cap, 0, ds),
            "s_i s_j": _run(s, degree_cap, 0, ss)}


def check_cyclic(s: Slice, degree_cap: int) -> dict:
    """``t^(n+1) = 1``, face/degeneracy compatibility, ``s_0 t = (-1)^n t^2 s_n`` and ``tN = N``."""
    F, S, T = s.face, s.degeneracy, s.cyc
    tv = _op(T)

    def power(n, t):
        v = Vector.basis(t)
        for _ in range(n + 1):
            v = tv(v)
        return _compare(v, Vector.basis(t), "t^(n+1)")

    def faces(n, t):
        if n == 0:
            return None
        tt = T(t)
        for i in range(1, n + 1):
            bad = _compare(_op(F, i)(tt), -tv(F(t, i - 1)), f"d{i}t")
            if bad:
                return bad
        sign = -1 if n % 2 else 1
        return _compare(_op(F, 0)(tt), F(t, n).scale(sign), "d0t")

    def degens(n, t):
        tt = T(t)
        for i in range(1, n + 1):
            bad = _compare(_op(S, i)(tt), -tv(S(t, i - 1)), f"s{i}t")
            if bad:
                return bad
        sign = -1 if n % 2 else 1
        return _compare(_op(S, 0)(tt), tv(tv(S(t, n))).scale(sign), "s0t")

    def norm(n, t):
        v = Vector.basis(t)
        acc = Vector()
        for _ in range(n + 1):
            acc.axpy(v)
            v = tv(v)
        return _compare(tv(acc), acc, "tN")

    return {"t^(n+1)": _run(s, degree_cap, 0, power),
            "d_i t": _run(s, degree_cap, 0, faces),
            "s_i t": _run(s, degree_cap, 0, degens),
            "tN=N": _run(s, degree_cap, 0, norm)}


# -- standard slices -----------------------------------------------------------

def e_slice(bar, normalized=False) -> Slice:
    return Slice("E(H)", lambda n: bar.e_basis(n, normalized), bar.face, bar.degeneracy, bar.t_closed)


def b_slice(bar) -> Slice:
    return Slice("B(H)", lambda n: bar.b_basis(n, False),
                 bar.b_face,
                 lambda w, j: bar.b_op(lambda t: bar.degeneracy(t, j), w),
                 bar.b_t)


def r_slice(bar) -> Slice:
    return Slice("R(H)", lambda n: bar.e_basis(n, False), bar.r_face, bar.r_degeneracy, bar.r_lambda)


def c_slice(cyc) -> Slice:
    return Slice("C(A)", lambda n: cyc.basis(n, normalized=False), cyc.face, cyc.degeneracy, cyc.t_op)


def check_slice(s: Slice, degree_cap: int) -> dict:
    out = {f"{s.name} {k}": v for k, v in check_simplicial(s, degree_cap).items()}
    if s.cyc is not None:
        out.update({f"{s.name} {k}": v for k, v in check_cyclic(s, degree_cap).items()})
    return out


# -- HN wrapper ------------------------------------------------------------------

class ConfigurationError(ValueError):
    pass


def mixed_to_HN(m: MixedComplex, P: int, degree_cap: int | None = None, internal_cap: int | None = None) -> HNComplex:
    """Column-truncated HN of a mixed complex, after checking the caps fit."""
    if degree_cap is not None and internal_cap is not None and internal_cap < degree_cap + 2 * P:
        raise ConfigurationError(f"internal cap {internal_cap} < D + 2P = {degree_cap + 2 * P}")
    return HNComplex(m, P)


def B_lift(m: MixedComplex, x) -> Vector:
    """``B[x] = (..., 0, Bx)``: the Connes operator placed in column 0.

    ``x`` is a chain of degree n; the result lives in HN degree n + 1.
    """
    return HNComplex.lift(lin(m.B, x), 0)


def check_hn_square(hn: HNComplex, degree_cap: int) -> dict:
    """``D^2 = 0`` on the truncated total complex (asserted on all coordinates)."""
    for n in range(2, degree_cap + 1):
        for k in hn.basis(n):
            if hn.d_vec(hn.d(k)):
                return {"ok": False, "witness": render(k)}
    return {"ok": True, "witness": None}


def filtration_truncate(obj, N: int):
    """Re-truncate an algebra or Hopf algebra at ``N`` (its quotient by ``F_N``)."""
    if not hasattr(obj, "with_truncation"):
        raise TypeError(f"{type(obj).__name__} carries no filtration")
    return obj.with_truncation(N)


def check_filtered(op, keys, weight, bound=None) -> dict:
    """An operator is filtered if it never lowers the total weight of a tensor."""
    for t in keys:
        w0 = sum(weight(a) for a in t)
        for u in op(t):
            if sum(weight(a) for a in u) < w0:
                return {"ok": False, "witness": render(t)}
    return {"ok": True, "witness": None}
