"""The lift Upsilon' : HH(M'(H)) -> HN(M'(H)) and its reduction Upsilon on B(H).

``Upsilon'^0 = 1`` and ``Upsilon'^(n+1)`` lifts ``-B' Upsilon'^n`` through the
extra degeneracy ``s(x) = 1 (x) x`` of E(H):

    Upsilon'^(n+1)(a v) = a . s(-B' Upsilon'^n(v) + Upsilon'^(n+1)(d' v))

with ``v = 1 (x) x_1 (x) ... (x) x_m``.  The HN differential on the
coordinates is ``(i, w) -> (i, d' w) + (i + 1, B' w)``, so
``d' Upsilon'^(n+1) - Upsilon'^(n+1) d' = -B' Upsilon'^n`` makes the sum a
chain map.  On B(H) = k (x)_H E(H) the counit is applied to the first factor.
"""

from __future__ import annotations

from math import factorial

from ..exactlin import Vector
from ..complexes.bar import BarComplex
from ..complexes.core import HNComplex, lin
from ..complexes.tensors import project_normalized
from .kappa import Kappa


class Upsilon:
    def __init__(self, bar: BarComplex, normalized: bool = True, form: str | None = None):
        self.bar = bar
        self.normalized = normalized
        self.form = form or ("explicit" if normalized else "defining")
        h = bar.h
        if normalized:
            self._d = lambda t: project_normalized(h, bar.boundary(t))
            self._s = lambda v: project_normalized(h, lin(bar.extra, v))
        else:
            self._d = bar.boundary
            self._s = lambda v: lin(bar.extra, v)
        self._cols = {}

    def Bp(self, t) -> Vector:
        return self.bar.Bprime(t, self.form, self.normalized)

    def _col(self, n) -> Kappa:
        if n not in self._cols:
            prev = self.column_fn(n - 1)
            f = lambda x, prev=prev: lin(self.Bp, prev(x)).scale(-1)
            self._cols[n] = Kappa(f, self._s, self._d, self.bar.left_mul, self.bar.one, sign=+1)
        return self._cols[n]

    def column_fn(self, n):
        if n == 0:
            return Vector.basis
        return self._col(n)

    def column(self, n, t) -> Vector:
        """``Upsilon'^n(t)``, a chain of degree ``deg t + 2n`` in E(H)."""
        return Vector(self.column_fn(n)(t))

    def __call__(self, t, P: int) -> Vector:
        out = Vector()
        for n in range(P + 1):
            out.axpy(HNComplex.lift(self.column(n, t), n))
        return out

    # -- reduction to B(H) ----------------------------------------------------

    def bar_column(self, n, w) -> Vector:
        return self.bar.reduce(self.column(n, (self.bar.one,) + w))

    def on_bar(self, w, P: int) -> Vector:
        out = Vector()
        for n in range(P + 1):
            out.axpy(HNComplex.lift(self.bar_column(n, w), n))
        return out


def upsilon_of_one(bar: BarComplex, n_max: int) -> list:
    """Coefficients ``c_n`` with ``Upsilon'^n(1) = c_n [1]^(2n+1)`` (unnormalized)."""
    ups = Upsilon(bar, normalized=False)
    one = bar.one
    out = []
    for n in range(n_max + 1):
        v = ups.column(n, (one,))
        key = (one,) * (2 * n + 1)
        if set(v) - {key}:
            raise AssertionError(f"Upsilon'^{n}(1) has terms off [1]^{2 * n + 1}: {v!r}")
        out.append(v.get(key, 0))
    return out


def expected_upsilon_constant(n: int) -> int:
    return (-1) ** n * factorial(2 * n) // factorial(n)
