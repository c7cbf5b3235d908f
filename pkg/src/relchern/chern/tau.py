"""The cyclic embedding tau: B(H) -> C(H) and the lift c = tau . Upsilon.

    tau(h_1 (x) ... (x) h_n) = S(h_1^(0) ... h_n^(0)) (x) h_1^(1) (x) ... (x) h_n^(1)

with ``tau_0 = eta``.  ``c`` applies tau coordinatewise to ``Upsilon`` and
lands in HN of the normalized canonical mixed complex of H.
"""

from __future__ import annotations

from ..exactlin import FreeModule, LinMap, Vector, rank_kernel_image
from ..complexes.bar import BarComplex
from ..complexes.core import HNComplex, lin
from ..complexes.cyclic import CyclicAlgebraComplex
from ..complexes.tensors import project_normalized
from .upsilon import Upsilon


def tau(bar: BarComplex, w) -> Vector:
    n = len(w)
    if n == 0:
        return Vector.basis((bar.one,))
    layout = [(True, [(j, 0, False) for j in range(n)])] + [(False, [(j, 1, False)]) for j in range(n)]
    return bar.sweedler(w, [2] * n, layout)


def tau_norm(bar: BarComplex, w) -> Vector:
    return project_normalized(bar.h, tau(bar, w))


def tau_rank_certificate(bar: BarComplex, n: int, normalized: bool = True) -> dict:
    """Rank of tau on the degree-n slice of B(H); injective iff rank = dim."""
    cyc = CyclicAlgebraComplex(bar.h)
    src = FreeModule(bar.b_basis(n, normalized))
    tgt = FreeModule(cyc.basis(n, normalized))
    f = (lambda w: tau_norm(bar, w)) if normalized else (lambda w: tau(bar, w))
    m = LinMap(src, tgt, [f(w) for w in src.basis])
    rank, _, _ = rank_kernel_image(m)
    return {"degree": n, "dim": src.dim, "rank": rank, "injective": rank == src.dim}


class CLift:
    """``c = tau . Upsilon : B(H)_norm -> HN(C(H)_norm)`` with column cap P."""

    def __init__(self, bar: BarComplex, P: int, upsilon: Upsilon | None = None):
        self.bar = bar
        self.P = P
        self.ups = upsilon or Upsilon(bar)
        self.cyclic = CyclicAlgebraComplex(bar.h)
        self.mixed = self.cyclic.mixed(normalized=True)
        self.hn = HNComplex(self.mixed, P)
        self._memo = {}

    def __call__(self, w) -> Vector:
        if w not in self._memo:
            out = Vector()
            for n in range(self.P + 1):
                col = lin(lambda u: tau_norm(self.bar, u), self.ups.bar_column(n, w))
                out.axpy(HNComplex.lift(col, n))
            self._memo[w] = out
        return self._memo[w]

    def vec(self, v) -> Vector:
        return lin(self, v)
