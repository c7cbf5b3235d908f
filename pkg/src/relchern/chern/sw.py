"""A comparison map sw: B(U g)_norm / F_N -> ^g over the identity of Q.

The truncated Chevalley-Eilenberg resolution ``(U (x) ^g) / F_N`` is
acyclic (its associated graded pieces are Koszul complexes), so it admits a
k-linear contraction; we compute one degree by degree with exact solves.
The U-linear comparison ``phi: E(U)_norm / F_N -> (U (x) ^g) / F_N`` is then

    phi(1) = 1 (x) 1,   phi(1 (x) v) = s_CE(phi(d'(1 (x) v))),   phi(a v) = a phi(v)

and ``sw = k (x)_U phi``.  Any two comparison maps are homotopic, so every
statement that only needs sw up to homotopy is insensitive to this choice.
"""

from __future__ import annotations

from ..exactlin import Echelon, Inconsistent, Vector
from ..algebra.lie import LieAlgebraSpec
from ..complexes.bar import BarComplex
from ..complexes.core import FunctionComplex, lin
from ..complexes.maps import ChainMap
from ..complexes.tensors import project_normalized
from ..hopf import build_enveloping_hopf
from .ce import CE


class ContractionError(AssertionError):
    """The truncated resolution failed to be acyclic (a bug, not bad input)."""


class SWComparison:
    def __init__(self, lie: LieAlgebraSpec, N: int, U=None):
        self.lie = lie
        self.N = N
        self.U = U or build_enveloping_hopf(lie, N)
        self.bar = BarComplex(self.U)
        self.ce = CE(lie, N, U=self.U)
        self.R = self.ce.resolution()
        self._s = {}
        self._ech = {}
        self._phi = {}

    # -- contraction of the truncated resolution --------------------------------

    def _echelon(self, n):
        if n not in self._ech:
            self._ech[n] = Echelon(self.R.d_matrix(n))
        return self._ech[n]

    def s_key(self, key) -> Vector:
        if key not in self._s:
            m, I = key
            n = len(I)
            target = Vector.basis(key)
            if n == 0:
                e = self.U.counit(m)
                if e:
                    target.add_term((self.U.one, ()), -e)
            else:
                target = target - self.s_vec(self.ce.dprime(key))
            if not target:
                self._s[key] = Vector()
            else:
                if not self.R.basis(n + 1):
                    raise ContractionError(f"no room to contract {key!r}")
                x = self._echelon(n + 1).solve(target)
                if isinstance(x, Inconsistent):
                    raise ContractionError(f"truncated resolution not acyclic at {key!r}")
                self._s[key] = x
        return self._s[key]

    def s_vec(self, v) -> Vector:
        return lin(self.s_key, v)

    # -- comparison map ---------------------------------------------------------

    def phi(self, t) -> Vector:
        one = self.U.one
        a, v = t[0], t[1:]
        if a != one:
            return self.ce.act(a, self.phi((one,) + v))
        if v not in self._phi:
            if not v:
                self._phi[v] = Vector.basis((one, ()))
            else:
                x = (one,) + v
                dx = project_normalized(self.U, self.bar.boundary(x))
                self._phi[v] = self.s_vec(lin(self.phi, dx))
        return self._phi[v]

    def sw(self, w) -> Vector:
        return self.ce.reduce(self.phi((self.U.one,) + w))

    # -- chain maps ---------------------------------------------------------------

    def bar_complex(self, low: int = 0) -> FunctionComplex:
        bar = self.bar
        return FunctionComplex(lambda n: bar.b_basis(n) if n >= low else [],
                               lambda w: project_normalized(self.U, bar.b_boundary(w), 0),
                               name="B(U)_norm/F_N")

    def maps(self, low: int = 0):
        """``(sw, e, id)`` as ChainMaps between B(U)_norm / F_N and ^g / F_N."""
        B = self.bar_complex(low)
        W = self.ce.complex()
        if low:
            W = FunctionComplex(lambda n: self.ce.wedge_basis(n) if n >= low else [], self.ce.d, name="^+g")
        sw = ChainMap("sw", B, W, self.sw, low=low,
                      notes={"construction": "U-linear comparison map built from an exact contraction "
                                             "of the truncated Chevalley-Eilenberg resolution"})
        e = ChainMap("e", W, B, self.ce.e, low=low)
        ident = ChainMap("id", B, B, Vector.basis, low=low)
        return sw, e, ident
