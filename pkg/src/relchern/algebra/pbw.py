"""Enveloping algebras in the PBW basis.

A PBW monomial is an exponent tuple over the ordered Lie basis
``x_0 < x_1 < ... < x_{d-1}``.  Products are straightened with
``x_j x_i = x_i x_j - [x_i, x_j]`` for ``j > i``.  For nilpotent algebras
each generator carries its lower-central-series weight and the truncation
``N`` discards monomials of weight ``>= N``; in an adapted basis this is
exactly the quotient by the N-th power of the augmentation ideal.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from ..exactlin import Vector
from .base import AugmentedAlgebra
from .lie import LieAlgebraSpec, lcs_weights, validate_lie


class PBWAlgebra(AugmentedAlgebra):
    label = "U(g)"

    def __init__(self, lie: LieAlgebraSpec, truncation: int | None = None, weights=None):
        self.lie = lie
        self.d = lie.dim
        self.one = (0,) * self.d
        ok, cls = validate_lie(lie)
        self.nilpotency_class = cls
        if weights is None:
            weights = lcs_weights(lie) if cls != "not nilpotent" else (1,) * self.d
        if cls == "not nilpotent" and truncation is not None:
            raise ValueError("adic truncation of U(g) needs a nilpotent Lie algebra")
        self.weights = tuple(weights)
        if truncation is not None and truncation < 1:
            raise ValueError("truncation level must be >= 1")
        self.truncation = truncation
        self._mul_gen = lru_cache(maxsize=None)(self._mul_gen_uncached)
        self._mul = lru_cache(maxsize=None)(self._mul_uncached)

    # -- basis bookkeeping -------------------------------------------------

    def generator(self, i: int):
        e = [0] * self.d
        e[i] = 1
        return tuple(e)

    def weight(self, m) -> int:
        return sum(a * w for a, w in zip(m, self.weights))

    def degree(self, m) -> int:
        return sum(m)

    def name(self, m) -> str:
        parts = []
        for a, n in zip(m, self.lie.names):
            if a == 1:
                parts.append(n)
            elif a:
                parts.append(f"{n}^{a}")
        return "".join(parts) if parts else "1"

    def _ok(self, m) -> bool:
        return self.truncation is None or self.weight(m) < self.truncation

    def reduced_basis(self, max_weight=None):
        """Non-unit monomials of weight below the bound (or the truncation)."""
        bound = self.truncation if max_weight is None else max_weight
        if self.truncation is not None and max_weight is not None:
            bound = min(bound, self.truncation)
        if bound is None:
            raise ValueError("an exact enveloping algebra is infinite; give a weight bound")
        ranges = [range(0, (bound - 1) // w + 1) for w in self.weights]
        out = [m for m in iproduct(*ranges) if 0 < self.weight(m) < bound]
        out.sort(key=lambda m: (self.weight(m), sum(m), tuple(-a for a in m)))
        return out

    def monomials_of_degree(self, deg: int):
        """All monomials of PBW degree exactly ``deg`` (ignores truncation)."""
        out = []

        def rec(i, left, acc):
            if i == self.d - 1:
                out.append(tuple(acc + [left]))
                return
            for a in range(left, -1, -1):
                rec(i + 1, left - a, acc + [a])

        if self.d == 0:
            return [()] if deg == 0 else []
        rec(0, deg, [])
        return out

    # -- multiplication ----------------------------------------------------

    def _mul_gen_uncached(self, m, j) -> Vector:
        """``m * x_j`` straightened and truncated."""
        k = max((i for i, a in enumerate(m) if a), default=-1)
        if k <= j:
            r = list(m)
            r[j] += 1
            r = tuple(r)
            return Vector.basis(r) if self._ok(r) else Vector()
        mp = list(m)
        mp[k] -= 1
        mp = tuple(mp)
        out = Vector()
        # m' x_k x_j = (m' x_j) x_k + m' [x_k, x_j]
        for a, c in self._mul_gen(mp, j).items():
            out.axpy(self._mul_gen(a, k), c)
        for l, c in self.lie.bracket_basis(k, j).items():
            out.axpy(self._mul_gen(mp, l), c)
        return out

    def _mul_uncached(self, a, b) -> Vector:
        cur = Vector.basis(a) if self._ok(a) else Vector()
        for j, e in enumerate(b):
            for _ in range(e):
                nxt = Vector()
                for m, c in cur.items():
                    nxt.axpy(self._mul_gen(m, j), c)
                cur = nxt
        return cur

    def mul(self, a, b) -> Vector:
        return self._mul(a, b)

    def counit(self, m) -> Fraction:
        return Fraction(1) if not any(m) else Fraction(0)

    def truncate(self, v) -> Vector:
        return Vector((m, c) for m, c in v.items() if self._ok(m))

    def lie_element(self, v) -> Vector:
        """Embed a vector of the Lie algebra as degree-one monomials."""
        return Vector((self.generator(i), c) for i, c in v.items())

    def with_truncation(self, N):
        return PBWAlgebra(self.lie, N, self.weights)


def pbw_product(alg: PBWAlgebra, u, v, truncation: int | None = None) -> Vector:
    """Product of two linear combinations of monomials in U(g)/I^N."""
    if truncation is not None and truncation != alg.truncation:
        alg = alg.with_truncation(truncation)
    return alg.truncate(alg.mul_vec(u, v))
