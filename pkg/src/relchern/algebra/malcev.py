"""Malcev correspondence: the group exp(g) inside the completed U(g).

A group element is stored by its logarithm, a vector of g.  The group law
is computed by multiplying truncated exponentials in U(g)/I^(c+1) and taking
the truncated logarithm, where c is the nilpotency class; the result is
read back from the degree-one part.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..exactlin import Vector
from .lie import LieAlgebraSpec, validate_lie
from .pbw import PBWAlgebra


class Unsupported(ValueError):
    pass


def exp_series(alg: PBWAlgebra, u: Vector) -> Vector:
    """exp(u) in the truncated algebra; u must lie in the augmentation ideal."""
    if alg.truncation is None:
        raise Unsupported("exp needs a truncated enveloping algebra")
    if u.get(alg.one):
        raise ValueError("exp is only defined on the augmentation ideal")
    out = Vector.basis(alg.one)
    term = Vector.basis(alg.one)
    k = 1
    while True:
        term = alg.mul_vec(term, u).scale(Fraction(1, k))
        if not term:
            return out
        out.axpy(term)
        k += 1


def log_series(alg: PBWAlgebra, g: Vector) -> Vector:
    """log(g) for g with counit 1 in the truncated algebra."""
    if alg.truncation is None:
        raise Unsupported("log needs a truncated enveloping algebra")
    if g.get(alg.one, 0) != 1:
        raise ValueError("log is only defined on 1 + augmentation ideal")
    u = g - Vector.basis(alg.one)
    out = Vector()
    power = Vector.basis(alg.one)
    k = 1
    while True:
        power = alg.mul_vec(power, u)
        if not power:
            return out
        out.axpy(power, Fraction((-1) ** (k + 1), k))
        k += 1


class MalcevGroup:
    """The nilpotent group G = exp(g) with elements stored as log-coordinates."""

    def __init__(self, lie: LieAlgebraSpec):
        ok, cls = validate_lie(lie)
        if cls == "not nilpotent":
            raise Unsupported("the Malcev group law needs a nilpotent Lie algebra")
        self.lie = lie
        self.nilpotency_class = cls
        self.U = PBWAlgebra(lie, truncation=max(cls, 1) + 1)
        self.identity = tuple(Fraction(0) for _ in range(lie.dim))
        self._mul = lru_cache(maxsize=None)(self._mul_uncached)

    def element(self, coords) -> tuple:
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != self.lie.dim:
            raise ValueError("wrong number of coordinates")
        return coords

    def as_vector(self, g) -> Vector:
        return Vector((i, c) for i, c in enumerate(g) if c)

    def exp(self, g) -> Vector:
        return exp_series(self.U, self.U.lie_element(self.as_vector(g)))

    def _mul_uncached(self, a, b):
        prod = self.U.mul_vec(self.exp(a), self.exp(b))
        lg = log_series(self.U, prod)
        coords = [Fraction(0)] * self.lie.dim
        for m, c in lg.items():
            if sum(m) != 1:
                raise AssertionError("BCH result left the Lie algebra")
            coords[m.index(1)] = c
        return tuple(coords)

    def mul(self, a, b):
        if not any(a):
            return b
        if not any(b):
            return a
        return self._mul(a, b)

    def inverse(self, a):
        return tuple(-c for c in a)

    def name(self, g) -> str:
        if not any(g):
            return "e"
        parts = []
        for c, n in zip(g, self.lie.names):
            if c:
                parts.append(n if c == 1 else f"{c}{n}")
        return "exp(" + "+".join(parts) + ")"


def bch_product(group: MalcevGroup, a, b):
    """log(exp(a) exp(b)) for log-coordinate tuples a, b."""
    return group.mul(tuple(Fraction(x) for x in a), tuple(Fraction(x) for x in b))
