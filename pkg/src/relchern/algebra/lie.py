"""Finite-dimensional Lie algebras over Q given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from ..exactlin import FreeModule, Vector, span_basis, LinMap, Echelon


class JacobiError(ValueError):
    def __init__(self, triple):
        super().__init__(f"Jacobi identity fails on basis triple {triple}")
        self.triple = triple


class NotNilpotent(ValueError):
    pass


@dataclass(frozen=True)
class LieAlgebraSpec:
    """Lie algebra with basis ``0..dim-1`` and ``[x_i, x_j] = sum c x_k``.

    ``brackets`` holds only pairs ``i < j``; antisymmetry is implied by the
    storage.  ``names`` are used for printing only.
    """

    dim: int
    brackets: dict = field(default_factory=dict)
    names: tuple = ()

    def __post_init__(self):
        clean = {}
        for (i, j), terms in self.brackets.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise ValueError(f"bracket index out of range: {(i, j)}")
            if i == j:
                raise ValueError("diagonal brackets are zero by antisymmetry")
            v = Vector(terms)
            if i > j:
                i, j, v = j, i, -v
            for k in v:
                if not 0 <= k < self.dim:
                    raise ValueError(f"structure constant index out of range: {k}")
            if v:
                clean[(i, j)] = v
        object.__setattr__(self, "brackets", clean)
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i}" for i in range(self.dim)))

    def bracket_basis(self, i: int, j: int) -> Vector:
        if i == j:
            return Vector()
        if i < j:
            return self.brackets.get((i, j), Vector())
        return -self.brackets.get((j, i), Vector())

    def bracket(self, u, v) -> Vector:
        out = Vector()
        for i, a in u.items():
            for j, b in v.items():
                out.axpy(self.bracket_basis(i, j), a * b)
        return out

    @property
    def module(self) -> FreeModule:
        return FreeModule(range(self.dim))


def check_jacobi(g: LieAlgebraSpec) -> None:
    e = [Vector.basis(i) for i in range(g.dim)]
    for i, j, k in combinations(range(g.dim), 3):
        s = g.bracket(e[i], g.bracket(e[j], e[k]))
        s.axpy(g.bracket(e[j], g.bracket(e[k], e[i])))
        s.axpy(g.bracket(e[k], g.bracket(e[i], e[j])))
        if s:
            raise JacobiError((i, j, k))


def lower_central_series(g: LieAlgebraSpec) -> list[list[Vector]]:
    """Bases of g = g^1 ⊇ g^2 = [g, g] ⊇ ... until the series stabilizes."""
    amb = g.module
    series = [[Vector.basis(i) for i in range(g.dim)]]
    while True:
        prev = series[-1]
        gens = [g.bracket(Vector.basis(i), v) for i in range(g.dim) for v in prev]
        nxt = span_basis([v for v in gens if v], amb)
        if len(nxt) == len(prev):
            return series
        series.append(nxt)
        if not nxt:
            return series


def validate_lie(g: LieAlgebraSpec):
    """Returns ``(True, class)`` or ``(True, "not nilpotent")``.

    The class is the number of nonzero terms of the lower central series
    (abelian algebras have class 1; the zero algebra has class 0).
    """
    check_jacobi(g)
    series = lower_central_series(g)
    if series[-1]:
        return True, "not nilpotent"
    return True, len(series) - 1


def _dim_span(vectors, amb):
    return len(span_basis(vectors, amb))


def lcs_weights(g: LieAlgebraSpec) -> tuple[int, ...]:
    """Weight of each basis vector: the largest k with x_i in g^k.

    Raises if the basis is not adapted to the lower central series, since
    then monomial weights would not describe the augmentation-ideal
    filtration of the enveloping algebra.  Use :func:`adapt_basis` first.
    """
    ok, cls = validate_lie(g)
    if cls == "not nilpotent":
        raise NotNilpotent("weights need a nilpotent Lie algebra")
    amb = g.module
    series = lower_central_series(g)
    weights = []
    for i in range(g.dim):
        w = 1
        for k in range(1, len(series)):
            sub = series[k]
            if _dim_span(sub + [Vector.basis(i)], amb) == len(sub):
                w = k + 1
        weights.append(w)
    for k, sub in enumerate(series[:-1], start=1):
        spanned = [Vector.basis(i) for i in range(g.dim) if weights[i] >= k]
        if len(spanned) != len(sub) or _dim_span(spanned + sub, amb) != len(sub):
            raise ValueError("basis is not adapted to the lower central series; use adapt_basis")
    return tuple(weights)


def adapt_basis(g: LieAlgebraSpec):
    """Change to a basis adapted to the lower central series.

    Returns ``(g2, change)`` where ``change[i]`` is the i-th new basis vector
    written in the old basis.  Deeper terms of the series come last, so for
    an already adapted basis ordered by weight this is the identity.
    """
    ok, cls = validate_lie(g)
    if cls == "not nilpotent":
        raise NotNilpotent("adapted bases need a nilpotent Lie algebra")
    amb = g.module
    series = lower_central_series(g)
    blocks = []
    chosen: list[Vector] = []
    for sub in reversed(series[:-1]):
        block = []
        candidates = [Vector.basis(i) for i in range(g.dim)] + list(sub)
        for v in candidates:
            if len(chosen) == len(sub):
                break
            inside = _dim_span(sub + [v], amb) == len(sub)
            if inside and _dim_span(chosen + [v], amb) > len(chosen):
                chosen.append(v)
                block.append(v)
        blocks.append(block)
    new = [v for block in reversed(blocks) for v in block]
    dom = FreeModule(range(len(new)))
    ech = Echelon(LinMap(dom, amb, new))
    brackets = {}
    for i in range(len(new)):
        for j in range(i + 1, len(new)):
            b = g.bracket(new[i], new[j])
            if b:
                brackets[(i, j)] = ech.solve(b)
    names = tuple(f"y{i}" for i in range(len(new)))
    return LieAlgebraSpec(len(new), brackets, names), new


def from_associative(mult, dim: int, names=()) -> LieAlgebraSpec:
    """Commutator Lie algebra of an associative algebra ``mult(i, j) -> Vector``."""
    brackets = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            v = Vector(mult(i, j)) - Vector(mult(j, i))
            if v:
                brackets[(i, j)] = v
    return LieAlgebraSpec(dim, brackets, tuple(names))


def abelian(n: int) -> LieAlgebraSpec:
    return LieAlgebraSpec(n, {}, tuple(f"x{i + 1}" for i in range(n)) if n > 1 else ("x",))


def heisenberg() -> LieAlgebraSpec:
    return LieAlgebraSpec(3, {(0, 1): {2: Fraction(1)}}, ("x", "y", "z"))


def sl2() -> LieAlgebraSpec:
    # basis e, f, h
    return LieAlgebraSpec(3, {(0, 1): {2: 1}, (0, 2): {0: -2}, (1, 2): {1: 2}}, ("e", "f", "h"))
