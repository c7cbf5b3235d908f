"""Finite-dimensional associative algebras with a nilpotent ideal.

:class:`AlgebraSpec` is the raw structure-constant description (basis
``0..dim-1``).  :class:`FiniteAlgebra` rewrites it in a basis adapted to the
powers of the ideal, with the unit as the first basis key, so that the
I-adic filtration and the decomposition ``A = Q.1 + complement`` are both
visible on basis keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from ..exactlin import Echelon, FreeModule, LinMap, Vector, render, span_basis
from .base import AugmentedAlgebra


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraSpec:
    """``e_i e_j = sum mult[(i, j)][k] e_k``; missing pairs multiply to zero."""

    dim: int
    unit: Vector
    mult: dict
    ideal_basis: tuple = ()
    names: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "unit", Vector(self.unit))
        object.__setattr__(self, "mult", {k: Vector(v) for k, v in self.mult.items() if Vector(v)})
        object.__setattr__(self, "ideal_basis", tuple(Vector(v) for v in self.ideal_basis))
        if not self.names:
            object.__setattr__(self, "names", tuple(f"e{i}" for i in range(self.dim)))
        for (i, j), v in self.mult.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim) or any(not 0 <= k < self.dim for k in v):
                raise AlgebraError(f"structure constant out of range at {(i, j)}")

    @property
    def module(self) -> FreeModule:
        return FreeModule(range(self.dim))

    def mul_basis(self, i, j) -> Vector:
        return self.mult.get((i, j), Vector())

    def mul(self, u, v) -> Vector:
        out = Vector()
        for i, a in u.items():
            for j, b in v.items():
                out.axpy(self.mul_basis(i, j), a * b)
        return out


def ideal_powers(spec: AlgebraSpec, gens=None) -> list[list[Vector]]:
    """Bases of I, I^2, ... ending with the first zero power.

    Raises if the ideal is not nilpotent within ``dim + 1`` steps.
    """
    amb = spec.module
    first = span_basis(spec.ideal_basis if gens is None else gens, amb)
    powers = [first]
    while powers[-1]:
        if len(powers) > spec.dim + 1:
            raise AlgebraError("ideal is not nilpotent")
        prods = [spec.mul(u, v) for u in powers[-1] for v in first]
        nxt = span_basis([p for p in prods if p], amb)
        if len(nxt) == len(powers[-1]):
            raise AlgebraError("ideal is not nilpotent")
        powers.append(nxt)
    return powers


def _in_span(basis, v, amb) -> bool:
    return len(span_basis(list(basis) + [v], amb)) == len(span_basis(basis, amb))


def validate_algebra(spec: AlgebraSpec) -> int:
    """Check associativity, unit and ideal laws; return the nilpotency index.

    The index is the least ``m`` with ``I^m = 0`` (1 for the zero ideal).
    """
    e = [Vector.basis(i) for i in range(spec.dim)]
    for i, j, k in iproduct(range(spec.dim), repeat=3):
        lhs = spec.mul(spec.mul(e[i], e[j]), e[k])
        rhs = spec.mul(e[i], spec.mul(e[j], e[k]))
        if lhs != rhs:
            raise AlgebraError(f"associativity fails on basis triple {(i, j, k)}")
    for i in range(spec.dim):
        if spec.mul(spec.unit, e[i]) != e[i] or spec.mul(e[i], spec.unit) != e[i]:
            raise AlgebraError(f"unit law fails on basis element {i}")
    amb = spec.module
    ib = span_basis(spec.ideal_basis, amb)
    for v in ib:
        for i in range(spec.dim):
            for p in (spec.mul(e[i], v), spec.mul(v, e[i])):
                if p and not _in_span(ib, p, amb):
                    raise AlgebraError(f"ideal is not two-sided: basis element {i} times {v!r}")
    return len(ideal_powers(spec)) if ib else 1


class FiniteAlgebra(AugmentedAlgebra):
    """An AlgebraSpec in an ideal-adapted basis.

    Keys are strings.  ``weight(k)`` is the largest ``p`` with the basis
    vector in ``I^p`` (0 outside the ideal).  With ``truncation=N`` products
    are taken in ``A / I^N``.  ``counit`` is only available when
    ``A = Q.1 + I`` (then it reads off the unit coefficient).
    """

    label = "A"

    def __init__(self, spec: AlgebraSpec, truncation: int | None = None, _adapted=None):
        self.spec = spec
        self.truncation = truncation
        if _adapted is None:
            _adapted = _adapt(spec)
        self._adapted = _adapted
        keys, vectors, weights, table = _adapted
        self.keys = keys
        self.vectors = dict(zip(keys, vectors))
        self.weights = dict(zip(keys, weights))
        self.one = keys[0]
        self._table = table
        self.augmented = all(w > 0 for k, w in self.weights.items() if k != self.one)
        self.index = len(ideal_powers(spec)) if spec.ideal_basis else 1

    def with_truncation(self, N):
        return FiniteAlgebra(self.spec, N, self._adapted)

    def weight(self, k) -> int:
        return self.weights[k]

    def mul(self, a, b) -> Vector:
        v = self._table[(a, b)]
        if self.truncation is None:
            return v
        return Vector((k, c) for k, c in v.items() if self.weights[k] < self.truncation)

    def counit(self, a) -> Fraction:
        if not self.augmented:
            raise AlgebraError("algebra is not Q.1 + I; no counit")
        return Fraction(1) if a == self.one else Fraction(0)

    def reduced_basis(self, max_weight=None):
        bound = self.truncation
        if max_weight is not None:
            bound = max_weight if bound is None else min(bound, max_weight)
        return [k for k in self.keys[1:] if bound is None or self.weights[k] < bound]

    def ideal_keys(self):
        return [k for k in self.keys if self.weights[k] >= 1]

    def to_new(self, v) -> Vector:
        """Coordinates of a vector given in the original AlgebraSpec basis."""
        return self._solve(v)

    def _solve(self, v):
        ech = self._ech
        x = ech.solve(Vector(v))
        if not isinstance(x, Vector):
            raise AlgebraError("vector outside the algebra")
        return x

    @property
    def _ech(self):
        try:
            return self.__ech
        except AttributeError:
            keys = self.keys
            self.__ech = Echelon(LinMap(FreeModule(keys), self.spec.module, [self.vectors[k] for k in keys]))
            return self.__ech

    def from_new(self, v) -> Vector:
        out = Vector()
        for k, c in v.items():
            out.axpy(self.vectors[k], c)
        return out


def _pick_complement(target_basis, sub_basis, candidates, amb):
    """Vectors from candidates extending sub_basis to a basis of span(target)."""
    chosen = list(sub_basis)
    picked = []
    goal = len(target_basis)
    for v in candidates:
        if len(chosen) == goal:
            break
        if not _in_span(target_basis, v, amb):
            continue
        if len(span_basis(chosen + [v], amb)) > len(chosen):
            chosen.append(v)
            picked.append(v)
    return picked


def _adapt(spec: AlgebraSpec):
    amb = spec.module
    std = [Vector.basis(i) for i in range(spec.dim)]
    powers = ideal_powers(spec) if spec.ideal_basis else [[]]
    ideal = powers[0]
    levels = []  # (weight, vectors)
    # unit, then the rest of a complement of the ideal
    whole = std
    base = _pick_complement(whole, ideal, [spec.unit] + std, amb)
    if not base or base[0] != spec.unit:
        raise AlgebraError("the unit lies in the ideal")
    levels.append((0, base))
    for p in range(len(powers) - 1):
        cands = list(spec.ideal_basis) + std + list(powers[p])
        levels.append((p + 1, _pick_complement(powers[p], powers[p + 1], cands, amb)))
    vectors, weights = [], []
    for w, vs in levels:
        for v in vs:
            vectors.append(v)
            weights.append(w)
    keys = []
    for i, v in enumerate(vectors):
        if i == 0:
            name = "1"
        elif len(v) == 1 and next(iter(v.values())) == 1:
            name = spec.names[next(iter(v))]
        else:
            name = "(" + "+".join(f"{render(c)}{spec.names[k]}" for k, c in sorted(v.items())) + ")"
        while name in keys:
            name += "'"
        keys.append(name)
    ech = Echelon(LinMap(FreeModule(keys), amb, vectors))
    table = {}
    for (ka, va), (kb, vb) in iproduct(zip(keys, vectors), repeat=2):
        x = ech.solve(spec.mul(va, vb))
        if not isinstance(x, Vector):
            raise AlgebraError("product left the algebra")
        table[(ka, kb)] = x
    return keys, vectors, weights, table


def exp_log(alg: FiniteAlgebra, a, inverse: bool = False) -> Vector:
    """``exp(a)`` for ``a`` in the ideal, or ``log(a)`` for ``a`` in ``1 + ideal``.

    Both series are finite by nilpotency; vectors use the keys of ``alg``.
    """
    a = Vector(a)
    if not inverse:
        if any(alg.weight(k) == 0 for k in a):
            raise AlgebraError("exp is only defined on the nilpotent ideal")
        out = Vector.basis(alg.one)
        term = Vector.basis(alg.one)
        k = 1
        while True:
            term = alg.mul_vec(term, a).scale(Fraction(1, k))
            if not term:
                return out
            out.axpy(term)
            k += 1
    u = a - Vector.basis(alg.one)
    if any(alg.weight(k) == 0 for k in u):
        raise AlgebraError("log is only defined on 1 + the nilpotent ideal")
    out = Vector()
    power = Vector.basis(alg.one)
    k = 1
    while True:
        power = alg.mul_vec(power, u)
        if not power:
            return out
        out.axpy(power, Fraction((-1) ** (k + 1), k))
        k += 1


def dual_numbers() -> AlgebraSpec:
    """Q[eps]/eps^2 with the ideal (eps)."""
    return AlgebraSpec(2, {0: 1}, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}},
                       ({1: 1},), ("1", "eps"))


def rationals() -> AlgebraSpec:
    return AlgebraSpec(1, {0: 1}, {(0, 0): {0: 1}}, (), ("1",))


def matrix_algebra(n: int, base: AlgebraSpec | None = None) -> AlgebraSpec:
    """M_n(A) with basis (i, j, k) flattened; ideal M_n(I)."""
    base = base or rationals()
    d = base.dim

    def idx(i, j, k):
        return (i * n + j) * d + k

    mult = {}
    names = []
    for i in range(n):
        for j in range(n):
            for k in range(d):
                names.append(f"{base.names[k]}E{i + 1}{j + 1}")
    for i, j, l in iproduct(range(n), repeat=3):
        for a, b in iproduct(range(d), repeat=2):
            p = base.mul_basis(a, b)
            if p:
                mult[(idx(i, j, a), idx(j, l, b))] = Vector({idx(i, l, k): c for k, c in p.items()})
    unit = Vector()
    for i in range(n):
        for k, c in base.unit.items():
            unit.add_term(idx(i, i, k), c)
    ideal = [Vector({idx(i, j, k): c for k, c in v.items()}) for i in range(n) for j in range(n)
             for v in base.ideal_basis]
    return AlgebraSpec(n * n * d, unit, mult, tuple(ideal), tuple(names))
