"""Triangular block algebras T_n^sigma(A, I) inside M_n(A).

An entry (i, j) is unrestricted when i < j in the partial order sigma and
must lie in I otherwise.  The block algebra is nilpotent, so Q + T is an
augmented algebra whose augmentation ideal T carries the T-adic filtration.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from ..exactlin import Echelon, FreeModule, LinMap, Vector, span_basis
from .assoc import AlgebraError, AlgebraSpec, FiniteAlgebra, matrix_algebra, validate_algebra
from .lie import LieAlgebraSpec, adapt_basis, validate_lie
from .malcev import MalcevGroup


@dataclass(frozen=True)
class TriangularSpec:
    n: int
    sigma: frozenset  # pairs (i, j), 1-based, meaning i < j
    base: AlgebraSpec

    def __post_init__(self):
        object.__setattr__(self, "sigma", frozenset(tuple(p) for p in self.sigma))

    def validate(self) -> None:
        for i, j in self.sigma:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise AlgebraError(f"sigma pair {(i, j)} outside 1..{self.n}")
            if i == j:
                raise AlgebraError(f"sigma is not irreflexive at {i}")
            if (j, i) in self.sigma:
                raise AlgebraError(f"sigma is not antisymmetric at {(i, j)}")
        for (i, j), (k, l) in iproduct(self.sigma, repeat=2):
            if j == k and (i, l) not in self.sigma:
                raise AlgebraError(f"sigma is not transitive: {(i, j)}, {(k, l)}")


class TriangularBlock:
    """Q + T, its Lie algebra t (LCS-adapted basis) and the group exp t.

    Attributes
    ----------
    algebra : FiniteAlgebra for Q + T, filtered by powers of T.
    index : least m with T^m = 0.
    matrix : dict key -> {(i, j): Vector over base basis}, the embedding in M_n(A).
    lie : LieAlgebraSpec of t in an adapted basis.
    lie_to_alg : list, image in ``algebra`` of each basis vector of t.
    """

    def __init__(self, spec: TriangularSpec):
        spec.validate()
        base_index = validate_algebra(spec.base)
        self.spec = spec
        n, base = spec.n, spec.base
        d = base.dim
        mat = matrix_algebra(n, base)
        amb = mat.module

        def idx(i, j, k):
            return (i * n + j) * d + k

        ideal_span = span_basis(base.ideal_basis, base.module)
        gens = []
        for i, j in iproduct(range(n), repeat=2):
            if (i + 1, j + 1) in spec.sigma:
                entries = [Vector.basis(k) for k in range(d)]
            else:
                entries = ideal_span
            for v in entries:
                gens.append(Vector({idx(i, j, k): c for k, c in v.items()}))
        tbasis = span_basis(gens, amb)
        self.dim_T = len(tbasis)
        # Q + T as a standalone AlgebraSpec: basis = unit, then tbasis
        vecs = [mat.unit] + tbasis
        ech = Echelon(LinMap(FreeModule(range(len(vecs))), amb, vecs))
        mult = {}
        for a, b in iproduct(range(len(vecs)), repeat=2):
            x = ech.solve(mat.mul(vecs[a], vecs[b]))
            if not isinstance(x, Vector):
                raise AlgebraError("block algebra is not closed under multiplication")
            mult[(a, b)] = x
        names = ["1"] + [_matrix_name(v, mat.names) for v in tbasis]
        sub = AlgebraSpec(len(vecs), {0: 1}, mult, tuple(Vector.basis(a) for a in range(1, len(vecs))),
                          tuple(names))
        self.index = validate_algebra(sub) if tbasis else 1
        if tbasis and self.index > n * base_index:
            raise AlgebraError("nilpotency index exceeds the expected bound")
        self.subspec = sub
        self.algebra = FiniteAlgebra(sub)
        self.base_algebra = FiniteAlgebra(base)
        # embedding of each key of Q + T in M_n(A), as entries over the base keys
        self.matrix = {}
        for key in self.algebra.keys:
            in_sub = self.algebra.vectors[key]
            flat = Vector()
            for a, c in in_sub.items():
                flat.axpy(vecs[a], c)
            entries = {}
            for f, c in flat.items():
                cell, k = divmod(f, d)
                i, j = divmod(cell, n)
                entries.setdefault((i, j), Vector()).add_term(k, c)
            self.matrix[key] = {ij: self.base_algebra.to_new(v) for ij, v in entries.items() if v}
        # Lie algebra of T with commutator bracket, on the ideal keys
        tkeys = self.algebra.ideal_keys()
        pos = {k: i for i, k in enumerate(tkeys)}
        brackets = {}
        for a in range(len(tkeys)):
            for b in range(a + 1, len(tkeys)):
                v = self.algebra.mul(tkeys[a], tkeys[b]) - self.algebra.mul(tkeys[b], tkeys[a])
                if v:
                    brackets[(a, b)] = Vector((pos[k], c) for k, c in v.items())
        raw = LieAlgebraSpec(len(tkeys), brackets, tuple(tkeys))
        validate_lie(raw)
        if tkeys:
            lie, change = adapt_basis(raw)
            lie = LieAlgebraSpec(lie.dim, lie.brackets, tuple(_combo_name(v, tkeys) for v in change))
        else:
            lie, change = raw, []
        self.lie = lie
        self.lie_to_alg = [Vector((tkeys[i], c) for i, c in v.items()) for v in change]

    def group(self) -> MalcevGroup:
        return MalcevGroup(self.lie)

    def describe(self) -> dict:
        return {"n": self.spec.n, "sigma": sorted(self.spec.sigma), "dim_T": self.dim_T,
                "nilpotency_index": self.index, "basis": list(self.algebra.keys)}


def _matrix_name(v, names):
    if len(v) == 1 and next(iter(v.values())) == 1:
        return names[next(iter(v))]
    return "(" + "+".join(f"{c}{names[k]}" for k, c in sorted(v.items())) + ")"


def _combo_name(v, keys):
    if len(v) == 1 and next(iter(v.values())) == 1:
        return keys[next(iter(v))]
    return "(" + "+".join(f"{c}{keys[k]}" for k, c in sorted(v.items())) + ")"


def build_triangular(spec: TriangularSpec) -> TriangularBlock:
    return TriangularBlock(spec)
