"""Generalized trace, fusion, and the maps j and rho for a triangular block.

Matrices are sparse dicts ``{(i, j): Vector over base-algebra keys}`` with
0-based indices.  The generalized trace contracts indices cyclically:

    tr(m^0 (x) ... (x) m^k) = sum m^0_(i0 i1) (x) m^1_(i1 i2) (x) ... (x) m^k_(ik i0)
"""

from __future__ import annotations

from fractions import Fraction

from ..exactlin import Vector
from ..algebra.assoc import exp_log
from ..algebra.triangular import TriangularBlock
from ..complexes.core import lin


class SizeMismatch(ValueError):
    pass


def trace_matrices(mats, n: int | None = None) -> Vector:
    """Generalized trace of a tensor of matrices (a list of sparse dicts)."""
    if n is not None:
        for m in mats:
            for i, j in m:
                if not (0 <= i < n and 0 <= j < n):
                    raise SizeMismatch(f"entry {(i, j)} outside {n}x{n}")
    rows = []
    for m in mats:
        by_row = {}
        for (i, j), v in m.items():
            by_row.setdefault(i, []).append((j, v))
        rows.append(by_row)
    out = Vector()
    starts = {i for i, _ in mats[0]} if mats else set()

    def rec(pos, i0, cur, acc):
        if pos == len(mats):
            if cur == i0:
                for t, c in acc.items():
                    out.add_term(t, c)
            return
        for j, v in rows[pos].get(cur, ()):
            nxt = {t + (k,): c * x for t, c in acc.items() for k, x in v.items()}
            rec(pos + 1, i0, j, nxt)

    for i0 in sorted(starts):
        rec(0, i0, i0, {(): Fraction(1)})
    return out


class BlockMaps:
    """tr, fusion, j and rho for one block ``T = T_n^sigma(A, I)``."""

    def __init__(self, block: TriangularBlock, U=None, N: int | None = None):
        self.block = block
        self.lam = block.algebra
        self.A = block.base_algebra
        self.N = N
        self.U = U
        self._j = {}

    # -- trace ------------------------------------------------------------------

    def trace(self, t) -> Vector:
        """Trace of a tensor of Q + T keys, as a Vector of A-key tensors."""
        return trace_matrices([self.block.matrix[k] for k in t], self.block.spec.n)

    def trace_vec(self, v) -> Vector:
        return lin(self.trace, v)

    # -- fusion (group elements as matrices) --------------------------------------

    def group_element(self, coords) -> Vector:
        """``exp(sum c_i x_i)`` in Q + T for exp-coordinates over the adapted basis of t."""
        x = Vector()
        for c, v in zip(coords, self.block.lie_to_alg):
            x.axpy(v, c)
        if not x:
            return Vector.basis(self.lam.one)
        return exp_log(self.lam, x)

    def fusion(self, coords) -> dict:
        """The matrix of a group element of T, as ``{(i, j): Vector over A keys}``."""
        out = {}
        for k, c in self.group_element(coords).items():
            for ij, v in self.block.matrix[k].items():
                out.setdefault(ij, Vector()).axpy(v, c)
        return {ij: v for ij, v in out.items() if v}

    # -- j: U t -> Q + T ----------------------------------------------------------

    def j_key(self, m) -> Vector:
        """Image of a PBW monomial: the ordered product of generator images."""
        if m not in self._j:
            acc = Vector.basis(self.lam.one)
            for i, a in enumerate(m):
                for _ in range(a):
                    acc = self.lam.mul_vec(acc, self.block.lie_to_alg[i])
            self._j[m] = acc
        return self._j[m]

    def j_tensor(self, t) -> Vector:
        """Factorwise j on a tensor, dropping terms of weight >= N."""
        parts = {(): (Fraction(1), 0)}
        for m in t:
            img = self.j_key(m)
            nxt = {}
            for tt, (c, w) in parts.items():
                for k, x in img.items():
                    w2 = w + self.lam.weight(k)
                    if self.N is not None and w2 >= self.N:
                        continue
                    key = tt + (k,)
                    old = nxt.get(key, (0, w2))[0]
                    nxt[key] = (old + c * x, w2)
            parts = nxt
        return Vector((tt, c) for tt, (c, _) in parts.items())

    def j_vec(self, v) -> Vector:
        return lin(self.j_tensor, v)

    # -- rho = j . theta -------------------------------------------------------------

    def rho(self, ce, I) -> Vector:
        """``rho(x_0 ^ ... ^ x_n) = j(x_0) (x) j(e(x_1 ^ ... ^ x_n))`` in C_n(Q + T)."""
        if not I:
            return Vector()
        x0 = ce.U.generator(I[0])
        return self.j_vec(Vector(((x0,) + w, c) for w, c in ce.e(I[1:]).items()))
