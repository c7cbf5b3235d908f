"""Chevalley-Eilenberg complexes and the maps e, psi, theta.

Wedge monomials are sorted index tuples.  The differential uses the usual
sign:

    d(x_1 ^ ... ^ x_n) = sum_{i<j} (-1)^(i+j) [x_i, x_j] ^ x_1 ^ ..^ x_i^ .. x_j^ .. ^ x_n

and on the resolution ``U (x) ^g`` one adds ``sum_i (-1)^(i+1) a x_i (x) (... x_i^ ...)``.
With LCS weights and a truncation N every object is cut at total weight N.
"""

from __future__ import annotations

from itertools import combinations, permutations

from ..exactlin import Vector
from ..algebra.lie import LieAlgebraSpec, lcs_weights, validate_lie
from ..complexes.core import FunctionComplex, HNComplex, lin
from ..hopf import EnvelopingHopf


def perm_sign(seq) -> int:
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def wedge_normal(indices) -> tuple:
    """``(sign, sorted tuple)`` for a wedge of basis indices; sign 0 on repeats."""
    if len(set(indices)) < len(indices):
        return 0, None
    return perm_sign(indices), tuple(sorted(indices))


class CE:
    """``(^g, d)`` and ``(U g (x) ^g, d')`` for a nilpotent (or any, untruncated) g."""

    def __init__(self, lie: LieAlgebraSpec, truncation: int | None = None, U: EnvelopingHopf | None = None):
        self.lie = lie
        ok, cls = validate_lie(lie)
        self.weights = lcs_weights(lie) if cls != "not nilpotent" else (1,) * lie.dim
        self.N = truncation
        self.U = U or EnvelopingHopf(lie, truncation)

    def wweight(self, I) -> int:
        return sum(self.weights[i] for i in I)

    def _ok(self, w) -> bool:
        return self.N is None or w < self.N

    # -- the quotient complex ^g ------------------------------------------------

    def wedge_basis(self, n):
        return [I for I in combinations(range(self.lie.dim), n) if self._ok(self.wweight(I))]

    def d(self, I) -> Vector:
        out = Vector()
        n = len(I)
        for a in range(n):
            for b in range(a + 1, n):
                sign = -1 if (a + b) % 2 else 1  # (-1)^((a+1)+(b+1))
                rest = I[:a] + I[a + 1:b] + I[b + 1:]
                for k, c in self.lie.bracket_basis(I[a], I[b]).items():
                    s, J = wedge_normal((k,) + rest)
                    if s and self._ok(self.wweight(J)):
                        out.add_term(J, sign * s * c)
        return out

    def complex(self) -> FunctionComplex:
        return FunctionComplex(self.wedge_basis, self.d, name="^g")

    # -- the resolution U (x) ^g ------------------------------------------------

    def resolution_basis(self, n):
        U = self.U
        out = []
        for I in self.wedge_basis(n):
            wI = self.wweight(I)
            bound = None if self.N is None else self.N - wI
            for m in U.basis(bound):
                out.append((m, I))
        return out

    def dprime(self, key) -> Vector:
        m, I = key
        U = self.U
        out = Vector()
        for a, i in enumerate(I):
            rest = I[:a] + I[a + 1:]
            for k, c in U.mul(m, U.generator(i)).items():
                if self._ok(U.weight(k) + self.wweight(rest)):
                    out.add_term((k, rest), c if a % 2 == 0 else -c)
        for J, c in self.d(I).items():
            if self._ok(U.weight(m) + self.wweight(J)):
                out.add_term((m, J), c)
        return out

    def resolution(self) -> FunctionComplex:
        return FunctionComplex(self.resolution_basis, self.dprime, name="U(x)^g")

    def act(self, a, v) -> Vector:
        """Left U-action on the resolution."""
        out = Vector()
        for (m, I), c in v.items():
            for k, x in self.U.mul(a, m).items():
                if self._ok(self.U.weight(k) + self.wweight(I)):
                    out.add_term((k, I), c * x)
        return out

    def reduce(self, v) -> Vector:
        """``k (x)_U -``: resolution -> ^g."""
        out = Vector()
        for (m, I), c in v.items():
            e = self.U.counit(m)
            if e:
                out.add_term(I, c * e)
        return out

    # -- antisymmetrization -------------------------------------------------------

    def e(self, I) -> Vector:
        """``e: ^n g -> B_n(U g)``."""
        gens = [self.U.generator(i) for i in I]
        out = Vector()
        for p in permutations(range(len(I))):
            out.add_term(tuple(gens[i] for i in p), perm_sign(p))
        return out

    def one_e(self, key) -> Vector:
        """``1 (x) e: U (x) ^g -> E(U g)``."""
        m, I = key
        return Vector(((m,) + w, c) for w, c in self.e(I).items())


class PsiTheta:
    """psi, psi', theta and B.theta for a truncated enveloping algebra."""

    def __init__(self, ce: CE, bar, cyclic, P: int):
        self.ce, self.bar, self.cyc, self.P = ce, bar, cyclic, P

    def psi(self, I) -> Vector:
        """``psi(x) = (..., 0, e(x))`` in HN(M(U g))."""
        return HNComplex.lift(self.ce.e(I), 0)

    def psi_prime(self, key) -> Vector:
        return HNComplex.lift(self.ce.one_e(key), 0)

    def theta(self, I) -> Vector:
        """``theta(x_0 ^ ... ^ x_n) = x_0 (x) e(x_1 ^ ... ^ x_n)`` as a representative in C_n(U)."""
        if not I:
            return Vector()
        x0 = self.ce.U.generator(I[0])
        return Vector(((x0,) + w, c) for w, c in self.ce.e(I[1:]).items())

    def B_theta(self, I) -> Vector:
        """``B[theta x] = (..., 0, B theta x)`` in HN(C(U)_norm)."""
        return HNComplex.lift(lin(self.cyc.B_norm, self.theta(I)), 0)

    def tau_psi(self, I) -> Vector:
        from .tau import tau_norm

        return HNComplex.lift(lin(lambda w: tau_norm(self.bar, w), self.ce.e(I)), 0)

    def taux(self, I) -> Vector:
        """Closed form ``1 (x) e(x)`` for tau psi in the normalized complex."""
        one = self.bar.one
        return HNComplex.lift(Vector(((one,) + w, c) for w, c in self.ce.e(I).items()), 0)
