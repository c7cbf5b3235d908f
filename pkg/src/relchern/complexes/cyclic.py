"""The canonical cyclic module C(A) of an algebra, its relative and Connes variants."""

from __future__ import annotations

from fractions import Fraction

from ..exactlin import Vector
from .core import FunctionComplex, MixedComplex, lin
from .tensors import project_normalized, tensor_basis


class CyclicAlgebraComplex:
    """C_n(A) = A^(n+1) with Hochschild faces and the signed cyclic shift."""

    def __init__(self, alg):
        self.alg = alg
        self.one = alg.one
        self.N = alg.truncation
        self._cache = {}

    def ok(self, t) -> bool:
        return self.N is None or sum(self.alg.weight(a) for a in t) < self.N

    def prune(self, v):
        if self.N is None:
            return Vector(v)
        return Vector((t, c) for t, c in v.items() if self.ok(t))

    # -- cyclic module structure ----------------------------------------------

    def face(self, t, i) -> Vector:
        n = len(t) - 1
        if i < n:
            prod = self.alg.mul(t[i], t[i + 1])
            return self.prune(Vector((t[:i] + (k,) + t[i + 2:], c) for k, c in prod.items()))
        prod = self.alg.mul(t[n], t[0])
        return self.prune(Vector(((k,) + t[1:n], c) for k, c in prod.items()))

    def degeneracy(self, t, j) -> Vector:
        return Vector.basis(t[: j + 1] + (self.one,) + t[j + 1:])

    def t_op(self, t) -> Vector:
        n = len(t) - 1
        return Vector({(t[-1],) + t[:-1]: -1 if n % 2 else 1})

    def b(self, t) -> Vector:
        key = ("b", t)
        if key not in self._cache:
            out = Vector()
            for i in range(len(t) if len(t) > 1 else 0):
                out.axpy(self.face(t, i), -1 if i % 2 else 1)
            self._cache[key] = out
        return self._cache[key]

    def norm(self, t) -> Vector:
        out = Vector()
        v = Vector.basis(t)
        for _ in range(len(t)):
            out.axpy(v)
            v = lin(self.t_op, v)
        return out

    def B(self, t) -> Vector:
        """Unnormalized Connes operator ``(1 - t) s N`` with ``s(x) = 1 (x) x``."""
        v = Vector(((self.one,) + u, c) for u, c in self.norm(t).items())
        return v - lin(self.t_op, v)

    def B_norm(self, t) -> Vector:
        """``sum_i (-1)^(n i) 1 (x) a_i (x) ... (x) a_n (x) a_0 (x) ... (x) a_(i-1)``."""
        n = len(t) - 1
        out = Vector()
        for i in range(n + 1):
            u = (self.one,) + t[i:] + t[:i]
            if self.one in u[1:] or not self.ok(u):
                continue
            out.add_term(u, -1 if (n * i) % 2 else 1)
        return out

    # -- bases ---------------------------------------------------------------

    def basis(self, n, normalized=True, relative=False, bound=None):
        keys = tensor_basis(self.alg, n + 1, 1 if normalized else n + 1, bound)
        if relative:
            keys = [t for t in keys if any(self.alg.weight(a) >= 1 for a in t)]
        return keys

    def mixed(self, normalized=True, relative=False, bound=None) -> MixedComplex:
        if normalized:
            return MixedComplex(lambda n: self.basis(n, True, relative, bound),
                                lambda t: project_normalized(self.alg, self.b(t)),
                                self.B_norm, name="C(A)_norm" + (" rel" if relative else ""))
        return MixedComplex(lambda n: self.basis(n, False, relative, bound), self.b, self.B,
                            name="C(A)" + (" rel" if relative else ""))

    def hochschild(self, normalized=True, relative=False):
        return self.mixed(normalized, relative).hochschild()

    # -- Connes' quotient C^lambda = C / (1 - t) -------------------------------

    def connes_equal(self, u, v) -> bool:
        """``u == v`` in ``C^lambda``: compare images under the norm map.

        Over Q the norm ``N`` induces an injection of ``coker(1 - t)`` into
        ``C``, since ``ker N = im(1 - t)`` for a cyclic group action.
        """
        return lin(self.norm, Vector(u) - Vector(v)) == Vector()

    def connes_representative(self, v) -> Vector:
        """Canonical coset representative ``N(v) / (n + 1)``."""
        out = Vector()
        for t, c in Vector(v).items():
            out.axpy(self.norm(t), Fraction(c, len(t)))
        return out

    def connes_complex(self, normalized=False, relative=False):
        """``C^lambda`` as a complex: basis = orbit representatives of t.

        Each basis element is the cyclic orbit of a tensor (one chosen
        tensor per orbit, the one with the least rendering); orbits on which
        ``t`` acts with a sign obstruction are zero in the quotient.
        """
        from ..exactlin import render

        def orbit_rep(t):
            n = len(t)
            rots = [t[i:] + t[:i] for i in range(n)]
            return min(rots, key=render)

        def class_of(v):
            out = Vector()
            for t, c in v.items():
                rep = orbit_rep(t)
                # express t as +-rep via powers of t
                u = Vector.basis(rep)
                for _ in range(len(t)):
                    if t in u:
                        out.add_term(rep, c * u[t])
                        break
                    u = lin(self.t_op, u)
            return Vector((r, x) for r, x in out.items() if r in alive_set(len(r) - 1))

        alive_cache = {}

        def alive_set(n):
            if n not in alive_cache:
                reps = set()
                for t in self.basis(n, normalized, relative):
                    r = orbit_rep(t)
                    if r in reps:
                        continue
                    if self.norm(r):
                        reps.add(r)
                alive_cache[n] = reps
            return alive_cache[n]

        def basis(n):
            return sorted(alive_set(n), key=render)

        def d(t):
            return class_of(self.b(t) if not normalized else project_normalized(self.alg, self.b(t)))

        cx = FunctionComplex(basis, d, name="C^lambda(A)")
        cx.class_of = class_of
        return cx


def build_canonical_C(alg) -> CyclicAlgebraComplex:
    return CyclicAlgebraComplex(alg)
