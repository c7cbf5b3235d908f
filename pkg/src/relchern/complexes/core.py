"""Chain complexes, mixed complexes and the truncated negative cyclic complex.

A complex is described by a finite basis in each degree (``basis(n)``) and a
differential evaluated on basis keys (``d(key)``).  Matrices are built on
demand and cached.  ``HNComplex`` uses keys ``(i, w)`` where ``w`` is a basis
key of ``M_{n+2i}``; the column index ``i`` runs over ``0..P``.
"""

from __future__ import annotations

from typing import Callable

from ..exactlin import FreeModule, LinMap, QuotientSpace, Vector, render


def lin(f: Callable, v) -> Vector:
    """Linear extension of a key function to a Vector."""
    out = Vector()
    for k, c in v.items():
        out.axpy(f(k), c)
    return out


class ChainComplex:
    """Finite-dimensional in each degree; ``basis(n)`` is empty for n < 0."""

    name = "complex"

    def basis(self, n: int) -> list:
        raise NotImplementedError

    def d(self, key) -> Vector:
        raise NotImplementedError

    def d_vec(self, v) -> Vector:
        return lin(self.d, v)

    def module(self, n: int) -> FreeModule:
        cache = self.__dict__.setdefault("_modules", {})
        if n not in cache:
            cache[n] = FreeModule(self.basis(n) if n >= 0 else [])
        return cache[n]

    def d_matrix(self, n: int) -> LinMap:
        """Differential ``C_n -> C_{n-1}`` as a LinMap."""
        cache = self.__dict__.setdefault("_dmats", {})
        if n not in cache:
            dom, cod = self.module(n), self.module(n - 1)
            cache[n] = LinMap(dom, cod, [self.d(k) if n > 0 else Vector() for k in dom.basis])
        return cache[n]


class FunctionComplex(ChainComplex):
    def __init__(self, basis_fn, d_fn, name="complex"):
        self._basis = basis_fn
        self._d = d_fn
        self.name = name

    def basis(self, n):
        return list(self._basis(n)) if n >= 0 else []

    def d(self, key):
        return self._d(key)


class MixedComplex:
    """``(M, b, B)`` on finite bases; b lowers and B raises the degree."""

    def __init__(self, basis_fn, b_fn, B_fn, name="mixed"):
        self._basis = basis_fn
        self.b = b_fn
        self.B = B_fn
        self.name = name
        self._cache = {}

    def basis(self, n):
        if n < 0:
            return []
        if n not in self._cache:
            self._cache[n] = list(self._basis(n))
        return self._cache[n]

    def hochschild(self) -> ChainComplex:
        return FunctionComplex(self.basis, self.b, name=f"HH({self.name})")

    def check_axioms(self, degree_cap: int) -> dict:
        """Exact check of b^2 = 0, B^2 = 0 and bB + Bb = 0 on the basis."""
        out = {}
        for label, f in (("b^2", lambda k: lin(self.b, self.b(k))),
                         ("B^2", lambda k: lin(self.B, self.B(k))),
                         ("bB+Bb", lambda k: lin(self.b, self.B(k)) + lin(self.B, self.b(k)))):
            witness = None
            for n in range(degree_cap + 1):
                for k in self.basis(n):
                    if f(k):
                        witness = k
                        break
                if witness is not None:
                    break
            out[label] = {"ok": witness is None, "witness": None if witness is None else render(witness)}
        return out


class HNComplex(ChainComplex):
    """Column-truncated total complex of the (b, B) left half-plane bicomplex.

    Degree-n component: ``prod_{i=0..P} M_{n+2i}``; the differential sends
    ``(i, w)`` to ``(i, b w) + (i+1, B w)``, dropping column ``P+1``.  This
    is the quotient of the full complex by the columns beyond ``P``, so it
    is an honest complex and every coordinate can be compared.
    """

    def __init__(self, mixed: MixedComplex, P: int):
        if P < 0:
            raise ValueError("column cap must be >= 0")
        self.mixed = mixed
        self.P = P
        self.name = f"HN({mixed.name})/P={P}"

    def basis(self, n):
        if n < 0:
            return []
        return [(i, w) for i in range(self.P + 1) for w in self.mixed.basis(n + 2 * i)]

    def d(self, key):
        i, w = key
        out = Vector(((i, k), c) for k, c in self.mixed.b(w).items())
        if i + 1 <= self.P:
            out.axpy(Vector(((i + 1, k), c) for k, c in self.mixed.B(w).items()))
        return out

    @staticmethod
    def pi(v) -> Vector:
        """Projection to the column of index 0 (the Hochschild complex)."""
        return Vector((w, c) for (i, w), c in v.items() if i == 0)

    @staticmethod
    def lift(v, column: int = 0) -> Vector:
        return Vector(((column, w), c) for w, c in v.items())

    def coordinates(self, v) -> dict:
        out = {}
        for (i, w), c in v.items():
            out.setdefault(i, Vector()).add_term(w, c)
        return out


class QuotientComplex(ChainComplex):
    """``C / K`` where ``K(n)`` returns spanning vectors of a subcomplex."""

    def __init__(self, ambient: ChainComplex, sub_fn, name=None):
        self.ambient = ambient
        self._sub = sub_fn
        self._q = {}
        self.name = name or f"{ambient.name}/K"

    def quotient(self, n) -> QuotientSpace:
        if n not in self._q:
            self._q[n] = QuotientSpace(self.ambient.module(n), self._sub(n) if n >= 0 else [])
        return self._q[n]

    def basis(self, n):
        if n < 0:
            return []
        keys = list(self.quotient(n).basis.basis)
        deg = self.__dict__.setdefault("_deg", {})
        for k in keys:
            deg[k] = n
        return keys

    def project(self, n, v) -> Vector:
        return self.quotient(n).project(v)

    def d(self, key):
        n = self._deg[key]
        return self.project(n - 1, self.ambient.d(key))

    def check_subcomplex(self, degree_cap) -> bool:
        for n in range(1, degree_cap + 1):
            for v in self._sub(n):
                if self.project(n - 1, self.ambient.d_vec(v)):
                    return False
        return True


class ShiftedComplex(ChainComplex):
    """``C[k]``: degree n holds ``C_{n+k}``; the differential changes sign if asked."""

    def __init__(self, inner: ChainComplex, k: int, sign: int = 1):
        self.inner, self.k, self.sign = inner, k, sign
        self.name = f"{inner.name}[{k}]"

    def basis(self, n):
        return self.inner.basis(n + self.k) if n >= 0 else []

    def d(self, key):
        return self.inner.d(key).scale(self.sign)


def homology_table(c: ChainComplex, top: int) -> list[int]:
    """Homology dimensions in degrees ``0..top`` (needs degree top+1)."""
    from ..exactlin import homology_dims

    return [homology_dims(c.d_matrix(n + 1), c.d_matrix(n)) for n in range(top + 1)]
