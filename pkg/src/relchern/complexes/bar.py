"""Bar resolution E(H), bar complex B(H) and the product resolution R(H).

Operators act on tensors (tuples of basis keys) and return Vectors.  For a
truncated Hopf algebra every intermediate expansion is pruned at total
weight ``>= N``; products, coproducts and the antipode never lower the
weight, so the result is exact in the quotient by ``F_N``.

B-level operators are obtained from the H-linear E-level ones by
``B(op)(v) = eps_0(op(1 (x) v))`` where ``eps_0`` applies the counit to the
first factor.
"""

from __future__ import annotations

from fractions import Fraction

from ..exactlin import Vector
from ..hopf import HopfAlgebra, delta_n
from .core import ChainComplex, MixedComplex, lin
from .tensors import project_normalized, tensor_basis


class BarComplex:
    """All cyclic-module structure on E(H), B(H) and R(H) for a Hopf algebra H."""

    def __init__(self, h: HopfAlgebra):
        self.h = h
        self.one = h.one
        self.N = h.truncation
        self._cache = {}

    # -- helpers ---------------------------------------------------------------

    def _memo(self, name, key, fn):
        k = (name, key)
        c = self._cache
        if k not in c:
            c[k] = fn()
        return c[k]

    def ok(self, t) -> bool:
        return self.N is None or sum(self.h.weight(a) for a in t) < self.N

    def prune(self, v) -> Vector:
        if self.N is None:
            return v
        return Vector((t, c) for t, c in v.items() if self.ok(t))

    def _expansions(self, t, nlegs):
        """Yield (legs, coeff): legs[i] is a tuple of nlegs[i] keys from t[i]."""
        h = self.h
        N = self.N
        options = [list(delta_n(h, a, m).items()) for a, m in zip(t, nlegs)]
        weights = [[sum(h.weight(x) for x in legs) for legs, _ in opt] for opt in options]

        def rec(i, acc, coeff, wt):
            if i == len(options):
                yield tuple(acc), coeff
                return
            for (legs, c), w in zip(options[i], weights[i]):
                if N is not None and wt + w >= N:
                    continue
                acc.append(legs)
                yield from rec(i + 1, acc, coeff * c, wt + w)
                acc.pop()

        yield from rec(0, [], Fraction(1), 0)

    def _factor(self, legs, spec) -> Vector:
        outer_s, items = spec
        h = self.h
        acc = Vector.basis(self.one)
        for pos, leg, inner_s in items:
            k = legs[pos][leg]
            x = h.antipode(k) if inner_s else Vector.basis(k)
            acc = h.mul_vec(acc, x)
            if not acc:
                return acc
        if outer_s:
            acc = lin(h.antipode, acc)
        return acc

    def sweedler(self, t, nlegs, layout, sign=1) -> Vector:
        """Assemble ``sum sign * factor_0 (x) ... (x) factor_m`` over Sweedler legs."""
        h = self.h
        out = Vector()
        for legs, c in self._expansions(t, nlegs):
            parts = {(): c * sign}
            wt0 = {(): 0}
            for spec in layout:
                f = self._factor(legs, spec)
                nxt, nw = {}, {}
                for tt, x in parts.items():
                    for k, y in f.items():
                        w = wt0[tt] + h.weight(k)
                        if self.N is not None and w >= self.N:
                            continue
                        key = tt + (k,)
                        nxt[key] = nxt.get(key, 0) + x * y
                        nw[key] = w
                parts, wt0 = nxt, nw
                if not parts:
                    break
            for tt, x in parts.items():
                out.add_term(tt, x)
        return out

    # -- E(H): faces, degeneracies, boundary, extra degeneracy ------------------

    def face(self, t, i) -> Vector:
        n = len(t) - 1
        if i < n:
            prod = self.h.mul(t[i], t[i + 1])
            return self.prune(Vector((t[:i] + (k,) + t[i + 2:], c) for k, c in prod.items()))
        return Vector({t[:-1]: self.h.counit(t[-1])})

    def degeneracy(self, t, j) -> Vector:
        return Vector.basis(t[: j + 1] + (self.one,) + t[j + 1:])

    def boundary(self, t) -> Vector:
        return self._memo("bd", t, lambda: self._boundary(t))

    def _boundary(self, t):
        out = Vector()
        for i in range(len(t)):
            out.axpy(self.face(t, i), -1 if i % 2 else 1)
        return out

    def extra(self, t) -> Vector:
        """The contraction ``s(x) = 1 (x) x``."""
        return Vector.basis((self.one,) + t)

    def left_mul(self, a, v) -> Vector:
        """H-module structure on E: multiply the first factor on the left."""
        out = Vector()
        for t, c in v.items():
            for k, x in self.h.mul(a, t[0]).items():
                tt = (k,) + t[1:]
                if self.ok(tt):
                    out.add_term(tt, c * x)
        return out

    # -- cyclic operator --------------------------------------------------------

    def t_closed(self, t) -> Vector:
        return self._memo("t", t, lambda: self._t_closed(t))

    def _t_closed(self, t):
        n = len(t) - 1
        if n == 0:
            return Vector.basis(t)
        nlegs = [1] + [3] * (n - 1) + [2]
        first = (False, [(0, 0, False)] + [(j, 0, False) for j in range(1, n + 1)])
        second = (True, [(j, 1, False) for j in range(1, n + 1)])
        rest = [(False, [(j, 2, False)]) for j in range(1, n)]
        return self.sweedler(t, nlegs, [first, second] + rest, -1 if n % 2 else 1)

    def alpha(self, t) -> Vector:
        n = len(t) - 1
        nlegs = [n - i + 1 for i in range(n + 1)]
        layout = [(False, [(i, j - i, False) for i in range(j + 1)]) for j in range(n + 1)]
        return self.sweedler(t, nlegs, layout)

    def beta(self, t) -> Vector:
        n = len(t) - 1
        nlegs = [2] * n + [1]
        layout = [(False, [(0, 0, False)])]
        layout += [(False, [(j - 1, 1, True), (j, 0, False)]) for j in range(1, n + 1)]
        return self.sweedler(t, nlegs, layout)

    def t_conjugated(self, t) -> Vector:
        """``beta . lambda . alpha``."""
        return lin(self.beta, lin(self.r_lambda, self.alpha(t)))

    def t_power(self, t, i) -> Vector:
        v = Vector.basis(t)
        for _ in range(i):
            v = lin(self.t_closed, v)
        return v

    def norm(self, t) -> Vector:
        n = len(t) - 1
        out = Vector()
        v = Vector.basis(t)
        for _ in range(n + 1):
            out.axpy(v)
            v = lin(self.t_closed, v)
        return out

    # -- R(H) -------------------------------------------------------------------

    def r_face(self, t, i) -> Vector:
        return Vector({t[:i] + t[i + 1:]: self.h.counit(t[i])})

    def r_degeneracy(self, t, i) -> Vector:
        out = Vector()
        for (a, b), c in self.h.coproduct(t[i]).items():
            tt = t[:i] + (a, b) + t[i + 1:]
            if self.ok(tt):
                out.add_term(tt, c)
        return out

    def r_lambda(self, t) -> Vector:
        n = len(t) - 1
        return Vector({(t[-1],) + t[:-1]: -1 if n % 2 else 1})

    def diagonal_action(self, a, v) -> Vector:
        """``a . (h_0 (x) ... (x) h_n) = a^(0) h_0 (x) ... (x) a^(n) h_n``."""
        out = Vector()
        for t, c in v.items():
            n = len(t)
            for legs, x in delta_n(self.h, a, n).items():
                out.axpy(self._build_product_pairs(legs, t), c * x)
        return out

    def _build_product_pairs(self, legs, t):
        h = self.h
        parts = {(): Fraction(1)}
        for a, b in zip(legs, t):
            f = h.mul(a, b)
            parts = {tt + (k,): x * y for tt, x in parts.items() for k, y in f.items()}
        return self.prune(Vector(parts))

    # -- extra degeneracies and Connes' operator -----------------------------

    def sprime_closed(self, t) -> Vector:
        n = len(t) - 1
        nlegs = [1] + [3] * n
        first = (False, [(0, 0, False)] + [(j, 0, False) for j in range(1, n + 1)])
        second = (True, [(j, 1, False) for j in range(1, n + 1)])
        rest = [(False, [(j, 2, False)]) for j in range(1, n + 1)]
        return self.sweedler(t, nlegs, [first, second] + rest)

    def sprime(self, t) -> Vector:
        """``(-1)^(n+1) t s_n``."""
        n = len(t) - 1
        v = lin(self.t_closed, self.degeneracy(t, n))
        return v.scale(-1) if (n + 1) % 2 else v

    def Bprime(self, t, form: str = "explicit", normalized: bool = True) -> Vector:
        key = (t, form, normalized)
        return self._memo("Bp", key, lambda: self._Bprime(t, form, normalized))

    def _Bprime(self, t, form, normalized):
        n = len(t) - 1
        if form == "defining":
            v = lin(self.sprime, self.norm(t))
            v = v - lin(self.t_closed, v)
        elif form == "B''":
            sign = -1 if n % 2 else 1
            v = lin(lambda u: self.degeneracy(u, n), self.norm(t)).scale(sign)
            v = lin(self.t_closed, v).scale(-1)
        elif form == "explicit":
            if not normalized:
                raise ValueError("the explicit formula describes B' on normalized tensors only")
            v = Vector()
            for i in range(n + 1):
                cut = n - i
                nlegs = [1] + [3] * cut + [2] * i
                first = (False, [(0, 0, False)] + [(j, 0, False) for j in range(1, cut + 1)])
                mid = [(False, [(j, 0, False)]) for j in range(cut + 1, n + 1)]
                anti = (True, [(j, 1, False) for j in range(1, n + 1)])
                tail = [(False, [(j, 2, False)]) for j in range(1, cut + 1)]
                v.axpy(self.sweedler(t, nlegs, [first] + mid + [anti] + tail, -1 if (n * i) % 2 else 1))
        else:
            raise ValueError(f"unknown form {form!r}")
        return project_normalized(self.h, v) if normalized else v

    # -- B(H) ----------------------------------------------------------------

    def reduce(self, v) -> Vector:
        """``k (x)_H -``: apply the counit to the first factor."""
        out = Vector()
        for t, c in v.items():
            e = self.h.counit(t[0])
            if e:
                out.add_term(t[1:], c * e)
        return out

    def b_op(self, op, w) -> Vector:
        return self.reduce(op((self.one,) + w))

    def b_face(self, w, i) -> Vector:
        return self.b_op(lambda t: self.face(t, i), w)

    def b_boundary(self, w) -> Vector:
        if not w:
            return Vector()
        return self._memo("bbd", w, lambda: self.b_op(self.boundary, w))

    def b_t(self, w) -> Vector:
        return self.b_op(self.t_closed, w)

    def b_B(self, w, form="explicit") -> Vector:
        return self._memo("bB", (w, form), lambda: self.reduce(self.Bprime((self.one,) + w, form)))

    # -- bases and complexes -------------------------------------------------

    def e_basis(self, n, normalized=True):
        return tensor_basis(self.h, n + 1, 1 if normalized else n + 1)

    def b_basis(self, n, normalized=True):
        return tensor_basis(self.h, n, 0 if normalized else n)

    def e_mixed(self, form="explicit") -> MixedComplex:
        """``M'(H) = (E_norm, d', B')``."""
        return MixedComplex(lambda n: self.e_basis(n),
                            lambda t: project_normalized(self.h, self.boundary(t)),
                            lambda t: self.Bprime(t, form), name="E(H)_norm")

    def b_mixed(self, form="explicit") -> MixedComplex:
        """``M(H) = (B_norm, d, B)``."""
        return MixedComplex(lambda n: self.b_basis(n),
                            lambda w: project_normalized(self.h, self.b_boundary(w), 0),
                            lambda w: self.b_B(w, form), name="B(H)_norm")

    def b_complex(self, normalized=True) -> ChainComplex:
        from .core import FunctionComplex

        if normalized:
            return FunctionComplex(self.b_basis, lambda w: project_normalized(self.h, self.b_boundary(w), 0),
                                   name="B(H)_norm")
        return FunctionComplex(lambda n: self.b_basis(n, False), self.b_boundary, name="B(H)")

    def e_complex(self, normalized=True) -> ChainComplex:
        from .core import FunctionComplex

        if normalized:
            return FunctionComplex(self.e_basis, lambda t: project_normalized(self.h, self.boundary(t)),
                                   name="E(H)_norm")
        return FunctionComplex(lambda n: self.e_basis(n, False), self.boundary, name="E(H)")


def build_bar(h: HopfAlgebra) -> BarComplex:
    return BarComplex(h)
