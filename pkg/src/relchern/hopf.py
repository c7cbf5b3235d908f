"""Cocommutative Hopf algebras: truncated enveloping algebras and group algebras.

Every Hopf algebra here exposes basis-key evaluators ``mul``, ``counit``,
``coproduct`` (a Vector over key pairs) and ``antipode``, plus ``weight`` for
the augmentation-ideal filtration.  Tensors are tuples of keys; a tensor of
total weight ``>= truncation`` is zero in the truncated object.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import comb

from .algebra.base import AugmentedAlgebra
from .algebra.lie import LieAlgebraSpec, validate_lie
from .algebra.malcev import MalcevGroup, exp_series
from .algebra.pbw import PBWAlgebra
from .exactlin import Vector, render


class PrecisionError(ValueError):
    def __init__(self, required, available):
        super().__init__(f"input known modulo I^{available}, but I^{required} is required")
        self.required = required
        self.available = available


class HopfAlgebra(AugmentedAlgebra):
    """Interface; subclasses fill in ``coproduct`` and ``antipode``."""

    cocommutative = True

    def coproduct(self, a) -> Vector:
        raise NotImplementedError

    def antipode(self, a) -> Vector:
        raise NotImplementedError

    def tensor_weight(self, t) -> int:
        return sum(self.weight(a) for a in t)

    def tensor_ok(self, t) -> bool:
        return self.truncation is None or self.tensor_weight(t) < self.truncation


# -- tensor helpers ------------------------------------------------------------


def tensor(alg, factors) -> Vector:
    """Tensor product of Vectors over ``alg`` keys, pruned by total weight."""
    out = {(): Fraction(1)}
    N = alg.truncation
    for f in factors:
        nxt = Vector()
        for t, c in out.items():
            wt = alg.tensor_weight(t) if N is not None else 0
            for k, x in f.items():
                if N is not None and wt + alg.weight(k) >= N:
                    continue
                nxt.add_term(t + (k,), c * x)
        out = nxt
    return Vector(out)


def extend(f):
    """Linear extension of a basis-key function returning Vectors."""

    def g(v):
        out = Vector()
        for k, c in v.items():
            out.axpy(f(k), c)
        return out

    return g


def coproduct_vec(h: HopfAlgebra, v) -> Vector:
    return extend(h.coproduct)(v)


def antipode_vec(h: HopfAlgebra, v) -> Vector:
    return extend(h.antipode)(v)


def delta_n(h: HopfAlgebra, a, n: int) -> Vector:
    """Iterated coproduct of a basis key into ``n`` factors (``n >= 1``)."""
    return _delta_n(h, a, n)


def _delta_n(h, a, n):
    cache = h.__dict__.setdefault("_delta_cache", {})
    key = (a, n)
    if key in cache:
        return cache[key]
    if n == 1:
        out = Vector.basis((a,))
    else:
        out = Vector()
        for (a0, a1), c in h.coproduct(a).items():
            for rest, d in _delta_n(h, a1, n - 1).items():
                t = (a0,) + rest
                if h.tensor_ok(t):
                    out.add_term(t, c * d)
    cache[key] = out
    return out


def delta_iter(h: HopfAlgebra, v, n: int, out_precision: int, in_precision: int | None = None) -> Vector:
    """``n``-fold coproduct with each output factor kept modulo ``I^out_precision``.

    Uses the linear budget: the input must be known modulo ``I^(n*M)``.
    ``in_precision`` defaults to the truncation of ``h`` (exact if None).
    """
    avail = h.truncation if in_precision is None else in_precision
    need = n * out_precision
    if avail is not None and avail < need:
        raise PrecisionError(need, avail)
    if isinstance(v, Vector) or isinstance(v, dict):
        vec = Vector(v)
    else:
        vec = Vector.basis(v)
    out = Vector()
    for a, c in vec.items():
        for t, d in delta_n(h, a, n).items():
            if all(h.weight(x) < out_precision for x in t):
                out.add_term(t, c * d)
    return out


# -- enveloping algebras ---------------------------------------------------------


class EnvelopingHopf(PBWAlgebra, HopfAlgebra):
    """U(g) or U(g)/I^N in the PBW basis; generators are primitive."""

    label = "U(g)"

    def __init__(self, lie: LieAlgebraSpec, truncation: int | None = None, weights=None):
        PBWAlgebra.__init__(self, lie, truncation, weights)
        self.coproduct = lru_cache(maxsize=None)(self._coproduct)
        self.antipode = lru_cache(maxsize=None)(self._antipode)

    def with_truncation(self, N):
        return EnvelopingHopf(self.lie, N, self.weights)

    def _coproduct(self, m) -> Vector:
        out = Vector()
        for k in iproduct(*(range(a + 1) for a in m)):
            c = 1
            for a, b in zip(m, k):
                c *= comb(a, b)
            rest = tuple(a - b for a, b in zip(m, k))
            if self.tensor_ok((k, rest)):
                out.add_term((k, rest), Fraction(c))
        return out

    def _antipode(self, m) -> Vector:
        # S(x_1^a_1 ... x_d^a_d) = (-1)^|a| x_d^a_d ... x_1^a_1
        word = []
        for i in reversed(range(self.d)):
            word.extend([self.generator(i)] * m[i])
        v = self.prod(word)
        return v.scale(-1) if sum(m) % 2 else v

    def is_primitive(self, m) -> bool:
        return sum(m) == 1


def build_enveloping_hopf(lie: LieAlgebraSpec, N: int | None = None) -> EnvelopingHopf:
    validate_lie(lie)
    if N is not None and N < 1:
        raise ValueError("precision level must be >= 1")
    return EnvelopingHopf(lie, N)


# -- group algebras ----------------------------------------------------------


class FiniteGroup:
    """A group given by a multiplication table on hashable elements."""

    def __init__(self, elements, table: dict, identity):
        self.elements = list(elements)
        self.table = dict(table)
        self.identity = identity
        els = set(self.elements)
        for a, b, c in iproduct(self.elements, repeat=3):
            if self.table[(self.table[(a, b)], c)] != self.table[(a, self.table[(b, c)])]:
                raise ValueError(f"group law is not associative on {(a, b, c)}")
        self._inv = {}
        for a in self.elements:
            if self.table[(identity, a)] != a or self.table[(a, identity)] != a:
                raise ValueError("identity law fails")
            inv = [b for b in self.elements if self.table[(a, b)] == identity]
            if not inv:
                raise ValueError(f"{a} has no inverse")
            self._inv[a] = inv[0]
        if any(v not in els for v in self.table.values()):
            raise ValueError("table is not closed")

    def mul(self, a, b):
        return self.table[(a, b)]

    def inverse(self, a):
        return self._inv[a]

    def name(self, a):
        return render(a)


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup(range(n), {(a, b): (a + b) % n for a in range(n) for b in range(n)}, 0)


class GroupHopf(HopfAlgebra):
    """The group algebra Q[G]; basis keys are group elements.

    Group elements are not filtered individually, so ``weight`` is 0 and no
    truncation is applied here; the truncated group algebra is realised
    through :meth:`embedding` into U(g)/I^N for Malcev groups.
    """

    label = "Q[G]"

    def __init__(self, group):
        self.group = group
        self.one = group.identity
        self.truncation = None

    def mul(self, a, b) -> Vector:
        return Vector.basis(self.group.mul(a, b))

    def counit(self, a) -> Fraction:
        return Fraction(1)

    def coproduct(self, a) -> Vector:
        return Vector.basis((a, a))

    def antipode(self, a) -> Vector:
        return Vector.basis(self.group.inverse(a))

    def weight(self, a) -> int:
        return 0

    def name(self, a) -> str:
        return self.group.name(a)

    def is_grouplike(self, a) -> bool:
        return True

    def reduced_basis(self, max_weight=None):
        if isinstance(self.group, FiniteGroup):
            return [g for g in self.group.elements if g != self.one]
        raise ValueError("a Malcev group is infinite; sample elements instead")

    def embedding(self, N: int):
        """Algebra map Q[G] -> U(g)/I^N, g = exp(xi) -> truncated exp series."""
        if not isinstance(self.group, MalcevGroup):
            raise ValueError("only Malcev groups embed in an enveloping algebra")
        U = EnvelopingHopf(self.group.lie, N)

        def emb(g):
            return exp_series(U, U.lie_element(self.group.as_vector(g)))

        return U, emb


def build_group_hopf(group) -> GroupHopf:
    if isinstance(group, LieAlgebraSpec):
        group = MalcevGroup(group)
    return GroupHopf(group)


# -- axiom checks ----------------------------------------------------------------


def _mul_tensor(h, t) -> Vector:
    return h.prod(list(t))


def check_hopf_axioms(h: HopfAlgebra, basis) -> dict:
    """Exact check of the Hopf algebra axioms on the given basis keys.

    Returns ``{axiom: {"ok": bool, "witness": key or None}}``.  The witness
    is the first basis element (or tuple of elements) violating the axiom.
    """
    basis = list(basis)
    report = {}

    def record(name, witness=None):
        if name not in report or report[name]["ok"]:
            report[name] = {"ok": witness is None, "witness": None if witness is None else render(witness)}

    for a in basis:
        one = Vector.basis(h.one)
        # unit and counit
        record("unit", None if h.mul(h.one, a) == Vector.basis(a) == h.mul(a, h.one) else a)
        d = h.coproduct(a)
        left = Vector()
        right = Vector()
        for (x, y), c in d.items():
            left.axpy(Vector.basis(y), c * h.counit(x))
            right.axpy(Vector.basis(x), c * h.counit(y))
        record("counit", None if left == Vector.basis(a) == right else a)
        # coassociativity
        l3, r3 = Vector(), Vector()
        for (x, y), c in d.items():
            for (x1, x2), e in h.coproduct(x).items():
                t = (x1, x2, y)
                if h.tensor_ok(t):
                    l3.add_term(t, c * e)
            for (y1, y2), e in h.coproduct(y).items():
                t = (x, y1, y2)
                if h.tensor_ok(t):
                    r3.add_term(t, c * e)
        record("coassociativity", None if l3 == r3 else a)
        # cocommutativity
        sw = Vector(((y, x), c) for (x, y), c in d.items())
        record("cocommutativity", None if sw == d else a)
        # antipode identity on both sides
        lhs, rhs = Vector(), Vector()
        for (x, y), c in d.items():
            lhs.axpy(h.mul_vec(h.antipode(x), Vector.basis(y)), c)
            rhs.axpy(h.mul_vec(Vector.basis(x), h.antipode(y)), c)
        eps = one.scale(h.counit(a))
        record("antipode", None if lhs == eps == rhs else a)
        # S^2 = 1
        record("S^2=1", None if antipode_vec(h, h.antipode(a)) == Vector.basis(a) else a)
    for a, b in iproduct(basis, repeat=2):
        ab = h.mul(a, b)
        # counit is multiplicative
        record("counit multiplicative", None if sum((c * h.counit(k) for k, c in ab.items()), Fraction(0))
               == h.counit(a) * h.counit(b) else (a, b))
        # coproduct is multiplicative
        lhs = coproduct_vec(h, ab)
        rhs = Vector()
        for (a1, a2), c in h.coproduct(a).items():
            for (b1, b2), e in h.coproduct(b).items():
                for k1, x in h.mul(a1, b1).items():
                    for k2, y in h.mul(a2, b2).items():
                        if h.tensor_ok((k1, k2)):
                            rhs.add_term((k1, k2), c * e * x * y)
        record("coproduct multiplicative", None if lhs == rhs else (a, b))
    for a, b, c in iproduct(basis[: min(len(basis), 12)], repeat=3):
        lhs = h.mul_vec(h.mul(a, b), Vector.basis(c))
        rhs = h.mul_vec(Vector.basis(a), h.mul(b, c))
        record("associativity", None if lhs == rhs else (a, b, c))
    return report


class CorruptedCoproduct(HopfAlgebra):
    """Wraps a Hopf algebra and drops the ``1 (x) a`` term from every coproduct.

    Used to confirm that the axiom checker detects a broken structure.
    """

    def __init__(self, inner: HopfAlgebra):
        self.inner = inner
        self.one = inner.one
        self.truncation = inner.truncation
        self.label = "corrupted " + inner.label

    def mul(self, a, b):
        return self.inner.mul(a, b)

    def counit(self, a):
        return self.inner.counit(a)

    def weight(self, a):
        return self.inner.weight(a)

    def antipode(self, a):
        return self.inner.antipode(a)

    def coproduct(self, a):
        d = self.inner.coproduct(a)
        if a == self.one:
            return d
        return Vector((t, c) for t, c in d.items() if t != (self.one, a))

    def name(self, a):
        return self.inner.name(a)
