"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`.  Vectors are sparse dictionaries
from hashable basis tags to nonzero scalars; linear maps are stored column
by column.  Elimination is column-echelon with the pivot chosen as the
first nonzero row in the codomain basis order, so every witness returned
here is reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

__all__ = [
    "Fraction",
    "ShapeError",
    "NotAComplexError",
    "scalar",
    "render",
    "Vector",
    "FreeModule",
    "LinMap",
    "Echelon",
    "Inconsistent",
    "rank_kernel_image",
    "solve_linear",
    "homology_dims",
    "span_basis",
    "QuotientSpace",
]


class ShapeError(ValueError):
    pass


class NotAComplexError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def scalar(x) -> Fraction:
    """Parse ``x`` (int, Fraction or a ``"p/q"`` string) into a Fraction.

    Floats are rejected: nothing in this library is allowed to pass through
    binary floating point.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact scalar: {x!r}")


def render(tag) -> str:
    """Canonical string rendering of a structured basis tag."""
    if isinstance(tag, str):
        return tag
    if isinstance(tag, Fraction):
        if tag.denominator == 1:
            return str(tag.numerator)
        return f"{tag.numerator}/{tag.denominator}"
    if isinstance(tag, int):
        return str(tag)
    if isinstance(tag, (tuple, list)):
        return "(" + ",".join(render(t) for t in tag) + ")"
    if isinstance(tag, frozenset):
        return "{" + ",".join(sorted(render(t) for t in tag)) + "}"
    return str(tag)


def fstr(c: Fraction) -> str:
    return render(Fraction(c))


class Vector(dict):
    """Sparse vector: ``{basis tag: Fraction}`` with no stored zeros."""

    __slots__ = ()

    def __init__(self, data: Mapping | Iterable = ()):
        super().__init__()
        items = data.items() if isinstance(data, Mapping) else data
        for k, v in items:
            if v:
                c = self.get(k, 0) + scalar(v)
                if c:
                    self[k] = c
                else:
                    self.pop(k, None)

    @classmethod
    def basis(cls, key) -> "Vector":
        v = cls()
        dict.__setitem__(v, key, Fraction(1))
        return v

    def copy(self) -> "Vector":
        v = Vector()
        dict.update(v, self)
        return v

    def axpy(self, other: Mapping, c=1) -> "Vector":
        """In place ``self += c * other``; returns self."""
        if not c:
            return self
        for k, v in other.items():
            x = self.get(k, 0) + c * v
            if x:
                self[k] = x
            else:
                del self[k]
        return self

    def add_term(self, key, c) -> None:
        if not c:
            return
        x = self.get(key, 0) + c
        if x:
            self[key] = x
        else:
            del self[key]

    def __add__(self, other):
        return self.copy().axpy(other)

    def __sub__(self, other):
        return self.copy().axpy(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "Vector":
        v = Vector()
        if c:
            for k, x in self.items():
                dict.__setitem__(v, k, x * c)
        return v

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def dot(self, other: Mapping) -> Fraction:
        if len(other) < len(self):
            self, other = other, self
        return sum((x * other.get(k, 0) for k, x in self.items()), Fraction(0))

    def map_keys(self, f: Callable) -> "Vector":
        v = Vector()
        for k, x in self.items():
            v.add_term(f(k), x)
        return v

    def sorted_items(self):
        return sorted(self.items(), key=lambda kv: render(kv[0]))

    def to_json(self) -> dict:
        return {render(k): fstr(x) for k, x in self.sorted_items()}

    def __repr__(self):
        if not self:
            return "0"
        return " + ".join(f"{fstr(x)}*{render(k)}" for k, x in self.sorted_items())


class FreeModule:
    """Finitely generated free module with an ordered basis of tags."""

    def __init__(self, basis: Iterable, sort: bool = False):
        basis = list(basis)
        if sort:
            basis.sort(key=render)
        self.basis = tuple(basis)
        self.index = {b: i for i, b in enumerate(self.basis)}
        if len(self.index) != len(self.basis):
            raise ShapeError("basis tags must be pairwise distinct")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __contains__(self, key):
        return key in self.index

    def __eq__(self, other):
        return isinstance(other, FreeModule) and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def check(self, v: Mapping, what="vector") -> None:
        for k in v:
            if k not in self.index:
                raise ShapeError(f"{what} has coordinate {render(k)} outside the basis")

    def __repr__(self):
        return f"FreeModule(dim={self.dim})"


class LinMap:
    """Linear map given by the images of the domain basis."""

    def __init__(self, domain: FreeModule, codomain: FreeModule, columns: Sequence[Mapping] | Mapping):
        if isinstance(columns, Mapping):
            columns = [columns.get(b, Vector()) for b in domain.basis]
        if len(columns) != domain.dim:
            raise ShapeError(f"{len(columns)} columns for a domain of dimension {domain.dim}")
        cols = []
        for b, c in zip(domain.basis, columns):
            c = c if isinstance(c, Vector) else Vector(c)
            codomain.check(c, f"column {render(b)}")
            cols.append(c)
        self.domain = domain
        self.codomain = codomain
        self.columns = tuple(cols)

    @classmethod
    def from_function(cls, domain: FreeModule, codomain: FreeModule, f: Callable) -> "LinMap":
        return cls(domain, codomain, [f(b) for b in domain.basis])

    @classmethod
    def identity(cls, m: FreeModule) -> "LinMap":
        return cls(m, m, [Vector.basis(b) for b in m.basis])

    @classmethod
    def zero(cls, domain: FreeModule, codomain: FreeModule) -> "LinMap":
        return cls(domain, codomain, [Vector() for _ in domain.basis])

    def __call__(self, v: Mapping) -> Vector:
        out = Vector()
        for k, x in v.items():
            i = self.domain.index.get(k)
            if i is None:
                raise ShapeError(f"{render(k)} is not in the domain")
            out.axpy(self.columns[i], x)
        return out

    def compose(self, other: "LinMap") -> "LinMap":
        """``self ∘ other``."""
        if other.codomain != self.domain:
            raise ShapeError("composition of maps with mismatched shapes")
        return LinMap(other.domain, self.codomain, [self(c) for c in other.columns])

    def __matmul__(self, other):
        return self.compose(other)

    def __sub__(self, other):
        if (self.domain, self.codomain) != (other.domain, other.codomain):
            raise ShapeError("difference of maps with mismatched shapes")
        return LinMap(self.domain, self.codomain, [a - b for a, b in zip(self.columns, other.columns)])

    def transpose(self) -> "LinMap":
        rows = [Vector() for _ in self.codomain.basis]
        for b, col in zip(self.domain.basis, self.columns):
            for k, x in col.items():
                rows[self.codomain.index[k]][b] = x
        return LinMap(self.codomain, self.domain, rows)

    def is_zero(self) -> bool:
        return not any(self.columns)

    def __eq__(self, other):
        return (isinstance(other, LinMap) and self.domain == other.domain
                and self.codomain == other.codomain and self.columns == other.columns)

    def __repr__(self):
        return f"LinMap({self.domain.dim} -> {self.codomain.dim})"


class Inconsistent:
    """Verdict of :func:`solve_linear` when the target is not in the image.

    ``certificate`` is a functional ``y`` on the codomain with ``y∘m = 0`` and
    ``y(target) != 0``.
    """

    def __init__(self, certificate: Vector):
        self.certificate = certificate

    def __bool__(self):
        return False

    def __repr__(self):
        return f"Inconsistent(certificate={self.certificate!r})"


class Echelon:
    """Column echelon form of a sparse matrix, reusable for many solves.

    Columns are processed in domain order; a reduced column is pinned to its
    first nonzero row (codomain order).  ``combos[r]`` records the reduced
    pivot column as a combination of original columns.
    """

    def __init__(self, m: LinMap):
        self.map = m
        rowidx = m.codomain.index
        self.pivots: dict[int, tuple[dict, dict]] = {}
        self.kernel: list[Vector] = []
        self.pivot_columns: list = []
        for j, (b, col) in enumerate(zip(m.domain.basis, m.columns)):
            c = {rowidx[k]: x for k, x in col.items()}
            combo = {j: Fraction(1)}
            self._reduce(c, combo)
            if c:
                self.pivots[min(c)] = (c, combo)
                self.pivot_columns.append(b)
            else:
                self.kernel.append(Vector((m.domain.basis[i], x) for i, x in combo.items()))

    def _reduce(self, c: dict, combo: dict) -> None:
        pivots = self.pivots
        while c:
            r = min(c)
            p = pivots.get(r)
            if p is None:
                return
            pc, pcombo = p
            f = c[r] / pc[r]
            for k, x in pc.items():
                y = c.get(k, 0) - f * x
                if y:
                    c[k] = y
                else:
                    c.pop(k, None)
            for k, x in pcombo.items():
                y = combo.get(k, 0) - f * x
                if y:
                    combo[k] = y
                else:
                    combo.pop(k, None)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def image_basis(self) -> list[Vector]:
        return [self.map.columns[self.map.domain.index[b]] for b in self.pivot_columns]

    def solve(self, target: Mapping):
        m = self.map
        m.codomain.check(target, "target")
        rowidx = m.codomain.index
        c = {rowidx[k]: scalar(x) for k, x in target.items() if x}
        combo: dict = {}
        self._reduce(c, combo)
        if c:
            return Inconsistent(self._certificate(target))
        # target - sum(combo) reduced to zero, so target = -sum(combo)
        return Vector((m.domain.basis[i], -x) for i, x in combo.items())

    def _certificate(self, target: Mapping) -> Vector:
        left = Echelon(self.map.transpose())
        for y in left.kernel:
            if y.dot(target):
                return y
        raise AssertionError("target outside the image but orthogonal to the left kernel")


def rank_kernel_image(m: LinMap) -> tuple[int, list[Vector], list[Vector]]:
    e = Echelon(m)
    return e.rank, list(e.kernel), e.image_basis()


def solve_linear(m: LinMap, target: Mapping):
    """Solve ``m(x) = target``; returns a Vector or an :class:`Inconsistent`."""
    return Echelon(m).solve(target)


def homology_dims(d_in: LinMap, d_out: LinMap) -> int:
    """``dim ker(d_out) - rank(d_in)`` after checking ``d_out ∘ d_in = 0``."""
    if d_in.codomain != d_out.domain:
        raise ShapeError("d_in and d_out do not compose")
    for b, col in zip(d_in.domain.basis, d_in.columns):
        if d_out(col):
            raise NotAComplexError(f"d∘d is nonzero on {render(b)}", witness=b)
    rank_out, _, _ = rank_kernel_image(d_out)
    rank_in, _, _ = rank_kernel_image(d_in)
    return d_out.domain.dim - rank_out - rank_in


def span_basis(vectors: Iterable[Mapping], ambient: FreeModule) -> list[Vector]:
    """A basis (subset of the input) of the span of ``vectors``."""
    vectors = [v if isinstance(v, Vector) else Vector(v) for v in vectors]
    dom = FreeModule(range(len(vectors)))
    e = Echelon(LinMap(dom, ambient, vectors))
    return [vectors[i] for i in e.pivot_columns]


class QuotientSpace:
    """``ambient / span(sub)`` with the non-pivot coordinates as basis.

    The subspace is brought to reduced row echelon form; ``project`` kills
    every pivot coordinate, so two vectors are congruent iff their
    projections agree.
    """

    def __init__(self, ambient: FreeModule, sub: Iterable[Mapping]):
        self.ambient = ambient
        idx = ambient.index
        rows: dict[int, dict] = {}
        for v in sub:
            r = {idx[k]: scalar(x) for k, x in v.items() if x}
            self._insert(rows, r)
        # back substitution to reduced form
        for p in sorted(rows, reverse=True):
            row = rows[p]
            for q, other in rows.items():
                if q != p and p in other:
                    f = other[p]
                    for k, x in row.items():
                        y = other.get(k, 0) - f * x
                        if y:
                            other[k] = y
                        else:
                            other.pop(k, None)
        self.rows = rows
        self.basis = FreeModule([b for i, b in enumerate(ambient.basis) if i not in rows])

    @staticmethod
    def _insert(rows, r):
        while r:
            p = min(r)
            if p not in rows:
                lead = r[p]
                rows[p] = {k: x / lead for k, x in r.items()}
                return
            f = r[p]
            for k, x in rows[p].items():
                y = r.get(k, 0) - f * x
                if y:
                    r[k] = y
                else:
                    r.pop(k, None)

    @property
    def sub_dim(self) -> int:
        return len(self.rows)

    def project(self, v: Mapping) -> Vector:
        idx = self.ambient.index
        basis = self.ambient.basis
        out = {idx[k]: scalar(x) for k, x in v.items() if x}
        for p, row in self.rows.items():
            f = out.get(p)
            if f:
                for k, x in row.items():
                    y = out.get(k, 0) - f * x
                    if y:
                        out[k] = y
                    else:
                        out.pop(k, None)
        return Vector((basis[i], x) for i, x in out.items())
