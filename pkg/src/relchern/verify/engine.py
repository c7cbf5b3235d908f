"""Chain-map checking and chain-homotopy existence by exact linear algebra."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exactlin import FreeModule, Inconsistent, LinMap, ShapeError, Vector, render, Echelon
from ..complexes.core import ChainComplex
from ..complexes.maps import ChainHomotopy, ChainMap


def _d(c: ChainComplex, n: int, v) -> Vector:
    """Differential of a degree-n chain, zero in degree 0."""
    if n <= 0 or not v:
        return Vector()
    return c.d_matrix(n)(v)


def check_chain_map(f: ChainMap, window: int) -> dict:
    """``d f = sign * f d`` on every source basis element of degree ``<= window``."""
    checked = 0
    for n in range(max(f.low, 0), window + 1):
        m = n + f.shift
        for k in f.source.basis(n):
            checked += 1
            img = f(k)
            try:
                f.target.module(m).check(img, f"{f.name}({render(k)})")
            except ShapeError as exc:
                return {"ok": False, "witness": render(k), "detail": str(exc), "checked": checked}
            lhs = _d(f.target, m, img)
            src_d = _d(f.source, n, Vector.basis(k))
            rhs = f.vec(src_d).scale(f.sign) if n - 1 >= f.low else Vector()
            if lhs != rhs:
                return {"ok": False, "witness": render(k), "lhs": lhs.to_json(), "rhs": rhs.to_json(),
                        "checked": checked}
    return {"ok": True, "witness": None, "checked": checked}


@dataclass
class NoHomotopy:
    """No homotopy exists in the window; ``certificate`` is a left-kernel functional.

    A missing homotopy in a window does not rule out one that needs a larger
    window.
    """

    certificate: Vector
    window: int

    def __bool__(self):
        return False


def _system(f: ChainMap, g: ChainMap, window: int):
    src, tgt = f.source, f.target
    lo = max(f.low, g.low, 0)
    unknowns, equations, target = [], [], Vector()
    for n in range(lo, window + 1):
        for k in src.basis(n):
            for b in tgt.basis(n):
                equations.append((n, k, b))
            diff = Vector(f(k)) - Vector(g(k))
            for b, c in diff.items():
                target.add_term((n, k, b), c)
            for a in tgt.basis(n + 1):
                unknowns.append((n, a, k))
    # transposed source differentials: k -> [(k', c)] with d k' containing c k
    up = {}
    for n in range(lo + 1, window + 1):
        for k2 in src.basis(n):
            for k, c in _d(src, n, Vector.basis(k2)).items():
                up.setdefault((n - 1, k), []).append((k2, c))
    columns = []
    for n, a, k in unknowns:
        col = Vector()
        for b, c in _d(tgt, n + 1, Vector.basis(a)).items():
            col.add_term((n, k, b), c)
        if n + 1 <= window:
            for k2, c in up.get((n, k), ()):
                col.add_term((n + 1, k2, a), c)
        columns.append(col)
    m = LinMap(FreeModule(unknowns), FreeModule(equations), columns)
    return m, target


def find_homotopy(f: ChainMap, g: ChainMap, window: int):
    """Solve ``f_n - g_n = d h_n + h_(n-1) d`` jointly for ``n <= window``.

    Returns a re-verified :class:`ChainHomotopy` or a :class:`NoHomotopy`.
    """
    if f.shift or g.shift:
        raise ValueError("homotopies are solved between degree-preserving maps")
    m, target = _system(f, g, window)
    x = Echelon(m).solve(target)
    if isinstance(x, Inconsistent):
        return NoHomotopy(x.certificate, window)
    maps: dict = {}
    for (n, a, k), c in x.items():
        maps.setdefault(n, {}).setdefault(k, Vector()).add_term(a, c)
    h = ChainHomotopy(f, g, maps, window)
    res = verify_homotopy(h)
    if not res["ok"]:
        raise AssertionError(f"solver returned a homotopy that fails substitution at {res['witness']}")
    return h


def verify_homotopy(h: ChainHomotopy) -> dict:
    """Independent substitution check of ``f - g = d h + h d``."""
    f, g = h.f, h.g
    src, tgt = f.source, f.target
    lo = max(f.low, g.low, 0)
    for n in range(lo, h.window + 1):
        for k in src.basis(n):
            lhs = Vector(f(k)) - Vector(g(k))
            rhs = _d(tgt, n + 1, h(n, k))
            if n - 1 >= lo:
                rhs = rhs + h.vec(n - 1, _d(src, n, Vector.basis(k)))
            if lhs != rhs:
                return {"ok": False, "witness": render(k), "degree": n}
    return {"ok": True, "witness": None}


def verify_certificate(f: ChainMap, g: ChainMap, window: int, certificate: Vector) -> bool:
    """``y . M = 0`` and ``y . (f - g) != 0`` for the system of the window."""
    m, target = _system(f, g, window)
    if any(certificate.dot(col) for col in m.columns):
        return False
    return certificate.dot(target) != 0


def homotopy_to_json(h: ChainHomotopy) -> dict:
    out = {}
    for n in sorted(h.maps):
        out[str(n)] = {render(k): v.to_json() for k, v in sorted(h.maps[n].items(), key=lambda kv: render(kv[0]))
                       if v}
    return out


def homotopy_from_json(data: dict, f: ChainMap, g: ChainMap, window: int) -> ChainHomotopy:
    """Rebuild a serialized homotopy against the bases of ``f``'s complexes."""
    maps: dict = {}
    for n_text, entries in data.items():
        n = int(n_text)
        src = {render(k): k for k in f.source.basis(n)}
        tgt = {render(k): k for k in f.target.basis(n + 1)}
        for k_text, vec in entries.items():
            if k_text not in src:
                raise KeyError(f"unknown source key {k_text} in degree {n}")
            v = Vector()
            for b_text, c in vec.items():
                if b_text not in tgt:
                    raise KeyError(f"unknown target key {b_text} in degree {n + 1}")
                v.add_term(tgt[b_text], Fraction(c))
            maps.setdefault(n, {})[src[k_text]] = v
    return ChainHomotopy(f, g, maps, window)
