"""Input documents: JSON with optional ``lie_algebra``, ``algebra``, ``triangular`` and ``caps``.

All rationals are strings ``"p/q"`` (or ``"p"``); indices are 0-based.
Errors carry a JSON pointer to the offending location.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra.assoc import AlgebraError, AlgebraSpec, validate_algebra
from .algebra.lie import LieAlgebraSpec, validate_lie
from .algebra.triangular import TriangularSpec

_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*$")


class DocumentError(ValueError):
    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer or "/"
        self.message = message


@dataclass
class Document:
    lie: LieAlgebraSpec | None = None
    algebra: AlgebraSpec | None = None
    triangular: TriangularSpec | None = None
    caps: dict | None = None


def _rational(x, ptr) -> Fraction:
    if isinstance(x, _FloatMarker):
        raise DocumentError(ptr, f"floating-point literal {x[6:]} is not allowed; write \"p/q\"")
    if not isinstance(x, str) or not _RATIONAL.match(x):
        raise DocumentError(ptr, f"expected a rational string \"p/q\", got {json.dumps(x)}")
    try:
        return Fraction(x.replace(" ", ""))
    except ZeroDivisionError:
        raise DocumentError(ptr, "zero denominator") from None


def _int(x, ptr, lo=0, hi=None) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise DocumentError(ptr, f"expected an integer, got {json.dumps(x)}")
    if x < lo or (hi is not None and x >= hi):
        raise DocumentError(ptr, f"{x} out of range")
    return x


def _obj(x, ptr, keys_required=(), keys_allowed=None) -> dict:
    if not isinstance(x, dict):
        raise DocumentError(ptr, "expected an object")
    for k in keys_required:
        if k not in x:
            raise DocumentError(f"{ptr}/{k}", "missing")
    if keys_allowed is not None:
        for k in x:
            if k not in keys_allowed:
                raise DocumentError(f"{ptr}/{k}", "unknown key")
    return x


def _list(x, ptr) -> list:
    if not isinstance(x, list):
        raise DocumentError(ptr, "expected an array")
    return x


def _names(x, ptr, dim):
    if x is None:
        return ()
    x = _list(x, ptr)
    if len(x) != dim or not all(isinstance(n, str) for n in x):
        raise DocumentError(ptr, f"expected {dim} strings")
    return tuple(x)


def _structure(x, ptr, dim) -> dict:
    out = {}
    for a, entry in enumerate(_list(x, ptr)):
        p = f"{ptr}/{a}"
        entry = _obj(entry, p, ("i", "j", "terms"), {"i", "j", "terms"})
        i = _int(entry["i"], f"{p}/i", 0, dim)
        j = _int(entry["j"], f"{p}/j", 0, dim)
        if (i, j) in out:
            raise DocumentError(p, f"duplicate entry for {(i, j)}")
        terms = {}
        for b, t in enumerate(_list(entry["terms"], f"{p}/terms")):
            q = f"{p}/terms/{b}"
            t = _obj(t, q, ("k", "c"), {"k", "c"})
            k = _int(t["k"], f"{q}/k", 0, dim)
            terms[k] = terms.get(k, Fraction(0)) + _rational(t["c"], f"{q}/c")
        out[(i, j)] = {k: c for k, c in terms.items() if c}
    return out


def _vector(x, ptr, dim) -> dict:
    x = _list(x, ptr)
    if len(x) != dim:
        raise DocumentError(ptr, f"expected {dim} entries")
    return {i: c for i, c in ((i, _rational(v, f"{ptr}/{i}")) for i, v in enumerate(x)) if c}


def parse_lie(x, ptr="/lie_algebra") -> LieAlgebraSpec:
    x = _obj(x, ptr, ("dim", "brackets"), {"dim", "names", "brackets"})
    dim = _int(x["dim"], f"{ptr}/dim", 1)
    br = _structure(x["brackets"], f"{ptr}/brackets", dim)
    for (i, j) in br:
        if i == j:
            raise DocumentError(f"{ptr}/brackets", f"diagonal bracket {(i, j)}")
        if (j, i) in br and i < j:
            raise DocumentError(f"{ptr}/brackets", f"both {(i, j)} and {(j, i)} given")
    try:
        lie = LieAlgebraSpec(dim, br, _names(x.get("names"), f"{ptr}/names", dim))
        validate_lie(lie)
    except ValueError as exc:
        raise DocumentError(f"{ptr}/brackets", str(exc)) from None
    return lie


def parse_algebra(x, ptr="/algebra") -> AlgebraSpec:
    x = _obj(x, ptr, ("dim", "unit", "mult"), {"dim", "names", "unit", "mult", "ideal"})
    dim = _int(x["dim"], f"{ptr}/dim", 1)
    unit = _vector(x["unit"], f"{ptr}/unit", dim)
    mult = _structure(x["mult"], f"{ptr}/mult", dim)
    ideal = [_vector(v, f"{ptr}/ideal/{a}", dim) for a, v in enumerate(_list(x.get("ideal", []), f"{ptr}/ideal"))]
    try:
        spec = AlgebraSpec(dim, unit, mult, tuple(ideal), _names(x.get("names"), f"{ptr}/names", dim))
        validate_algebra(spec)
    except AlgebraError as exc:
        raise DocumentError(f"{ptr}/mult", str(exc)) from None
    return spec


def parse_triangular(x, algebra: AlgebraSpec | None, ptr="/triangular") -> TriangularSpec:
    x = _obj(x, ptr, ("n",), {"n", "sigma", "base"})
    n = _int(x["n"], f"{ptr}/n", 1)
    base = x.get("base", "algebra")
    if base != "algebra":
        raise DocumentError(f"{ptr}/base", "only the reference \"algebra\" is supported")
    if algebra is None:
        raise DocumentError(f"{ptr}/base", "the document has no \"algebra\" section")
    sigma = []
    for a, pair in enumerate(_list(x.get("sigma", []), f"{ptr}/sigma")):
        p = f"{ptr}/sigma/{a}"
        pair = _list(pair, p)
        if len(pair) != 2:
            raise DocumentError(p, "expected a pair [i, j]")
        sigma.append((_int(pair[0], f"{p}/0", 0, n) + 1, _int(pair[1], f"{p}/1", 0, n) + 1))
    spec = TriangularSpec(n, frozenset(sigma), algebra)
    try:
        spec.validate()
    except AlgebraError as exc:
        raise DocumentError(f"{ptr}/sigma", str(exc)) from None
    return spec


def parse_caps(x, ptr="/caps") -> dict:
    x = _obj(x, ptr, (), {"degree", "columns", "truncation"})
    out = {}
    for k in ("degree", "columns"):
        if k in x:
            out[k] = _int(x[k], f"{ptr}/{k}", 0)
    if "truncation" in x:
        out["truncation"] = _int(x["truncation"], f"{ptr}/truncation", 1)
    return out


def parse_document(obj) -> Document:
    obj = _obj(obj, "", (), {"lie_algebra", "algebra", "triangular", "caps"})
    doc = Document()
    if "lie_algebra" in obj:
        doc.lie = parse_lie(obj["lie_algebra"])
    if "algebra" in obj:
        doc.algebra = parse_algebra(obj["algebra"])
    if "triangular" in obj:
        doc.triangular = parse_triangular(obj["triangular"], doc.algebra)
    if "caps" in obj:
        doc.caps = parse_caps(obj["caps"])
    return doc


def load_document(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        obj = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise DocumentError("", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_document(obj)


class _FloatMarker(str):
    pass


def _reject_float(s):
    # kept as a marker so the pointer-aware parser reports the location
    return _FloatMarker(f"float:{s}")
