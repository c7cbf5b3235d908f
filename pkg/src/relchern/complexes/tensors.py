"""Enumeration of tensor bases and the degenerate/normalized split.

A tensor is a tuple of algebra basis keys.  Normalization uses the basis
decomposition ``A = Q.1 + span(non-unit keys)``: a tensor is degenerate when
one of its normalized positions holds the unit key.
"""

from __future__ import annotations

from ..exactlin import Vector


def tensor_basis(alg, nfactors: int, reduced_from: int = 0, bound=None) -> list[tuple]:
    """All tensors of ``nfactors`` keys with total weight below the bound.

    Positions ``>= reduced_from`` use non-unit keys only.  ``bound``
    defaults to the algebra's truncation; an untruncated algebra must have a
    finite basis (``alg.basis()``).
    """
    if bound is None:
        bound = alg.truncation
    full = alg.basis(bound) if bound is not None else alg.basis()
    reduced = [k for k in full if k != alg.one]
    weights = {k: alg.weight(k) for k in full}
    out = []

    def rec(pos, acc, wt):
        if pos == nfactors:
            out.append(tuple(acc))
            return
        choices = reduced if pos >= reduced_from else full
        for k in choices:
            w = wt + weights[k]
            if bound is not None and w >= bound:
                continue
            acc.append(k)
            rec(pos + 1, acc, w)
            acc.pop()

    rec(0, [], 0)
    return out


def project_normalized(alg, v, first: int = 1) -> Vector:
    """Drop tensors with a unit key at a position ``>= first``."""
    one = alg.one
    return Vector((t, c) for t, c in v.items() if one not in t[first:])


def is_degenerate(alg, t, first: int = 1) -> bool:
    return alg.one in t[first:]


def truncate_tensors(alg, v) -> Vector:
    """Quotient by ``F_N``: drop tensors of total weight ``>= N``."""
    N = alg.truncation
    if N is None:
        return Vector(v)
    return Vector((t, c) for t, c in v.items() if sum(alg.weight(a) for a in t) < N)


def tensor_weight(alg, t) -> int:
    return sum(alg.weight(a) for a in t)
