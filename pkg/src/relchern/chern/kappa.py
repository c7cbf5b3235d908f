"""Lifting maps through a contractible target, one degree at a time.

The source is degreewise free over an algebra A: every basis key is a
tensor ``(a,) + v`` and ``(a,) + v = a . ((1,) + v)``.  Given a map ``f`` into a
complex with a k-linear contraction ``s`` (``ds + sd = 1`` above degree 0),
the recursion

    kappa((1,) + v) = s(f((1,) + v) + sign * kappa(d((1,) + v)))
    kappa((a,) + v) = a . kappa((1,) + v)

produces an A-linear map with ``d kappa - sign * kappa d = f``.  Odd maps
(homotopies) use ``sign = -1`` and satisfy ``d kappa + kappa d = f``;
even maps use ``sign = +1``.
"""

from __future__ import annotations

from typing import Callable

from ..exactlin import Vector
from ..complexes.core import lin


class Kappa:
    def __init__(self, f: Callable, s: Callable, d: Callable, act: Callable, one, sign: int = -1,
                 low: int = 0):
        """
        f, d : key -> Vector (source keys are tuples with the A-factor first)
        s : Vector -> Vector, contraction of the target
        act : (a, Vector) -> Vector, the A-action on the target
        low : source degree (tuple length - 1) below which the lift is zero
        """
        self.f, self.s, self.d, self.act = f, s, d, act
        self.one = one
        self.sign = sign
        self.low = low
        self._memo = {}

    def __call__(self, key) -> Vector:
        if len(key) - 1 < self.low:
            return Vector()
        a, v = key[0], key[1:]
        base = self._base(v)
        if a == self.one:
            return base
        return self.act(a, base)

    def vec(self, v) -> Vector:
        return lin(self, v)

    def _base(self, v) -> Vector:
        if v not in self._memo:
            x = (self.one,) + v
            val = Vector(self.f(x))
            dx = self.d(x) if len(x) > 1 else Vector()
            if dx:
                val.axpy(lin(self, dx), self.sign)
            self._memo[v] = self.s(val)
        return self._memo[v]


def check_contraction(s: Callable, d_src: Callable, d_tgt: Callable, keys, augmentation=None) -> dict:
    """``d s + s d = 1 - eta eps`` on the given keys of one degree.

    ``augmentation(key)`` returns the Vector ``eta eps(key)`` (degree 0 only).
    """
    for k in keys:
        lhs = lin(d_tgt, s(Vector.basis(k))) + s(d_src(k) if len(k) > 1 else Vector())
        rhs = Vector.basis(k)
        if augmentation is not None:
            rhs = rhs - augmentation(k)
        if lhs != rhs:
            return {"ok": False, "witness": k}
    return {"ok": True, "witness": None}


def check_kappa(kap: Kappa, f: Callable, d_src: Callable, d_tgt: Callable, keys) -> dict:
    """``d kappa - sign * kappa d = f`` on the given source keys."""
    for k in keys:
        dk = d_src(k) if len(k) > 1 else Vector()
        lhs = lin(d_tgt, kap(k)) - kap.vec(dk).scale(kap.sign)
        if lhs != Vector(f(k)):
            return {"ok": False, "witness": k}
    return {"ok": True, "witness": None}
