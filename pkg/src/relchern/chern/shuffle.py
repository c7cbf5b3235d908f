"""Shuffle products on the Hochschild complex of a polynomial algebra.

Deliberately self-contained: monomials of S(V) are exponent tuples, the
product adds exponents, and the shuffle product and normalized Connes
operator are implemented here from their definitions.  Used as an
independent oracle for tau.psi in the abelian case.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def _add(out, key, c):
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def poly_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def shuffles(p, q):
    """(p, q)-shuffles as (positions of the first block, sign)."""
    for first in combinations(range(p + q), p):
        second = [i for i in range(p + q) if i not in first]
        perm = list(first) + second
        inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
        yield first, (-1) ** inv


def shuffle_product(u: dict, v: dict) -> dict:
    """``(a_0, a_1..a_p) * (b_0, b_1..b_q) = sum sg a_0 b_0 (x) shuffle(a, b)``."""
    out = {}
    for s, c in u.items():
        for t, d in v.items():
            p, q = len(s) - 1, len(t) - 1
            head = poly_mul(s[0], t[0])
            for first, sign in shuffles(p, q):
                slots = [None] * (p + q)
                it_a = iter(s[1:])
                it_b = iter(t[1:])
                for i in range(p + q):
                    slots[i] = next(it_a) if i in first else next(it_b)
                _add(out, (head,) + tuple(slots), sign * c * d)
    return out


def connes_B(u: dict, one) -> dict:
    """Normalized ``B(a_0..a_n) = sum_i (-1)^(n i) 1 (x) a_i..a_n (x) a_0..a_(i-1)``."""
    out = {}
    for t, c in u.items():
        n = len(t) - 1
        for i in range(n + 1):
            r = (one,) + t[i:] + t[:i]
            if one in r[1:]:
                continue
            _add(out, r, c * (-1) ** (n * i))
    return out


def oracle(generators, one) -> dict:
    """``B(x_1 * B(x_2) * ... * B(x_n))`` for polynomial generators x_i."""
    acc = {(generators[0],): Fraction(1)}
    for x in generators[1:]:
        acc = shuffle_product(acc, connes_B({(x,): Fraction(1)}, one))
    return connes_B(acc, one)
