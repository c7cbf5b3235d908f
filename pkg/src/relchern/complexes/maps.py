"""Chain maps and chain homotopies between finite slices."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..exactlin import Vector
from .core import ChainComplex, lin


@dataclass
class ChainMap:
    """A key-level map ``source_n -> target_(n + shift)``.

    ``sign`` declares the relation with the differentials:
    ``d f = sign * f d``.  ``low`` is the least source degree on which the
    map is asserted (below it the map is taken to be zero).
    """

    name: str
    source: ChainComplex
    target: ChainComplex
    fn: Callable
    shift: int = 0
    sign: int = 1
    low: int = 0
    notes: dict = field(default_factory=dict)

    def __call__(self, key) -> Vector:
        return self.fn(key)

    def vec(self, v) -> Vector:
        return lin(self.fn, v)

    def degree_of(self, n: int) -> int:
        return n + self.shift

    def then(self, other: "ChainMap", name=None) -> "ChainMap":
        """``other . self``."""
        return ChainMap(name or f"{other.name}.{self.name}", self.source, other.target,
                        lambda k: other.vec(self.fn(k)), self.shift + other.shift,
                        self.sign * other.sign, max(self.low, other.low - self.shift))


@dataclass
class ChainHomotopy:
    """Degreewise maps ``h_n: source_n -> target_(n+1)`` with ``f - g = d h + h d``."""

    f: ChainMap
    g: ChainMap
    maps: dict  # n -> {source key: Vector}
    window: int

    def __call__(self, n, key) -> Vector:
        return self.maps.get(n, {}).get(key, Vector())

    def vec(self, n, v) -> Vector:
        return lin(lambda k: self(n, k), v)
