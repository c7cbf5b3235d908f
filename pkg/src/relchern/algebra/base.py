"""Common interface for algebras with a distinguished basis.

Elements are :class:`~relchern.exactlin.Vector` objects over hashable basis
keys.  ``weight`` is the filtration degree of a basis key (the power of the
augmentation ideal, or of the chosen nilpotent ideal, that contains it); a
basis is always chosen so that each filtration step is spanned by the keys
of weight at least that step.  ``truncation`` is ``None`` (exact) or ``N``:
keys and tensors of total weight ``>= N`` are discarded.
"""

from __future__ import annotations

from fractions import Fraction

from ..exactlin import Vector, render


class Algebra:
    one = None
    truncation: int | None = None
    label = "algebra"

    def mul(self, a, b) -> Vector:
        raise NotImplementedError

    def weight(self, a) -> int:
        return 0

    def name(self, a) -> str:
        return render(a)

    def is_unit(self, a) -> bool:
        return a == self.one

    def unit(self) -> Vector:
        return Vector.basis(self.one)

    def mul_vec(self, u, v) -> Vector:
        out = Vector()
        for a, x in u.items():
            for b, y in v.items():
                out.axpy(self.mul(a, b), x * y)
        return out

    def prod(self, keys) -> Vector:
        """Ordered product of a sequence of basis keys."""
        acc = Vector.basis(self.one)
        for k in keys:
            acc = self.mul_vec(acc, {k: Fraction(1)})
        return acc

    def reduced_basis(self, max_weight=None):
        """Finite list of non-unit keys (of weight < max_weight if given)."""
        raise NotImplementedError

    def basis(self, max_weight=None):
        return [self.one] + list(self.reduced_basis(max_weight))

    def describe(self, v) -> str:
        if not v:
            return "0"
        return " + ".join(f"{render(c)}*{self.name(k)}" for k, c in sorted(v.items(), key=lambda kv: render(kv[0])))


class AugmentedAlgebra(Algebra):
    def counit(self, a) -> Fraction:
        raise NotImplementedError
