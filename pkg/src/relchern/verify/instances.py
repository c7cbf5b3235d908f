"""Named instances and caps shared by the suites, reports and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra.assoc import AlgebraSpec, dual_numbers
from ..algebra.lie import LieAlgebraSpec, abelian, heisenberg, validate_lie
from ..algebra.triangular import TriangularSpec, build_triangular
from ..complexes.checks import ConfigurationError


@dataclass(frozen=True)
class Caps:
    degree: int = 4
    columns: int = 3
    truncation: int | None = None  # None: nilpotency class + 1

    def __post_init__(self):
        if self.degree < 0:
            raise ConfigurationError("degree cap must be >= 0")
        if self.columns < 0:
            raise ConfigurationError("column cap must be >= 0")
        if self.truncation is not None and self.truncation < 1:
            raise ConfigurationError("truncation must be >= 1")

    def to_json(self) -> dict:
        return {"degree": self.degree, "columns": self.columns, "truncation": self.truncation}


def nilpotency_class(lie: LieAlgebraSpec) -> int:
    _, cls = validate_lie(lie)
    if cls == "not nilpotent":
        raise ConfigurationError("a truncation is required for a non-nilpotent Lie algebra")
    return max(int(cls), 1)


def truncation_for(lie: LieAlgebraSpec, caps: Caps) -> int:
    return caps.truncation if caps.truncation is not None else nilpotency_class(lie) + 1


def suite_truncation(lie: LieAlgebraSpec, caps: Caps) -> int:
    """Truncation for the identity suites: the caps' value, else ``max(class + 1, 3)``.

    With ``class + 1 = 2`` an abelian instance keeps only tensors of weight
    <= 1, which makes most identities vacuous.
    """
    if caps.truncation is not None:
        return caps.truncation
    return max(nilpotency_class(lie) + 1, 3)


@dataclass
class Instances:
    lie: list = field(default_factory=list)        # [(name, LieAlgebraSpec)]
    algebras: list = field(default_factory=list)   # [(name, AlgebraSpec)]
    blocks: list = field(default_factory=list)     # [(name, TriangularSpec)]
    group_samples: int = 3

    def block_lie(self, spec: TriangularSpec) -> LieAlgebraSpec:
        return build_triangular(spec).lie


def default_instances() -> Instances:
    return Instances(
        lie=[("heis", heisenberg()), ("abelian1", abelian(1)), ("abelian2", abelian(2))],
        algebras=[("dual", dual_numbers())],
        blocks=[("T1(dual)", TriangularSpec(1, frozenset(), dual_numbers())),
                ("T2{1<2}(dual)", TriangularSpec(2, frozenset({(1, 2)}), dual_numbers()))],
    )


def group_samples(dim: int, count: int) -> list[tuple]:
    """Deterministic small log-coordinates for sampled group elements."""
    pool = [Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(0), Fraction(3)]
    return [tuple(pool[(s * (dim + 1) + i + 1) % len(pool)] for i in range(dim)) for s in range(count)]


__all__ = ["AlgebraSpec", "Caps", "Instances", "default_instances", "group_samples", "nilpotency_class",
           "suite_truncation", "truncation_for"]
