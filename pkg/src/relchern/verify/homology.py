"""Homology dimension tables: Lie (Chevalley-Eilenberg), Hochschild and truncated HN."""

from __future__ import annotations

from ..algebra.assoc import AlgebraSpec, FiniteAlgebra
from ..algebra.lie import LieAlgebraSpec
from ..chern.ce import CE
from ..complexes.core import HNComplex, homology_table
from ..complexes.cyclic import CyclicAlgebraComplex


def lie_homology(lie: LieAlgebraSpec) -> dict:
    """Dimensions of H_k(g; Q), k = 0..dim, from the full complex (^g, d)."""
    dims = homology_table(CE(lie, None).complex(), lie.dim)
    return {"kind": "lie", "dims": dims}


def hochschild_homology(spec: AlgebraSpec, degree_cap: int, relative: bool = False) -> dict:
    cyc = CyclicAlgebraComplex(FiniteAlgebra(spec))
    dims = homology_table(cyc.hochschild(normalized=True, relative=relative), degree_cap)
    return {"kind": "hh", "dims": dims, "degree_cap": degree_cap, "relative": relative}


def hn_homology(spec: AlgebraSpec, degree_cap: int, columns: int, relative: bool = False) -> dict:
    """Column-truncated HN at P and P+1; ``stable[k]`` flags agreement in degree k."""
    mixed = CyclicAlgebraComplex(FiniteAlgebra(spec)).mixed(normalized=True, relative=relative)
    at_p = homology_table(HNComplex(mixed, columns), degree_cap)
    at_p1 = homology_table(HNComplex(mixed, columns + 1), degree_cap)
    return {"kind": "hn", "dims": at_p, "dims_next": at_p1, "stable": [a == b for a, b in zip(at_p, at_p1)],
            "degree_cap": degree_cap, "columns": columns, "relative": relative}
