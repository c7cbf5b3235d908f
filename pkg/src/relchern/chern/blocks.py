"""Per-block Chern characters for a triangular block T = T_n^sigma(A, I).

Source: the relative normalized bar complex of the block group, modelled as
``B(U t)_norm / F_N`` in degrees >= 1 (the group algebra and the enveloping
algebra have the same quotient by the N-th power of the augmentation ideal).

Two targets are built:

* the block level ``HN(Q + T, T)_norm / F_N`` (T-adic weights), where
  ``j c`` and ``B rho sw`` are compared directly;
* the trace level ``HN(A, I)_norm / K`` with ``K = tr(F_N HN(Q + T))``.
  For an augmented A (A = Q.1 + I) every tensor of I-adic weight >= N lies
  in K (place the factors on the (1, 1) entry), so K contains the I-adic
  ``F_N`` and only finitely many low degrees need explicit generators.

Both maps descend because c, j, sw, rho, B and tr never lower the weight.
"""

from __future__ import annotations

from itertools import product as iproduct

from ..exactlin import Vector
from ..algebra.assoc import AlgebraError
from ..algebra.triangular import TriangularSpec, build_triangular
from ..complexes.core import HNComplex, QuotientComplex, lin
from ..complexes.cyclic import CyclicAlgebraComplex
from ..complexes.maps import ChainHomotopy, ChainMap
from ..complexes.tensors import project_normalized
from .sw import SWComparison
from .tau import CLift
from .trace import BlockMaps


class BlockComparison:
    def __init__(self, spec: TriangularSpec, P: int, N: int):
        self.spec = spec
        self.P, self.N = P, N
        self.block = build_triangular(spec)
        if not self.block.base_algebra.augmented:
            raise AlgebraError("block comparison needs an augmented base algebra A = Q.1 + I")
        self.swc = SWComparison(self.block.lie, N)
        self.U, self.bar = self.swc.U, self.swc.bar
        self.maps = BlockMaps(self.block, self.U, N)
        self.clift = CLift(self.bar, P)
        self.source = self.swc.bar_complex(low=1)
        # block level
        self.lam = self.block.algebra.with_truncation(N)
        self.cyc_lam = CyclicAlgebraComplex(self.lam)
        self.hn_lam = HNComplex(self.cyc_lam.mixed(normalized=True, relative=True), P)
        # trace level
        self.A = self.block.base_algebra.with_truncation(N)
        self.cyc_A = CyclicAlgebraComplex(self.A)
        self.hn_A = HNComplex(self.cyc_A.mixed(normalized=True, relative=True), P)
        self.target = QuotientComplex(self.hn_A, self._K, name="HN(A,I)_norm/K")

    # -- the subcomplex K = tr(F_N) ------------------------------------------------

    def _K(self, n):
        lam = self.block.algebra
        keys, reduced = lam.keys, lam.keys[1:]
        out = []
        for i in range(self.P + 1):
            m = n + 2 * i
            if m > self.N - 1:
                continue  # C_m(A)_norm / F_N vanishes
            for t in iproduct(keys, *([reduced] * m)):
                if sum(lam.weight(a) for a in t) < self.N:
                    continue
                v = self.tr_norm(Vector.basis(t))
                if v:
                    out.append(HNComplex.lift(v, i))
        return out

    # -- building blocks -------------------------------------------------------------

    def tr_norm(self, v) -> Vector:
        """Trace into C(A)_norm / F_N."""
        return project_normalized(self.A, self.cyc_A.prune(self.maps.trace_vec(v)))

    def jc(self, w) -> Vector:
        out = Vector()
        for (i, u), c in self.clift(w).items():
            for t, x in project_normalized(self.lam, self.maps.j_tensor(u)).items():
                out.add_term((i, t), c * x)
        return out

    def b_rho_sw(self, w) -> Vector:
        ce = self.swc.ce
        rho = lin(lambda I: self.maps.rho(ce, I), self.swc.sw(w))
        return HNComplex.lift(lin(self.cyc_lam.B_norm, rho), 0)

    def _push(self, w, v) -> Vector:
        n = len(w)
        out = Vector()
        for i, col in self.hn_lam.coordinates(v).items():
            out.axpy(HNComplex.lift(self.tr_norm(col), i))
        return self.target.project(n, out)

    def ch_minus(self, w) -> Vector:
        """``tr . j . c``."""
        return self._push(w, self.jc(w))

    def ch_rht(self, w) -> Vector:
        """``tr . (B rho) . sw``."""
        return self._push(w, self.b_rho_sw(w))

    # -- chain maps --------------------------------------------------------------------

    def block_maps(self):
        return (ChainMap("j.c", self.source, self.hn_lam, self.jc, low=1),
                ChainMap("B.rho.sw", self.source, self.hn_lam, self.b_rho_sw, low=1))

    def trace_maps(self):
        return (ChainMap("ch-", self.source, self.target, self.ch_minus, low=1),
                ChainMap("ch_rht", self.source, self.target, self.ch_rht, low=1,
                         notes={"sw": "comparison map built by lifting through a contraction"}))

    def push_homotopy(self, h: ChainHomotopy, f: ChainMap, g: ChainMap) -> ChainHomotopy:
        """``tr . h``: a block-level homotopy pushed to the trace-level target."""
        maps = {}
        for n, hn in h.maps.items():
            for k, v in hn.items():
                out = Vector()
                for i, col in self.hn_lam.coordinates(v).items():
                    out.axpy(HNComplex.lift(self.tr_norm(col), i))
                maps.setdefault(n, {})[k] = self.target.project(n + 1, out)
        return ChainHomotopy(f, g, maps, h.window)

    def relative_tensor(self, t) -> bool:
        """A tensor over A lies in C(A, I) when some factor is in I."""
        return any(self.A.weight(a) >= 1 for a in t)

    def relative_ok(self, v) -> bool:
        """Every tensor of a chain (HN keys ``(i, t)`` or bare tensors) is relative."""
        return all(self.relative_tensor(k[1] if isinstance(k[0], int) else k) for k in v)

    def absolute_degree0(self) -> dict:
        """c(1) pushed through j and tr, before and after restriction to the relative part."""
        col = self.clift(())
        full = Vector()
        for (i, u), c in col.items():
            full.axpy(HNComplex.lift(self.maps.trace_vec(self.maps.j_tensor(u)), i), c)
        rel = Vector(((i, t), c) for (i, t), c in full.items() if self.relative_tensor(t))
        return {"absolute": full, "relative": rel}
