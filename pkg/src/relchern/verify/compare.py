"""Per-block comparison of ch- = tr.j.c with ch_rht = tr.(B rho).sw."""

from __future__ import annotations

from ..algebra.triangular import TriangularSpec, build_triangular
from ..chern.blocks import BlockComparison
from ..complexes.core import HNComplex
from .engine import check_chain_map, find_homotopy, homotopy_to_json, verify_certificate, verify_homotopy
from .instances import Caps, truncation_for
from .report import CheckResult

SW_NOTE = ("sw is an arbitrary U-linear comparison map built from an exact contraction of the "
           "truncated Chevalley-Eilenberg resolution; statements involving it hold up to homotopy")


def block_truncation(spec: TriangularSpec, caps: Caps) -> int:
    return truncation_for(build_triangular(spec).lie, caps)


def _hcheck(label, name, f, g, D):
    h = find_homotopy(f, g, D)
    if h:
        res = verify_homotopy(h)
        return h, CheckResult(label, name, res["ok"], detail={"window": D, "reverified": res["ok"]})
    return None, CheckResult(label, name, False, detail={
        "window": D, "certificate": h.certificate,
        "certificate_verifies": verify_certificate(f, g, D, h.certificate),
        "note": "no homotopy inside this window; a larger window is not ruled out"})


def compare_chern(spec: TriangularSpec, caps: Caps, name: str | None = None):
    """Run the block comparison; return ``(checks, witness)``.

    ``witness`` holds the serialized trace-level homotopy (or the
    inconsistency certificate) together with the window and caps.
    """
    D, P = caps.degree, caps.columns
    N = block_truncation(spec, caps)
    name = name or f"T{spec.n}"
    inst = f"{name} N={N}"
    bc = BlockComparison(spec, P, N)
    out = []
    f, g = bc.block_maps()
    for m in (f, g):
        out.append(CheckResult(f"{m.name} is a chain map (block level)", inst, check_chain_map(m, D)["ok"]))
    h_block, chk = _hcheck("j.c ~ B.rho.sw (block level)", inst, f, g, D)
    out.append(chk)
    F, G = bc.trace_maps()
    for m in (F, G):
        res = check_chain_map(m, D)
        out.append(CheckResult(f"{m.name} is a chain map", inst, res["ok"], witness=res.get("witness")))
    h, chk = _hcheck("ch- ~ ch_rht", inst, F, G, D)
    out.append(chk)
    if h_block:
        pushed = verify_homotopy(bc.push_homotopy(h_block, F, G))
        out.append(CheckResult("traced block homotopy re-verifies", inst, pushed["ok"], witness=pushed["witness"]))

    words = [w for n in range(1, D + 1) for w in bc.source.basis(n)]
    rel_ok = all(bc.relative_ok(bc.maps.trace_vec(HNComplex.pi(bc.jc(w)))) for w in words)
    rel_ok = rel_ok and all(bc.relative_ok(bc.maps.trace_vec(HNComplex.pi(bc.b_rho_sw(w)))) for w in words)
    out.append(CheckResult("both characters land in the relative complex", inst, rel_ok))
    lam = bc.lam
    ce = bc.swc.ce
    rho_rel = all(any(lam.weight(a) >= 1 for a in t)
                  for k in range(1, D + 2) for I in ce.wedge_basis(k) for t in bc.maps.rho(ce, I))
    out.append(CheckResult("rho lands in the relative cyclic complex", inst, rho_rel))
    d0 = bc.absolute_degree0()
    out.append(CheckResult("traced c(1) has no relative part", inst, not d0["relative"],
                           detail={"absolute": d0["absolute"]}))

    witness = {"block": {"n": spec.n, "sigma": sorted(spec.sigma), "base_dim": spec.base.dim},
               "caps": {"degree": D, "columns": P, "truncation": N},
               "source_dims": [len(bc.source.basis(k)) for k in range(D + 2)],
               "target_dims": [len(bc.target.basis(k)) for k in range(D + 2)],
               "sw": SW_NOTE}
    if h:
        witness["homotopy"] = homotopy_to_json(h)
        witness["reverified"] = verify_homotopy(h)["ok"]
    else:
        witness["homotopy"] = None
        witness["reverified"] = False
    return out, witness
