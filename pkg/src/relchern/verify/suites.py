"""Identity suites: every structural identity of the library, checked exactly on finite slices.

Each suite is a function ``(instances, caps) -> list[CheckResult]`` registered
under a fixed label.  The labels are an external interface of the CLI and
the reports; ``resolve_label`` also accepts a few ASCII spellings.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Callable

from ..exactlin import Vector, render
from ..algebra.assoc import FiniteAlgebra
from ..algebra.lie import LieAlgebraSpec
from ..algebra.triangular import build_triangular
from ..complexes.bar import BarComplex
from ..complexes.checks import b_slice, c_slice, check_slice, e_slice, r_slice
from ..complexes.core import HNComplex, MixedComplex, lin
from ..complexes.cyclic import CyclicAlgebraComplex
from ..complexes.maps import ChainMap
from ..complexes.tensors import project_normalized
from ..hopf import build_enveloping_hopf, build_group_hopf, check_hopf_axioms, cyclic_group
from ..chern.ce import CE, PsiTheta
from ..chern.shuffle import oracle
from ..chern.sw import SWComparison
from ..chern.tau import CLift, tau, tau_norm, tau_rank_certificate
from ..chern.upsilon import Upsilon, expected_upsilon_constant, upsilon_of_one
from .compare import compare_chern
from .engine import check_chain_map, find_homotopy, verify_certificate, verify_homotopy
from .instances import Caps, Instances, group_samples, suite_truncation
from .report import CheckResult



# -- instance helpers ---------------------------------------------------------------


@dataclass
class HopfCase:
    name: str
    bar: BarComplex
    finite: bool          # enumerable basis
    samples: list | None = None  # group elements to build tuples from, when not finite


def hopf_cases(inst: Instances, caps: Caps, with_groups: bool = True) -> list[HopfCase]:
    out = []
    for name, lie in inst.lie:
        N = suite_truncation(lie, caps)
        out.append(HopfCase(f"U({name})/F{N}", BarComplex(build_enveloping_hopf(lie, N)), True))
    if with_groups:
        out.append(HopfCase("Q[C3]", BarComplex(build_group_hopf(cyclic_group(3))), True))
        for name, lie in inst.lie:
            G = build_group_hopf(lie)
            samples = [G.group.element(c) for c in group_samples(lie.dim, inst.group_samples)]
            out.append(HopfCase(f"Q[exp {name}] (sampled)", BarComplex(G), False, samples))
    return out


SAMPLED_DEGREE = 3


def _e_keys(case: HopfCase, n: int, normalized: bool):
    if case.finite:
        return case.bar.e_basis(n, normalized)
    if n > SAMPLED_DEGREE:
        return []
    one = case.bar.one
    if normalized:
        return [(one,) + w for w in iproduct(case.samples, repeat=n)]
    pool = [one] + case.samples
    return [(g,) + w for g in pool for w in iproduct(pool, repeat=n)]


def _b_keys(case: HopfCase, n: int, normalized: bool = True):
    if case.finite:
        return case.bar.b_basis(n, normalized)
    if n > SAMPLED_DEGREE:
        return []
    pool = case.samples if normalized else [case.bar.one] + case.samples
    return list(iproduct(pool, repeat=n))


def ce_lies(inst: Instances) -> list:
    out = list(inst.lie)
    for name, spec in inst.blocks:
        out.append((f"t({name})", build_triangular(spec).lie))
    return out


def wedge_complete_truncation(lie: LieAlgebraSpec, caps: Caps, top: int) -> int:
    """Smallest N >= the caps' truncation keeping every wedge of degree <= top."""
    ce = CE(lie, None)
    w = sorted(ce.weights, reverse=True)
    need = sum(w[:min(top, lie.dim)]) + 1
    return max(suite_truncation(lie, caps), need)


def _first_failure(keys, test):
    """Run ``test`` over keys; return (ok, witness, count)."""
    count = 0
    for k in keys:
        count += 1
        if not test(k):
            return False, k, count
    return True, None, count


def _from_dict(name, instance, res, expected_fail=False) -> CheckResult:
    detail = {k: v for k, v in res.items() if k not in ("ok", "witness")}
    return CheckResult(name, instance, bool(res["ok"]), expected_fail, res.get("witness"), detail)


def _cr(name, instance, ok, witness=None, count=None, **detail) -> CheckResult:
    if count is not None:
        detail["checked"] = count
    return CheckResult(name, instance, ok, False, None if witness is None else render(witness), detail)


# -- suites ---------------------------------------------------------------------------


def suite_cyclic_axioms(inst: Instances, caps: Caps) -> list:
    """Simplicial and cyclic identities of E(H), B(H), R(H) and C(A)."""
    out = []
    D = caps.degree
    cases = [c for c in hopf_cases(inst, caps) if c.finite]
    for case in cases:
        for s in (e_slice(case.bar), b_slice(case.bar), r_slice(case.bar), c_slice(CyclicAlgebraComplex(case.bar.h))):
            for k, v in check_slice(s, D).items():
                out.append(_from_dict(k, case.name, v))
    for name, spec in inst.algebras:
        for k, v in check_slice(c_slice(CyclicAlgebraComplex(FiniteAlgebra(spec))), D).items():
            out.append(_from_dict(k, name, v))
    return out


def suite_alpha_beta(inst: Instances, caps: Caps) -> list:
    out = []
    for case in hopf_cases(inst, caps):
        bar = case.bar
        keys = [t for n in range(caps.degree + 1) for t in _e_keys(case, n, False)]
        ok, w, c = _first_failure(keys, lambda t: lin(bar.alpha, bar.beta(t)) == Vector.basis(t))
        out.append(_cr("alpha.beta = id", case.name, ok, w, c))
        ok, w, c = _first_failure(keys, lambda t: lin(bar.beta, bar.alpha(t)) == Vector.basis(t))
        out.append(_cr("beta.alpha = id", case.name, ok, w, c))
        ok, w, c = _first_failure(keys, lambda t: bar.t_conjugated(t) == bar.t_closed(t))
        out.append(_cr("t = beta.lambda.alpha", case.name, ok, w, c))
    return out


def _normalized_e(case, caps):
    return [t for n in range(caps.degree + 1) for t in _e_keys(case, n, True)]


def suite_bprime_forms(inst: Instances, caps: Caps) -> list:
    out = []
    for case in hopf_cases(inst, caps):
        bar = case.bar
        keys = _normalized_e(case, caps)
        ok, w, c = _first_failure(keys, lambda t: bar.Bprime(t, "defining") == bar.Bprime(t, "B''"))
        out.append(_cr("B' (defining) = B''", case.name, ok, w, c))
    return out


def suite_bprime_explicit(inst: Instances, caps: Caps) -> list:
    out = []
    for case in hopf_cases(inst, caps):
        bar = case.bar
        keys = _normalized_e(case, caps)
        ok, w, c = _first_failure(keys, lambda t: bar.Bprime(t, "explicit") == bar.Bprime(t, "defining"))
        out.append(_cr("B' (explicit) = B' (defining)", case.name, ok, w, c))
        if case.finite:
            for label, v in bar.e_mixed().check_axioms(caps.degree).items():
                out.append(_from_dict(f"M'(H) {label}", case.name, v))
            for label, v in bar.b_mixed().check_axioms(caps.degree).items():
                out.append(_from_dict(f"M(H) {label}", case.name, v))
    return out


def suite_bprime_primitive(inst: Instances, caps: Caps) -> list:
    out = []
    for case in hopf_cases(inst, caps, with_groups=False):
        bar, U = case.bar, case.bar.h
        gens = [U.generator(i) for i in range(U.lie.dim)]
        keys = []
        for n in range(1, caps.degree + 1):
            for h in U.basis(U.truncation):
                for xs in iproduct(gens, repeat=n):
                    if bar.ok((h,) + xs):
                        keys.append((h,) + xs)
        for form in ("defining", "B''", "explicit"):
            ok, w, c = _first_failure(keys, lambda t: not bar.Bprime(t, form))
            out.append(_cr(f"B'(h (x) primitives) = 0 [{form}]", case.name, ok, w, c))
    return out


def suite_upsilon_one(inst: Instances, caps: Caps) -> list:
    out = []
    for case in hopf_cases(inst, caps):
        got = upsilon_of_one(case.bar, 3)
        want = [expected_upsilon_constant(n) for n in range(4)]
        out.append(_cr("Upsilon'^n(1) = (-1)^n (2n)!/n! [1]^(2n+1), n <= 3", case.name, got == want,
                       constants=[str(x) for x in got]))
        ups = Upsilon(case.bar)
        ok = all(not ups.column(n, (case.bar.one,)) for n in range(1, 4))
        out.append(_cr("normalized Upsilon'(1) = (..., 0, 1)", case.name, ok))
    return out


def _hn_map_checks(name, case_name, source, mixed, fn_of_P, caps, low=0) -> list:
    """Chain-map check at P and P+1 plus agreement of the shared coordinates."""
    P, D = caps.columns, caps.degree
    out = []
    res = check_chain_map(ChainMap(name, source, HNComplex(mixed, P), fn_of_P(P), low=low), D)
    out.append(_from_dict(f"{name} is a (b+B)-chain map, P={P}", case_name, res))
    res1 = check_chain_map(ChainMap(name, source, HNComplex(mixed, P + 1), fn_of_P(P + 1), low=low), D)
    f0, f1 = fn_of_P(P), fn_of_P(P + 1)
    keys = [k for n in range(low, D + 1) for k in source.basis(n)]
    ok, w, c = _first_failure(keys, lambda k: Vector((ik, x) for ik, x in f1(k).items() if ik[0] <= P) == f0(k))
    out.append(_cr(f"{name} stable at P+1", case_name, ok and res1["ok"], w, c))
    return out


def _case_caps(case: HopfCase, caps: Caps) -> Caps:
    """Untruncated (group) algebras grow factorially in the HN columns; cap them at 2."""
    if case.bar.N is not None:
        return caps
    return Caps(min(caps.degree, 2), min(caps.columns, 2), caps.truncation)


def suite_upsilon(inst: Instances, caps: Caps) -> list:
    out = []
    for case in hopf_cases(inst, caps):
        if not case.finite:
            continue
        bar = case.bar
        caps_c = _case_caps(case, caps)
        D, P = caps_c.degree, caps_c.columns
        ups = Upsilon(bar)
        keys = [t for n in range(D + 1) for t in bar.e_basis(n)]
        ok, w, c = _first_failure(keys, lambda t: HNComplex.pi(ups(t, P)) == Vector.basis(t))
        out.append(_cr("pi' Upsilon' = 1", case.name, ok, w, c))
        out += _hn_map_checks("Upsilon'", case.name, bar.e_complex(), bar.e_mixed(), lambda P: lambda t: ups(t, P), caps_c)
        bkeys = [w for n in range(D + 1) for w in bar.b_basis(n)]
        ok, w, c = _first_failure(bkeys, lambda x: HNComplex.pi(ups.on_bar(x, P)) == Vector.basis(x))
        out.append(_cr("pi Upsilon = 1", case.name, ok, w, c))
        out += _hn_map_checks("Upsilon", case.name, bar.b_complex(), bar.b_mixed(),
                              lambda P: lambda x: ups.on_bar(x, P), caps_c)
        raw = Upsilon(bar, normalized=False)
        m_raw = MixedComplex(lambda n: bar.e_basis(n, False), bar.boundary,
                             lambda t: bar.Bprime(t, "defining", False), name="E(H)")
        res = check_chain_map(ChainMap("Upsilon' (unnormalized)", bar.e_complex(False), HNComplex(m_raw, P),
                                       lambda t: raw(t, P)), min(D, 3))
        out.append(_from_dict("unnormalized Upsilon' is a (b+B)-chain map", case.name, res))
    return out


def _naturality(case: HopfCase, N: int, P: int, words) -> CheckResult:
    """``emb_* c_G = c_U emb_*`` for the embedding Q[G] -> U/F_N."""
    G = case.bar.h
    U, emb = G.embedding(N)
    barU = BarComplex(U)
    cU, cG = CLift(barU, P), CLift(case.bar, P)

    def emb_tensor(t, first):
        v = Vector.basis(())
        for g in t:
            img = emb(g)
            v = barU.prune(Vector((a + (k,), x * y) for a, x in v.items() for k, y in img.items()))
        return project_normalized(U, v, first)

    for w in words:
        lhs = Vector()
        for (i, u), c in cG(w).items():
            lhs.axpy(HNComplex.lift(emb_tensor(u, 1), i), c)
        rhs = cU.vec(emb_tensor(w, 0))
        if lhs != rhs:
            return _cr(f"naturality of c along Q[G] -> U/F{N}", case.name, False, w)
    return _cr(f"naturality of c along Q[G] -> U/F{N}", case.name, True, count=len(words))


def suite_gw_lift(inst: Instances, caps: Caps) -> list:
    out = []
    for case in hopf_cases(inst, caps):
        bar = case.bar
        caps_c = _case_caps(case, caps)
        D, P = caps_c.degree, caps_c.columns
        c = CLift(bar, P)
        if case.finite:
            keys = [w for n in range(D + 1) for w in bar.b_basis(n)]
            ok, w, n = _first_failure(keys, lambda x: HNComplex.pi(c(x)) == tau_norm(bar, x))
            out.append(_cr("pi c = tau", case.name, ok, w, n))
            out += _hn_map_checks("c", case.name, bar.b_complex(), c.mixed,
                                  lambda Q: (lambda x: c(x)) if Q == P else CLift(bar, Q), caps_c)
        else:
            keys = [w for n in range(min(D, 2) + 1) for w in _b_keys(case, n)]
            ok, w, n = _first_failure(keys, lambda x: HNComplex.pi(c(x)) == tau_norm(bar, x))
            out.append(_cr("pi c = tau (sampled)", case.name, ok, w, n))
            g = case.samples[0]
            ginv = bar.h.group.inverse(g)
            diff = tau(bar, (g,)) - tau(bar, (bar.one,))
            want = Vector({(ginv, g): 1, (bar.one, bar.one): -1})
            out.append(_cr("tau(g - 1) = g^-1 (x) g - 1 (x) 1", case.name, diff == want, None if diff == want else (g,)))
            out.append(_cr("pi c(g - 1) = tau(g - 1) (normalized)", case.name,
                           HNComplex.pi(c((g,))) == project_normalized(bar.h, want)))
            lie = bar.h.group.lie
            words = [w for n in range(1, 3) for w in _b_keys(case, n)][:6]
            out.append(_naturality(case, suite_truncation(lie, caps), min(P, 2), words))
        out.append(_cr("c(1) = (..., 0, 1)", case.name, c(()) == Vector({(0, (bar.one,)): 1})))
    return out


def suite_tau(inst: Instances, caps: Caps) -> list:
    out = []
    D = caps.degree
    for case in hopf_cases(inst, caps):
        bar = case.bar
        cyc = CyclicAlgebraComplex(bar.h)
        bs, cs = b_slice(bar), c_slice(cyc)
        T = lambda v: lin(lambda u: tau(bar, u), v)
        keys = [w for n in range(D + 1) for w in _b_keys(case, n, False)]

        def commutes(w):
            n = len(w)
            tw = tau(bar, w)
            for i in range(n + 1):
                if n > 0 and T(bs.face(w, i)) != lin(lambda u: cs.face(u, i), tw):
                    return False
                if T(bs.degeneracy(w, i)) != lin(lambda u: cs.degeneracy(u, i), tw):
                    return False
            return T(bs.cyc(w)) == lin(cs.cyc, tw)

        ok, w, c = _first_failure(keys, commutes)
        out.append(_cr("tau commutes with faces, degeneracies and t", case.name, ok, w, c))
        out.append(_cr("tau(empty word) = 1", case.name, tau(bar, ()) == Vector.basis((bar.one,))))
        if case.finite:
            for normalized in (True, False):
                for n in range(D + 1):
                    r = tau_rank_certificate(bar, n, normalized)
                    kind = "normalized" if normalized else "unnormalized"
                    out.append(_cr(f"tau injective in degree {n} ({kind})", case.name, r["injective"],
                                   rank=r["rank"], dim=r["dim"]))
        if not case.finite:
            G = bar.h.group

            def grouplike(w):
                prod = bar.one
                for g in w:
                    prod = G.mul(prod, g)
                return tau(bar, w) == Vector.basis((G.inverse(prod),) + w)

            ok, w, c = _first_failure([w for w in keys if w], grouplike)
            out.append(_cr("tau(g_1..g_n) = (g_1...g_n)^-1 (x) g_1 (x) ... (x) g_n", case.name, ok, w, c))
    return out


def suite_tau_primitive(inst: Instances, caps: Caps) -> list:
    out = []
    for case in hopf_cases(inst, caps, with_groups=False):
        bar, U = case.bar, case.bar.h
        gens = [U.generator(i) for i in range(U.lie.dim)]
        keys = [w for n in range(1, caps.degree + 1) for w in iproduct(gens, repeat=n) if bar.ok(w)]
        ok, w, c = _first_failure(keys, lambda x: tau_norm(bar, x) == Vector.basis((bar.one,) + x))
        out.append(_cr("tau(x_1..x_n) = 1 (x) x_1 (x) ... (x) x_n on primitives", case.name, ok, w, c))
    return out


def _ce_cases(inst, caps, complete: bool):
    for name, lie in ce_lies(inst):
        N = wedge_complete_truncation(lie, caps, caps.degree) if complete else suite_truncation(lie, caps)
        ce = CE(lie, N)
        bar = BarComplex(ce.U)
        yield f"{name} N={N}", ce, bar


def suite_psi(inst: Instances, caps: Caps) -> list:
    out = []
    D, P = caps.degree, caps.columns
    for name, ce, bar in _ce_cases(inst, caps, complete=True):
        U = ce.U
        bd = lambda w: project_normalized(U, bar.b_boundary(w), 0)
        keys = [I for n in range(1, D + 1) for I in ce.wedge_basis(n)]
        ok, w, c = _first_failure(keys, lambda I: lin(bd, ce.e(I)) == lin(ce.e, ce.d(I)))
        out.append(_cr("e d = d e", name, ok, w, c))
        ok, w, c = _first_failure(keys, lambda I: not lin(bar.b_B, ce.e(I)))
        out.append(_cr("B e = 0 (psi is well defined)", name, ok, w, c))
    for name, ce, bar in _ce_cases(inst, caps, complete=False):
        pt = PsiTheta(ce, bar, None, P)
        res = check_chain_map(ChainMap("psi", ce.complex(), HNComplex(bar.b_mixed(), P), pt.psi), D)
        out.append(_from_dict("psi is a chain map", name, res))
        R = ce.resolution()
        keys = [k for n in range(1, D + 1) for k in R.basis(n)]
        ok, w, c = _first_failure(keys, lambda k: lin(bar.boundary, ce.one_e(k)) == lin(ce.one_e, ce.dprime(k)))
        out.append(_cr("(1 (x) e) d' = d' (1 (x) e)", name, ok, w, c))
        ok, w, c = _first_failure(keys, lambda k: not lin(lambda t: bar.Bprime(t), ce.one_e(k)))
        out.append(_cr("B'(1 (x) e) = 0", name, ok, w, c))
        res = check_chain_map(ChainMap("psi'", R, HNComplex(bar.e_mixed(), P), pt.psi_prime), D)
        out.append(_from_dict("psi' is a chain map", name, res))
    return out


def suite_theta(inst: Instances, caps: Caps) -> list:
    out = []
    for name, ce, bar in _ce_cases(inst, caps, complete=True):
        cyc = CyclicAlgebraComplex(ce.U)
        pt = PsiTheta(ce, bar, cyc, caps.columns)
        keys = [I for n in range(2, caps.degree + 2) for I in ce.wedge_basis(n)]
        ok, w, c = _first_failure(keys, lambda I: cyc.connes_equal(lin(cyc.b, pt.theta(I)),
                                                                   lin(pt.theta, ce.d(I)).scale(-1)))
        out.append(_cr("b theta = -theta d modulo (1 - t)", name, ok, w, c))
    return out


def suite_theta_c(inst: Instances, caps: Caps) -> list:
    out = []
    for name, ce, bar in _ce_cases(inst, caps, complete=True):
        cyc = CyclicAlgebraComplex(ce.U)
        pt = PsiTheta(ce, bar, cyc, caps.columns)
        keys = [I for n in range(1, caps.degree + 1) for I in ce.wedge_basis(n)]
        ok, w, c = _first_failure(keys, lambda I: pt.tau_psi(I) == pt.B_theta(I))
        out.append(_cr("tau psi = B theta on positive degrees", name, ok, w, c))
        ok, w, c = _first_failure(keys, lambda I: pt.tau_psi(I) == pt.taux(I))
        out.append(_cr("tau psi = 1 (x) e on positive degrees", name, ok, w, c))
        lhs, rhs = pt.tau_psi(()), pt.B_theta(())
        out.append(CheckResult("tau psi = B theta in degree 0", name, lhs == rhs, True, "()",
                               {"tau_psi": lhs, "B_theta": rhs}))
        if not ce.lie.brackets:
            out.append(_shuffle_check(name, ce, pt))
    return out


def _shuffle_check(name, ce, pt) -> CheckResult:
    """Independent shuffle-product oracle (abelian case, generators distinct)."""
    U = ce.U
    dim = ce.lie.dim
    for n in range(1, min(dim, 3) + 1):
        I = tuple(range(n))
        if I not in ce.wedge_basis(n):
            continue
        gens = [U.generator(i) for i in I]
        got = {w: c for (i, w), c in pt.tau_psi(I).items() if i == 0}
        want = oracle(gens, U.one)
        if got != want:
            return _cr("tau psi = shuffle oracle B(x_1 * B x_2 * ... * B x_n)", name, False, I)
    return _cr("tau psi = shuffle oracle B(x_1 * B x_2 * ... * B x_n)", name, True)


def _homotopy_check(label, name, f, g, window) -> CheckResult:
    h = find_homotopy(f, g, window)
    if h:
        res = verify_homotopy(h)
        return CheckResult(label, name, res["ok"], False, None, {"window": window, "reverified": res["ok"]})
    return CheckResult(label, name, False, False, None,
                       {"window": window, "certificate": h.certificate,
                        "certificate_verifies": verify_certificate(f, g, window, h.certificate)})


def suite_ce_taupsi(inst: Instances, caps: Caps) -> list:
    out = []
    D, P = caps.degree, caps.columns
    for name, ce, bar in _ce_cases(inst, caps, complete=False):
        cl = CLift(bar, P)
        cyc = cl.cyclic
        pt = PsiTheta(ce, bar, cyc, P)
        wedge = ce.complex()
        ce_map = ChainMap("c.e", wedge, cl.hn, lambda I: cl.vec(ce.e(I)))
        tp = ChainMap("tau.psi", wedge, cl.hn, pt.tau_psi)
        for m in (ce_map, tp):
            out.append(_from_dict(f"{m.name} is a chain map", name, check_chain_map(m, D)))
        out.append(_homotopy_check("c.e ~ tau.psi", name, ce_map, tp, D))
        ups = Upsilon(bar)
        R = ce.resolution()
        hn = HNComplex(bar.e_mixed(), P)
        a = ChainMap("Upsilon'.(1 (x) e)", R, hn, lambda k: lin(lambda t: ups(t, P), ce.one_e(k)))
        b = ChainMap("psi'", R, hn, pt.psi_prime)
        out.append(_homotopy_check("Upsilon'.(1 (x) e) ~ psi'", name, a, b, D))
    return out


def _sw_cases(inst: Instances, caps: Caps):
    for name, lie in inst.lie:
        N = suite_truncation(lie, caps)
        yield f"{name} N={N}", SWComparison(lie, N)


def suite_nil2(inst: Instances, caps: Caps) -> list:
    out = []
    D = caps.degree
    for name, S in _sw_cases(inst, caps):
        sw, e, ident = S.maps()
        for m in (sw, e):
            out.append(_from_dict(f"{m.name} is a chain map", name, check_chain_map(m, D)))
        out.append(_homotopy_check("id ~ e.sw", name, ident, sw.then(e), D))
        idW = ChainMap("id", e.source, e.source, Vector.basis)
        out.append(_homotopy_check("sw.e ~ id", name, idW, e.then(sw), D))
    return out


def suite_nil1(inst: Instances, caps: Caps) -> list:
    out = []
    D, P = caps.degree, caps.columns
    for name, S in _sw_cases(inst, caps):
        sw, e, _ = S.maps()
        cl = CLift(S.bar, P)
        c = ChainMap("c", sw.source, cl.hn, cl)
        out.append(_from_dict("c is a chain map", name, check_chain_map(c, D)))
        out.append(_homotopy_check("c ~ c.e.sw", name, c, sw.then(e).then(c), D))
    return out


def suite_blocks(inst: Instances, caps: Caps) -> list:
    out = []
    for name, spec in inst.blocks:
        report, _ = compare_chern(spec, caps, name=name)
        out += report
    return out


def suite_hopf_axioms(inst: Instances, caps: Caps) -> list:
    out = []
    for case in hopf_cases(inst, caps):
        h = case.bar.h
        basis = h.basis(h.truncation) if case.finite else [h.one] + case.samples
        for axiom, v in check_hopf_axioms(h, basis).items():
            out.append(_from_dict(axiom, case.name, v))
    return out


@dataclass
class Suite:
    label: str
    title: str
    fn: Callable
    uses_sw: bool = False


SUITES = [
    Suite("map:t", "simplicial and cyclic identities of E(H), B(H), R(H), C(A)", suite_cyclic_axioms),
    Suite("lem:ab", "alpha and beta are inverse and conjugate t to the product-resolution rotation", suite_alpha_beta),
    Suite("rem:B′=B″", "the defining B' agrees with B''", suite_bprime_forms),
    Suite("map:B′", "the explicit formula for B' and the mixed-complex identities", suite_bprime_explicit),
    Suite("B′(prim)", "B' vanishes on h (x) primitives", suite_bprime_primitive),
    Suite("ex:Upsilon(1)", "constants of Upsilon'(1)", suite_upsilon_one),
    Suite("lem:Upsilon", "Upsilon' and Upsilon are HN lifts of the identity", suite_upsilon),
    Suite("map:tau", "tau is an injective cyclic map", suite_tau),
    Suite("lem:taux", "tau on primitives", suite_tau_primitive),
    Suite("thm:gwlift", "c = tau.Upsilon lifts tau to HN", suite_gw_lift),
    Suite("map:psi", "e, 1 (x) e, psi and psi' are chain maps", suite_psi),
    Suite("θ-lemma", "theta is a chain map up to sign", suite_theta),
    Suite("thm:theta=c", "tau psi = B theta on positive degrees", suite_theta_c),
    Suite("lem:ce=taupsi", "c.e and tau.psi are homotopic", suite_ce_taupsi),
    Suite("prop:nil1", "c and c.e.sw are homotopic", suite_nil1, uses_sw=True),
    Suite("lem:nil2", "sw is a homotopy inverse of e", suite_nil2, uses_sw=True),
    Suite("lem:jc-ch", "per-block comparison of the two Chern characters", suite_blocks, uses_sw=True),
]

HOPF_AXIOMS = Suite("hopf-axioms", "Hopf algebra axioms on the instances", suite_hopf_axioms)

_BY_LABEL = {s.label: s for s in SUITES}
_BY_LABEL[HOPF_AXIOMS.label] = HOPF_AXIOMS
_ASCII = {"rem:B'=B''": "rem:B′=B″", "map:B'": "map:B′", "B'(prim)": "B′(prim)", "theta-lemma": "θ-lemma"}


def resolve_label(label: str) -> Suite:
    label = _ASCII.get(label, label)
    if label not in _BY_LABEL:
        raise KeyError(label)
    return _BY_LABEL[label]


def suite_labels() -> list[str]:
    return [s.label for s in SUITES]
