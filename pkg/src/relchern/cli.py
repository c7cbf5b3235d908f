"""Command-line front end.

Exit codes: 0 when every non-expected-fail check passes, 1 on a check
failure, 2 on usage, parse or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from importlib import resources

from .algebra.triangular import build_triangular
from .complexes.checks import ConfigurationError
from .documents import Document, DocumentError, load_document
from .exactlin import Vector, render
from .verify.compare import SW_NOTE, compare_chern
from .verify.homology import hn_homology, hochschild_homology, lie_homology
from .verify.instances import Caps, Instances, default_instances, nilpotency_class, suite_truncation
from .verify.report import SuiteReport, VerificationReport, canonical_json, to_plain
from .verify.runner import caps_json, run_suites, select
from .verify.suites import HOPF_AXIOMS, resolve_label, suite_labels

EVAL_MAPS = ("tau", "c", "upsilon", "e", "psi", "theta", "B-theta", "tau-psi", "sw", "ch-minus", "ch-rht")


class UsageError(Exception):
    pass


# -- input handling ------------------------------------------------------------------


def _bundled(name: str):
    ref = resources.files("relchern") / "data" / name
    return ref if ref.is_file() else None


def read_input(path: str | None) -> Document | None:
    if path is None:
        return None
    if not os.path.exists(path):
        ref = _bundled(os.path.basename(path))
        if ref is None:
            raise UsageError(f"input file not found: {path}")
        with resources.as_file(ref) as p:
            return load_document(p)
    return load_document(path)


def resolve_caps(args, doc: Document | None) -> Caps:
    base = dict(doc.caps or {}) if doc else {}
    for flag, key in (("degree_cap", "degree"), ("column_cap", "columns"), ("truncation", "truncation")):
        v = getattr(args, flag, None)
        if v is not None:
            base[key] = v
    return Caps(base.get("degree", 4), base.get("columns", 3), base.get("truncation"))


def instances_from(doc: Document | None) -> Instances:
    if doc is None:
        return default_instances()
    inst = Instances()
    if doc.lie is not None:
        inst.lie.append(("input", doc.lie))
    if doc.algebra is not None:
        inst.algebras.append(("input", doc.algebra))
    if doc.triangular is not None:
        t = doc.triangular
        inst.blocks.append((f"T{t.n}", t))
    return inst


def check_block_caps(doc_or_spec, caps: Caps):
    """The truncation must reach the nilpotency index of I."""
    spec = doc_or_spec
    block = build_triangular(spec)
    if not block.base_algebra.augmented:
        raise ConfigurationError("the base algebra must be augmented (A = Q.1 + I)")
    N = caps.truncation if caps.truncation is not None else nilpotency_class(block.lie) + 1
    if N < block.base_algebra.index:
        raise ConfigurationError(f"truncation {N} is below the nilpotency index {block.base_algebra.index} of I")


# -- commands ------------------------------------------------------------------------------


def cmd_suite(args, doc, caps):
    try:
        suites = select(args.label)
    except KeyError:
        raise UsageError(f"unknown suite {args.label!r}; known: all, {', '.join(suite_labels())}") from None
    inst = instances_from(doc)
    for _, spec in inst.blocks:
        check_block_caps(spec, caps)
    return run_suites(suites, inst, caps, command=f"suite {args.label}", timing=args.timing)


def cmd_check_axioms(args, doc, caps):
    suites = [HOPF_AXIOMS, resolve_label("map:t"), resolve_label("map:B′")]
    return run_suites(suites, instances_from(doc), caps, command="check-axioms", timing=args.timing)


def cmd_homology(args, doc, caps):
    inst = instances_from(doc)
    report = VerificationReport(f"homology {args.kind}", caps=caps_json(caps))
    tables = {}
    if args.kind == "lie":
        if not inst.lie:
            raise UsageError("homology lie needs a lie_algebra section")
        for name, lie in inst.lie:
            tables[name] = lie_homology(lie)
    else:
        if not inst.algebras:
            raise UsageError(f"homology {args.kind} needs an algebra section")
        for name, spec in inst.algebras:
            if args.kind == "hh":
                tables[name] = hochschild_homology(spec, caps.degree, args.relative)
            else:
                tables[name] = hn_homology(spec, caps.degree, caps.columns, args.relative)
    report.extra["homology"] = tables
    return report


def cmd_chern_compare(args, doc, caps):
    inst = instances_from(doc)
    if doc is None:
        inst.blocks = inst.blocks[1:]  # T_2 with sigma {1<2} over the dual numbers
    if not inst.blocks:
        raise UsageError("chern-compare needs a triangular section")
    report = VerificationReport("chern-compare", caps=caps_json(caps))
    witnesses = {}
    for name, spec in inst.blocks:
        check_block_caps(spec, caps)
        checks, witness = compare_chern(spec, caps, name=name)
        report.add(SuiteReport(f"lem:jc-ch/{name}", "per-block comparison of the two Chern characters",
                               checks, caps_json(caps)))
        witnesses[name] = witness
    report.stand_ins["sw"] = SW_NOTE
    if args.witness:
        _write_atomic(args.witness, canonical_json(to_plain(witnesses)))
        report.extra["witness_file"] = os.path.basename(args.witness)
    else:
        report.extra["witness"] = witnesses
    return report


def _parse_element(text: str):
    try:
        return json.loads(text, parse_float=lambda s: (_ for _ in ()).throw(UsageError("floats are not allowed")))
    except json.JSONDecodeError as exc:
        raise UsageError(f"--element is not valid JSON: {exc.msg}") from None


def _word(elem, U, ptr="--element"):
    if not isinstance(elem, list):
        raise UsageError(f"{ptr}: expected a list of PBW exponent lists")
    keys = set(U.basis(U.truncation))
    out = []
    for i, m in enumerate(elem):
        if not isinstance(m, list) or not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in m):
            raise UsageError(f"{ptr}/{i}: expected a list of non-negative integers")
        key = tuple(m)
        if key not in keys:
            raise UsageError(f"{ptr}/{i}: {render(key)} is not a basis monomial of U/F_N")
        out.append(key)
    return tuple(out)


def _wedge(elem, dim, ptr="--element"):
    if not isinstance(elem, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in elem):
        raise UsageError(f"{ptr}: expected a list of generator indices")
    if any(not 0 <= x < dim for x in elem):
        raise UsageError(f"{ptr}: generator index out of range 0..{dim - 1}")
    return tuple(elem)


def evaluate(name: str, elem, doc: Document | None, caps: Caps) -> Vector:
    from .chern.blocks import BlockComparison
    from .chern.ce import CE, PsiTheta, wedge_normal
    from .chern.sw import SWComparison
    from .chern.tau import CLift, tau_norm
    from .chern.upsilon import Upsilon
    from .complexes.bar import BarComplex
    from .complexes.cyclic import CyclicAlgebraComplex

    if name in ("ch-minus", "ch-rht"):
        spec = doc.triangular if doc and doc.triangular else default_instances().blocks[1][1]
        check_block_caps(spec, caps)
        block = build_triangular(spec)
        N = caps.truncation if caps.truncation is not None else nilpotency_class(block.lie) + 1
        bc = BlockComparison(spec, caps.columns, N)
        w = _word(elem, bc.U)
        if not w or bc.U.one in w:
            raise UsageError("--element: the block characters are defined on normalized words of degree >= 1")
        return bc.ch_minus(w) if name == "ch-minus" else bc.ch_rht(w)

    lie = doc.lie if doc and doc.lie else default_instances().lie[0][1]
    N = suite_truncation(lie, caps)
    ce = CE(lie, N)
    bar = BarComplex(ce.U)
    if name in ("e", "psi", "theta", "B-theta", "tau-psi"):
        I = _wedge(elem, lie.dim)
        sign, J = wedge_normal(I)
        if sign == 0 or J not in ce.wedge_basis(len(J)):
            return Vector()
        pt = PsiTheta(ce, bar, CyclicAlgebraComplex(ce.U), caps.columns)
        fn = {"e": ce.e, "psi": pt.psi, "theta": pt.theta, "B-theta": pt.B_theta, "tau-psi": pt.tau_psi}[name]
        return fn(J).scale(sign)
    w = _word(elem, ce.U)
    if name == "tau":
        return tau_norm(bar, w)
    if ce.U.one in w:
        return Vector()  # degenerate in the normalized complex
    if name == "c":
        return CLift(bar, caps.columns)(w)
    if name == "upsilon":
        return Upsilon(bar).on_bar(w, caps.columns)
    if name == "sw":
        return SWComparison(lie, N, U=ce.U).sw(w)
    raise UsageError(f"unknown map {name!r}")


def cmd_eval(args, doc, caps):
    if args.map not in EVAL_MAPS:
        raise UsageError(f"unknown map {args.map!r}; known: {', '.join(EVAL_MAPS)}")
    if args.element is None:
        raise UsageError("eval needs --element")
    value = evaluate(args.map, _parse_element(args.element), doc, caps)
    report = VerificationReport(f"eval {args.map}", caps=caps_json(caps))
    report.extra["element"] = args.element
    report.extra["value"] = value
    return report


# -- plumbing --------------------------------------------------------------------------------


def _write_atomic(path: str, text: str):
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix=".json")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="JSON input document")
    common.add_argument("--degree-cap", type=_nonneg, help="degree cap D (default 4)")
    common.add_argument("--column-cap", type=_nonneg, help="HN column cap P (default 3)")
    common.add_argument("--truncation", type=_nonneg, help="adic truncation N (default: nilpotency class + 1)")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--timing", action="store_true", help="include wall times (breaks byte-identity)")

    p = argparse.ArgumentParser(prog="relchern", description="Exact verification of chain-level Chern character identities.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("check-axioms", parents=[common], help="Hopf, simplicial, cyclic and mixed-complex axioms")
    s = sub.add_parser("suite", parents=[common], help="run one identity suite or all of them")
    s.add_argument("label", help="suite label or 'all'")
    h = sub.add_parser("homology", parents=[common], help="homology dimension tables")
    h.add_argument("kind", choices=("lie", "hh", "hn"))
    h.add_argument("--relative", action="store_true", help="use the relative complex C(A, I)")
    c = sub.add_parser("chern-compare", parents=[common], help="per-block homotopy between the two characters")
    c.add_argument("--witness", help="write the serialized homotopy witness to this file")
    e = sub.add_parser("eval", parents=[common], help="evaluate one map on one element")
    e.add_argument("map", help=f"one of: {', '.join(EVAL_MAPS)}")
    e.add_argument("--element", help="JSON element: a list of PBW exponent lists, or of generator indices")
    return p


COMMANDS = {"check-axioms": cmd_check_axioms, "suite": cmd_suite, "homology": cmd_homology,
            "chern-compare": cmd_chern_compare, "eval": cmd_eval}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        doc = read_input(args.input)
        caps = resolve_caps(args, doc)
        report = COMMANDS[args.command](args, doc, caps)
    except DocumentError as exc:
        print(f"parse error at {exc.pointer}: {exc.message}", file=sys.stderr)
        return 2
    except (ConfigurationError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = report.dumps() if args.format == "json" else report.text()
    if args.out:
        _write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
