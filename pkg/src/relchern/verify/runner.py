"""Run suites into a VerificationReport."""

from __future__ import annotations

import time

from .compare import SW_NOTE
from .instances import Caps, Instances
from .report import SuiteReport, VerificationReport
from .suites import SUITES, Suite, resolve_label


def caps_json(caps: Caps) -> dict:
    out = caps.to_json()
    if caps.truncation is None:
        out["truncation"] = "default"
    return out


def run_suites(suites: list[Suite], inst: Instances, caps: Caps, command: str = "suite",
               timing: bool = False) -> VerificationReport:
    report = VerificationReport(command, caps=caps_json(caps))
    times = {}
    for s in suites:
        t0 = time.perf_counter()
        checks = s.fn(inst, caps)
        times[s.label] = f"{time.perf_counter() - t0:.3f}"
        report.add(SuiteReport(s.label, s.title, checks, caps_json(caps)))
        if s.uses_sw:
            report.stand_ins["sw"] = SW_NOTE
    if timing:
        report.timing = times
    return report


def select(label: str) -> list[Suite]:
    if label == "all":
        return list(SUITES)
    return [resolve_label(label)]
