"""Verdict records and canonical report serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ..exactlin import Vector, fstr, render


def to_plain(x: Any) -> Any:
    """Recursively convert to JSON-ready data; rationals become ``"p/q"`` strings."""
    if isinstance(x, Vector):
        return x.to_json()
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, Fraction):
        return fstr(x)
    if isinstance(x, int):
        return x
    if isinstance(x, dict):
        return {render(k) if not isinstance(k, str) else k: to_plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_plain(v) for v in x]
    return render(x)


@dataclass
class CheckResult:
    name: str
    instance: str
    ok: bool
    expected_fail: bool = False
    witness: Any = None
    detail: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        if self.expected_fail:
            return "expected-fail" if not self.ok else "unexpected-pass"
        return "pass" if self.ok else "fail"

    @property
    def passed(self) -> bool:
        return self.verdict in ("pass", "expected-fail")

    def to_json(self) -> dict:
        out = {"name": self.name, "instance": self.instance, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = to_plain(self.witness)
        if self.detail:
            out["detail"] = to_plain(self.detail)
        return out


@dataclass
class SuiteReport:
    label: str
    title: str
    checks: list
    window: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"title": self.title, "status": "pass" if self.passed else "fail", "window": to_plain(self.window),
                "checks": [c.to_json() for c in self.checks]}


@dataclass
class VerificationReport:
    command: str
    suites: dict = field(default_factory=dict)   # label -> SuiteReport
    caps: dict = field(default_factory=dict)
    stand_ins: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)
    timing: dict | None = None

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites.values())

    def add(self, suite: SuiteReport):
        self.suites[suite.label] = suite

    def to_json(self) -> dict:
        out = {"command": self.command, "status": "pass" if self.passed else "fail", "caps": to_plain(self.caps),
               "suites": {k: s.to_json() for k, s in self.suites.items()}}
        if self.stand_ins:
            out["stand_ins"] = to_plain(self.stand_ins)
        if self.extra:
            out["extra"] = to_plain(self.extra)
        if self.timing is not None:
            out["wall_time_seconds"] = to_plain(self.timing)
        return out

    def dumps(self) -> str:
        return canonical_json(self.to_json())

    def text(self) -> str:
        lines = [f"{self.command}: {'PASS' if self.passed else 'FAIL'}"]
        for label, s in self.suites.items():
            lines.append(f"{label}: {'PASS' if s.passed else 'FAIL'} ({len(s.checks)} checks) {s.title}")
            for c in s.checks:
                w = f" witness={render(c.witness)}" if c.witness is not None else ""
                lines.append(f"  [{c.verdict}] {c.name} @ {c.instance}{w}")
        for k, v in sorted(self.extra.items()):
            lines.append(f"{k}: {json.dumps(to_plain(v), sort_keys=True, ensure_ascii=False)}")
        for k, v in sorted(self.stand_ins.items()):
            lines.append(f"stand-in {k}: {v}")
        if self.timing is not None:
            lines.append(f"wall time: {json.dumps(to_plain(self.timing), sort_keys=True)}")
        return "\n".join(lines) + "\n"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
