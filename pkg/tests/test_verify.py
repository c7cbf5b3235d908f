import json
from fractions import Fraction

import pytest

from relchern.algebra.assoc import dual_numbers
from relchern.algebra.lie import abelian, heisenberg
from relchern.complexes.checks import ConfigurationError
from relchern.exactlin import Vector
from relchern.verify.homology import hn_homology, hochschild_homology, lie_homology
from relchern.verify.instances import Caps, Instances, suite_truncation, truncation_for
from relchern.verify.report import CheckResult, SuiteReport, VerificationReport, canonical_json, to_plain
from relchern.verify.runner import run_suites, select
from relchern.verify.suites import resolve_label, suite_labels, wedge_complete_truncation


def test_verdicts():
    assert CheckResult("a", "x", True).verdict == "pass"
    assert CheckResult("a", "x", False).verdict == "fail"
    assert CheckResult("a", "x", False, expected_fail=True).verdict == "expected-fail"
    ep = CheckResult("a", "x", True, expected_fail=True)
    assert ep.verdict == "unexpected-pass" and not ep.passed


def test_report_serialization_is_canonical():
    r = VerificationReport("demo")
    r.add(SuiteReport("s", "title", [CheckResult("c", "i", True, detail={"v": Vector({(1, 2): Fraction(1, 3)})})]))
    text = r.dumps()
    assert text == canonical_json(json.loads(text))
    assert json.loads(text)["suites"]["s"]["checks"][0]["detail"]["v"] == {"(1,2)": "1/3"}
    assert "." not in json.dumps(to_plain({"x": Fraction(1, 2)}))


def test_caps_validation_and_truncations():
    with pytest.raises(ConfigurationError):
        Caps(degree=-1)
    with pytest.raises(ConfigurationError):
        Caps(truncation=0)
    assert truncation_for(heisenberg(), Caps()) == 3
    assert truncation_for(abelian(2), Caps()) == 2
    assert suite_truncation(abelian(2), Caps()) == 3
    assert suite_truncation(abelian(2), Caps(truncation=5)) == 5
    assert wedge_complete_truncation(heisenberg(), Caps(), 4) == 5


def test_labels_are_stable():
    labels = suite_labels()
    assert labels[0] == "map:t" and labels[-1] == "lem:jc-ch"
    assert resolve_label("theta-lemma").label == "θ-lemma"
    with pytest.raises(KeyError):
        resolve_label("nope")
    assert len(select("all")) == len(labels)


def test_homology_oracles():
    assert lie_homology(heisenberg())["dims"] == [1, 2, 2, 1]
    assert lie_homology(abelian(3))["dims"] == [1, 3, 3, 1]
    hh = hochschild_homology(dual_numbers(), 4)
    assert hh["dims"] == [2, 1, 1, 1, 1]
    hn = hn_homology(dual_numbers(), 3, 2)
    assert hn["stable"][1:] == [True, True, True]


def test_run_suites_records_sw_stand_in():
    inst = Instances(lie=[("heis", heisenberg())])
    report = run_suites(select("lem:nil2"), inst, Caps(2, 2, None))
    assert report.passed
    assert "sw" in report.stand_ins
    assert report.timing is None
    assert run_suites(select("lem:nil2"), inst, Caps(2, 2, None), timing=True).timing
