import json
from fractions import Fraction

import pytest

from relchern.documents import DocumentError, load_document, parse_document

HEIS = {"lie_algebra": {"dim": 3, "brackets": [{"i": 0, "j": 1, "terms": [{"k": 2, "c": "1"}]}]}}
DUAL = {"dim": 2, "unit": ["1", "0"], "ideal": [["0", "1"]],
        "mult": [{"i": 0, "j": 0, "terms": [{"k": 0, "c": "1"}]},
                 {"i": 0, "j": 1, "terms": [{"k": 1, "c": "1"}]},
                 {"i": 1, "j": 0, "terms": [{"k": 1, "c": "1"}]}]}


def write(tmp_path, text):
    p = tmp_path / "doc.json"
    p.write_text(text, encoding="utf-8")
    return p


def pointer_of(obj):
    with pytest.raises(DocumentError) as err:
        parse_document(obj)
    return err.value.pointer


def test_heisenberg_parses():
    doc = parse_document(HEIS)
    assert doc.lie.dim == 3
    assert doc.lie.brackets[(0, 1)] == {2: Fraction(1)}


def test_triangular_sigma_is_zero_based():
    doc = parse_document({"algebra": DUAL, "triangular": {"n": 2, "sigma": [[0, 1]]}})
    assert doc.triangular.sigma == frozenset({(1, 2)})


def test_float_literal_reports_pointer(tmp_path):
    text = json.dumps(HEIS).replace('"c": "1"', '"c": 0.5')
    with pytest.raises(DocumentError) as err:
        load_document(write(tmp_path, text))
    assert err.value.pointer == "/lie_algebra/brackets/0/terms/0/c"
    assert "floating-point" in err.value.message


def test_invalid_json(tmp_path):
    with pytest.raises(DocumentError) as err:
        load_document(write(tmp_path, "{"))
    assert err.value.pointer == "/"


@pytest.mark.parametrize("mutate, pointer", [
    (lambda d: d["lie_algebra"].pop("dim"), "/lie_algebra/dim"),
    (lambda d: d["lie_algebra"]["brackets"][0].update(i=7), "/lie_algebra/brackets/0/i"),
    (lambda d: d["lie_algebra"]["brackets"][0]["terms"][0].update(c="1/0"), "/lie_algebra/brackets/0/terms/0/c"),
    (lambda d: d["lie_algebra"]["brackets"][0]["terms"][0].update(c="one"), "/lie_algebra/brackets/0/terms/0/c"),
    (lambda d: d.update(extra=1), "/extra"),
])
def test_errors_carry_pointers(mutate, pointer):
    doc = json.loads(json.dumps(HEIS))
    mutate(doc)
    assert pointer_of(doc) == pointer


def test_jacobi_failure_points_at_brackets():
    bad = {"lie_algebra": {"dim": 3, "brackets": [
        {"i": 0, "j": 1, "terms": [{"k": 2, "c": "1"}]},
        {"i": 1, "j": 2, "terms": [{"k": 0, "c": "1"}]},
        {"i": 0, "j": 2, "terms": [{"k": 0, "c": "1"}]}]}}
    assert pointer_of(bad) == "/lie_algebra/brackets"


def test_triangular_needs_algebra_and_valid_order():
    assert pointer_of({"triangular": {"n": 1}}) == "/triangular/base"
    assert pointer_of({"algebra": DUAL, "triangular": {"n": 2, "sigma": [[0, 1], [1, 0]]}}) == "/triangular/sigma"
    assert pointer_of({"algebra": DUAL, "triangular": {"n": 2, "sigma": [[0, 5]]}}) == "/triangular/sigma/0/1"


def test_caps_section():
    doc = parse_document({"caps": {"degree": 3, "columns": 2, "truncation": 4}})
    assert doc.caps == {"degree": 3, "columns": 2, "truncation": 4}
    assert pointer_of({"caps": {"truncation": 0}}) == "/caps/truncation"
