import json
import subprocess
import sys

import pytest

from relchern.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_suite_passes_with_packaged_input(capsys):
    code, out, _ = run_cli(capsys, "suite", "ex:Upsilon(1)", "--input", "heis.json")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "pass"
    assert report["suites"]["ex:Upsilon(1)"]["status"] == "pass"


def test_ascii_label_alias(capsys):
    code, out, _ = run_cli(capsys, "suite", "B'(prim)", "--degree-cap", "2", "--input", "heis.json")
    assert code == 0
    assert "B′(prim)" in json.loads(out)["suites"]


def test_homology_lie(capsys):
    code, out, _ = run_cli(capsys, "homology", "lie", "--input", "heis.json")
    assert code == 0
    assert json.loads(out)["extra"]["homology"]["input"]["dims"] == [1, 2, 2, 1]


def test_homology_hn_flags_instability(capsys):
    code, out, _ = run_cli(capsys, "homology", "hn", "--degree-cap", "3", "--column-cap", "2")
    assert code == 0
    table = json.loads(out)["extra"]["homology"]["dual"]
    assert table["stable"][0] is False
    assert all(table["stable"][1:])


def test_chern_compare_writes_witness(capsys, tmp_path):
    wpath = tmp_path / "witness.json"
    code, out, _ = run_cli(capsys, "chern-compare", "--input", "dual_numbers_T1.json", "--degree-cap", "3",
                           "--truncation", "3", "--witness", str(wpath))
    assert code == 0
    witness = json.loads(wpath.read_text())
    assert witness["T1"]["reverified"] is True
    assert witness["T1"]["homotopy"]
    assert "sw" in json.loads(out)["stand_ins"]


def test_eval_maps(capsys):
    code, out, _ = run_cli(capsys, "eval", "tau", "--element", "[[1,0,0],[0,1,0]]")
    assert code == 0
    assert json.loads(out)["extra"]["value"] == {"((0,0,0),(1,0,0),(0,1,0))": "1"}
    code, out, _ = run_cli(capsys, "eval", "theta", "--element", "[0,1]")
    assert json.loads(out)["extra"]["value"] == {"((1,0,0),(0,1,0))": "1"}


@pytest.mark.parametrize("argv", [
    ["suite", "no-such-suite"],
    ["eval", "tau", "--element", "[[9,9,9]]"],
    ["eval", "tau", "--element", "[[0.5]]"],
    ["eval", "nope", "--element", "[]"],
    ["suite", "map:t", "--degree-cap", "x"],
    ["suite", "map:t", "--input", "missing-file.json"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run_cli(capsys, *argv)
    assert code == 2


def test_parse_error_prints_pointer(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"lie_algebra": {"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [{"k": 0, "c": 1.5}]}]}}')
    code, _, err = run_cli(capsys, "suite", "map:t", "--input", str(p))
    assert code == 2
    assert "/lie_algebra/brackets/0/terms/0/c" in err


def test_check_failure_exits_1(capsys, monkeypatch):
    from relchern.verify import suites

    def broken(inst, caps):
        return [suites.CheckResult("always fails", "none", False)]

    monkeypatch.setitem(suites._BY_LABEL, "lem:taux", suites.Suite("lem:taux", "broken", broken))
    code, out, _ = run_cli(capsys, "suite", "lem:taux")
    assert code == 1
    assert json.loads(out)["status"] == "fail"


def test_out_file_and_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert main(["suite", "lem:Upsilon", "--input", "abelian2.json", "--degree-cap", "2", "--out", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert not list(tmp_path.glob(".tmp-*"))


def test_text_format(capsys):
    code, out, _ = run_cli(capsys, "check-axioms", "--input", "abelian2.json", "--degree-cap", "2", "--format", "text")
    assert code == 0
    assert out.startswith("check-axioms: PASS")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "relchern", "homology", "lie", "--input", "abelian2.json"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["extra"]["homology"]["input"]["dims"] == [1, 2, 1]
