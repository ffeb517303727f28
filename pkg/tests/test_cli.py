import json
import subprocess
import sys

import pytest

from loopsmith import cli
from loopsmith import report as report_mod
from loopsmith.structure import StructureVerdict


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_json_counts(tmp_path, capsys):
    out = tmp_path / "q8.json"
    code, _, _ = run(["analyze", "--group", "q8", "--out", str(out)], capsys)
    assert code == 0
    doc = json.loads(out.read_text())
    c = doc["counts"]
    assert (c["h"], c["aut"], c["half_t"], c["half"], c["nontrivial"]) == (8, 192, 384, 3072, 2688)
    assert doc["verdict"]["all_pass"] is True
    assert doc["witnesses"]["theorem2"] == "i"
    assert "timings" not in doc


def test_analyze_text_default(capsys):
    code, out, _ = run(["analyze", "--group", "c4_semidirect_c3"], capsys)
    assert code == 0
    assert "|H| = 2" in out and "nontrivial half-automorphisms: 288" in out


def test_analyze_abelian(capsys):
    code, out, _ = run(["analyze", "--group", "cyclic(3)", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["loop"]["associative"] and doc["counts"]["nontrivial"] == 0
    assert doc["witnesses"]["applicable"] is False


def test_analyze_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert run(["analyze", "--group", "s3", "--out", str(p)], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_timings_flag(capsys):
    code, out, _ = run(["analyze", "--group", "klein", "--format", "json", "--timings"], capsys)
    assert code == 0 and "enumerate_half" in json.loads(out)["timings"]


def test_exit_verdict_failure(monkeypatch, capsys):
    def failing(*args, **kwargs):
        V = StructureVerdict()
        V.add("planted", False)
        return V

    monkeypatch.setattr(report_mod, "verify_prop1", failing)
    code, out, _ = run(["analyze", "--group", "s3"], capsys)
    assert code == 1 and "FAIL planted" in out


def test_exit_invalid_table(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"name": "bad", "order": 2, "elements": ["a", "b"], "table": [[0, 0], [1, 1]]}))
    code, _, err = run(["analyze", "--file", str(bad)], capsys)
    assert code == 2 and "NotLatinSquare" in err and "witness" in err


def test_exit_invalid_json_and_preset(tmp_path, capsys):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    assert run(["check", str(p)], capsys)[0] == 2
    assert run(["analyze", "--group", "nope"], capsys)[0] == 2
    assert run(["analyze"], capsys)[0] == 2


def test_exit_bound(capsys):
    code, _, err = run(["analyze", "--group", "q8", "--max-order", "8"], capsys)
    assert code == 3 and "OrderBoundExceeded" in err


def test_env_max_order(monkeypatch, capsys):
    monkeypatch.setenv("LOOPSMITH_MAX_ORDER", "4")
    assert run(["enumerate", "--group", "s3", "--kind", "aut"], capsys)[0] == 3
    monkeypatch.setenv("LOOPSMITH_MAX_ORDER", "64")
    with pytest.warns(RuntimeWarning):
        assert run(["enumerate", "--group", "cyclic(2)", "--kind", "aut"], capsys)[0] == 0


def test_build_check_round_trip(tmp_path, capsys):
    p = tmp_path / "m.json"
    assert run(["build", "--group", "q8", "--out", str(p)], capsys)[0] == 0
    rec = json.loads(p.read_text())
    assert rec["order"] == 16 and rec["embedding"] == {"u_index": 8, "group_order": 8}
    code, out, _ = run(["check", str(p)], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["moufang"] and not doc["associative"] and doc["diassociative"] and doc["aaip"]


def test_group_file_input(tmp_path, capsys):
    from loopsmith import preset
    from loopsmith.io import cayley_record, write_record

    p = tmp_path / "g.json"
    write_record(cayley_record(preset("c4_semidirect_c3"), "c4c3"), p)
    code, out, _ = run(["enumerate", "--group", str(p), "--kind", "h"], capsys)
    assert code == 0 and len(json.loads(out)["mappings"]) == 2


def test_enumerate_kinds(capsys):
    code, out, _ = run(["enumerate", "--group", "c4_semidirect_c3", "--kind", "h"], capsys)
    assert code == 0 and json.loads(out)["summary"]["total"] == 2
    code, out, _ = run(["enumerate", "--group", "s3", "--kind", "half", "--parallel", "2"], capsys)
    assert json.loads(out)["summary"]["total"] == 216
    code, out, _ = run(["enumerate", "--group", "q8", "--kind", "half", "--direct"], capsys)
    assert json.loads(out)["summary"] == {"total": 48, "automorphisms": 24, "anti_automorphisms": 24, "nontrivial": 0}
    assert run(["enumerate", "--group", "q8", "--kind", "h", "--direct"], capsys)[0] == 2


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "loopsmith.cli", "enumerate", "--group", "klein", "--kind", "aut"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["summary"]["total"] == 168


def test_text_output_is_stable(capsys):
    first = run(["analyze", "--group", "klein"], capsys)[1]
    assert "timings" not in first and first == run(["analyze", "--group", "klein"], capsys)[1]


def test_check_corrupted_table(tmp_path, capsys):
    p = tmp_path / "m.json"
    assert run(["build", "--group", "s3", "--out", str(p)], capsys)[0] == 0
    rec = json.loads(p.read_text())
    rec["table"][1][2] = rec["table"][1][3]
    p.write_text(json.dumps(rec))
    code, _, err = run(["check", str(p)], capsys)
    assert code == 2 and "NotLatinSquare" in err and "witness" in err
