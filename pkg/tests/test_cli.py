import json
import subprocess
import sys

import pytest

from bdmeta import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def spec_file(tmp_path, doc, name="spec.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def test_pgl2_uniformizer_obstruction(tmp_path, capsys):
    p = spec_file(tmp_path, {"group": "PGL2", "degree": 2, "eta": [["pi", 1, 0]], "field": {"q": 7}})
    code, out, _ = run(capsys, "analyze", p)
    rep = json.loads(out)
    assert code == 2
    assert rep["obstructions"]["ob1"]["pass"] is False
    assert rep["obstructions"]["ob1"]["witness"]["pairing"]["eta_y_a"] == 1
    assert rep["hyperspecial_splitting"]["verdict"] == "nonsplit-proven"
    assert rep["distinguished_character"]["error"] == "ObstructionFails"


def test_trivial_eta_success(tmp_path, capsys):
    p = spec_file(tmp_path, {"group": "SC(G,2)", "degree": 3, "field": {"q": 7}})
    code, out, _ = run(capsys, "analyze", p)
    rep = json.loads(out)
    assert code == 0 and rep["schema"] == cli.SCHEMA
    assert all(v["pass"] for v in rep["obstructions"].values())
    assert rep["weyl_invariant"] is True
    assert rep["hyperspecial_splitting"]["verdict"] == "split"
    assert rep["oracle_checks"]["census"] is True


def test_kp_dual_name(tmp_path, capsys):
    p = spec_file(tmp_path, {"group": "GL(3)", "degree": 2})
    _, out, _ = run(capsys, "analyze", p)
    assert json.loads(out)["dual"]["recognized_name"] == "{(g,lam): det g = lam^2} in GL_3 x GL_1"


def test_report_is_deterministic(tmp_path, capsys):
    p = spec_file(tmp_path, {"group": "SC(C,2)", "degree": 2, "eta": [["pi", 0, 1], ["pi", 1, 2]]})
    a = run(capsys, "analyze", p)[1]
    b = run(capsys, "analyze", p)[1]
    assert a == b


def test_spec_echo_round_trip(tmp_path, capsys):
    doc = {"group": "GSp(4)", "degree": 2, "eta": "trivial", "field": {"q": 5},
           "bisector": "fair-default", "options": {"sign_convention": "paper7", "bruteforce_limit": 100}}
    p = spec_file(tmp_path, doc)
    _, out, _ = run(capsys, "analyze", p)
    echo = json.loads(out)["spec"]
    again = cli.parse_spec(echo)
    assert again.echo() == echo
    assert echo["options"]["sign_convention"] == "paper7"


def test_custom_root_datum_and_matrix_bisector(tmp_path, capsys):
    doc = {"group": {"rank": 1, "pairs": [[[1], [2]]], "simple": [0]}, "degree": 2,
           "bisector": [[0]]}
    code, out, _ = run(capsys, "character", spec_file(tmp_path, doc))
    assert code == 0
    assert json.loads(out)["distinguished_character"]["checks"]["genuine"]


def test_flags_override_spec(tmp_path, capsys):
    p = spec_file(tmp_path, {"group": "SC(A,1)", "degree": 2, "field": {"q": 5}})
    code, out, _ = run(capsys, "character", p, "--q", "7", "--degree", "3", "--sign", "paper7")
    spec = json.loads(out)["spec"]
    assert code == 0 and spec["field"]["q"] == 7 and spec["degree"] == 3
    assert spec["options"]["sign_convention"] == "paper7"


def test_out_and_text_format(tmp_path, capsys):
    p = spec_file(tmp_path, {"group": "SC(A,1)", "degree": 2, "field": {"q": 7}})
    out_path = tmp_path / "rep.json"
    code, out, _ = run(capsys, "analyze", p, "--format", "text", "--out", str(out_path))
    assert code == 0
    assert "dual group: SL_2" in out and "hyperspecial splitting: split" in out
    assert json.loads(out_path.read_text())["command"] == "analyze"


@pytest.mark.parametrize("doc,msg", [
    ({"degree": 2}, "missing field 'group'"),
    ({"group": "SC(A,1)", "degree": "2"}, "expected integer"),
    ({"group": "SO(5)", "degree": 2}, "spec.group"),
    ({"group": "SC(A,1)", "degree": 3, "field": {"q": 5}}, "spec.field"),
    ({"group": "SC(A,1)", "degree": 2, "eta": [["pi", 1]]}, "spec.eta"),
    ({"group": "SC(A,1)", "degree": 2, "options": {"sign_convention": "x"}}, "sign_convention"),
    ({"group": "SC(A,2)", "degree": 2, "bisector": [[1, 0], [0, 1]]}, ""),
])
def test_invalid_input_exit_1(tmp_path, capsys, doc, msg):
    code, out, err = run(capsys, "analyze", spec_file(tmp_path, doc))
    assert code == 1 and out == "" and err.startswith("error:") and msg in err


def test_malformed_json_reports_position(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"group": "PGL2",\n "degree": }')
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 1 and "line 2" in err


def test_unknown_suite(capsys):
    code, _, err = run(capsys, "examples", "nope")
    assert code == 1 and "unknown suite" in err


def test_examples_paper_suite(capsys):
    code, out, _ = run(capsys, "examples", "paper", "--format", "text")
    assert code == 0
    assert out.strip().splitlines()[-1].endswith("passed")
    assert "FAIL" not in out


def test_module_entry_point(tmp_path):
    p = spec_file(tmp_path, {"group": "PGL2", "degree": 2})
    r = subprocess.run([sys.executable, "-m", "bdmeta", "character", p], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["command"] == "character"
