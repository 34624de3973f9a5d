"""CLI behavior: verdicts, exit codes, formats, and file round trips."""

import json

import pytest

from quiddity import Dissection
from quiddity.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_pm(capsys):
    code, out, _ = run(capsys, "check", "1,1,1", "--pm")
    assert code == 0
    assert "M(1,1,1) = [[-1,0],[0,-1]]" in out
    assert "MinusId" in out

    code, out, _ = run(capsys, "check", "2,2", "--pm")
    assert code == 1
    assert "Other" in out


def test_check_mod(capsys):
    code, out, _ = run(capsys, "check", "2,2", "--mod", "2")
    assert code == 0
    assert "true" in out

    code, out, _ = run(capsys, "check", "1,1", "--mod", "2")
    assert code == 1
    assert "false" in out

    # -Id is congruent to Id mod 2 but not mod 3
    assert run(capsys, "check", "1,1,1", "--mod", "3")[0] == 1


def test_check_rejects_nonpositive_entries_in_integer_mode(capsys):
    code, _, err = run(capsys, "check", "1,0,1,0", "--mod", "2")
    assert code == 2
    assert "positive" in err


def test_check_flag_validation(capsys):
    assert run(capsys, "check", "1,1,1")[0] == 2
    assert run(capsys, "check", "1,1,1", "--pm", "--mod", "2")[0] == 2
    assert run(capsys, "check", "1,1,1", "--mod", "1")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_check_mod2(capsys):
    code, out, _ = run(capsys, "check-mod2", "1,0,1,0")
    assert code == 0
    assert "true" in out
    code, out, _ = run(capsys, "check-mod2", "0,0,0")
    assert code == 1
    assert "false" in out
    assert run(capsys, "check-mod2", "1,2,1")[0] == 2


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "1,1,1", "--pm", "--json")
    assert code == 0
    data = json.loads(out)
    assert data == {
        "schema": 1,
        "sequence": [1, 1, 1],
        "matrix": [[-1, 0], [0, -1]],
        "verdict": "MinusId",
    }


def test_quiddity_command(tmp_path, capsys):
    path = tmp_path / "quad.json"
    path.write_text('{"n": 4, "diagonals": []}')
    code, out, _ = run(capsys, "quiddity", str(path), "--mod2")
    assert code == 0
    assert out.strip() == "0,0,0,0"

    path.write_text(json.dumps(Dissection(5, [(1, 3), (1, 4)]).to_json_dict()))
    code, out, _ = run(capsys, "quiddity", str(path), "--cc")
    assert code == 0
    assert out.strip() == "3,1,2,2,1"

    code, out, _ = run(capsys, "quiddity", str(path), "--cc", "--json")
    assert json.loads(out) == {"schema": 1, "n": 5, "quiddity": [3, 1, 2, 2, 1]}


def test_quiddity_command_reads_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO('{"n": 4, "diagonals": [[1, 3]]}'))
    code, out, _ = run(capsys, "quiddity", "-", "--mod2")
    assert code == 0
    assert out.strip() == "0,1,0,1"


def test_quiddity_command_errors(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"n": 4, "diagonals": [[1, 3], [2, 4]]}')
    code, _, err = run(capsys, "quiddity", str(path), "--mod2")
    assert code == 2
    assert "(1, 3)" in err and "(2, 4)" in err
    assert run(capsys, "quiddity", str(tmp_path / "missing.json"), "--cc")[0] == 2
    assert run(capsys, "quiddity", str(path))[0] == 2  # --cc or --mod2 required


def test_realize_round_trips_through_quiddity(tmp_path, capsys):
    code, out, _ = run(capsys, "realize", "1,1,1,0,0")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1 and data["n"] == 5
    path = tmp_path / "d.json"
    path.write_text(out)
    code, out, _ = run(capsys, "quiddity", str(path), "--mod2")
    assert code == 0
    assert out.strip() == "1,1,1,0,0"


def test_realize_two_quadrilaterals(capsys):
    code, out, _ = run(capsys, "realize", "0,0,0,0,0,0")
    assert code == 0
    d = Dissection.from_json(out)
    assert [len(c) for c in d.cells()] == [4, 4]


def test_realize_triangulation_flag(capsys):
    code, out, _ = run(capsys, "realize", "1,1,1,0,0", "--triangulation")
    assert code == 0
    assert Dissection.from_json(out).classify().is_triangulation


def test_realize_failure_reports_refutation(capsys):
    code, _, err = run(capsys, "realize", "0,0,0")
    assert code == 1
    assert "reduces to 0,0,0" in err

    code, _, err = run(capsys, "realize", "0,0,0,0", "--triangulation")
    assert code == 1
    assert "no odd entry" in err


def test_realize_dot_output(tmp_path, capsys):
    dot = tmp_path / "out.dot"
    code, _, _ = run(capsys, "realize", "0,1,0,1", "--dot", str(dot), "--geometry", "circle")
    assert code == 0
    text = dot.read_text()
    assert "graph dissection {" in text
    assert "1 -- 3;" in text
    assert 'pos="' in text


def test_frieze_text_and_json(capsys):
    code, out, _ = run(capsys, "frieze", "1,3,1,2,2")
    assert code == 0
    assert out.splitlines()[1] == "1   3   1   2   2"
    assert out.splitlines()[2] == "  2   2   1   3   1"

    code, out, _ = run(capsys, "frieze", "1,3,1,2,2", "--json")
    data = json.loads(out)
    assert data["rows"][1] == [1, 3, 1, 2, 2]
    assert data["rows"][2] == [2, 2, 1, 3, 1]


def test_frieze_failure(capsys):
    code, _, err = run(capsys, "frieze", "2,2,2")
    assert code == 1
    assert "border" in err.lower() or "positive" in err.lower()
    assert run(capsys, "frieze", "1,1,1,1")[0] == 1
    assert run(capsys, "frieze", "1,x,1")[0] == 2


def test_enumerate_classes(capsys):
    code, out, _ = run(capsys, "enumerate", "4", "--classes")
    assert code == 0
    assert "n=4 tuples=3 expected=3 match=true" in out
    assert "classes=2" in out
    assert "0,1,0,1" in out


def test_enumerate_verify_jacobsthal(capsys):
    code, out, _ = run(capsys, "enumerate", "10", "--verify-jacobsthal")
    assert code == 0
    assert "tuples=171" in out and "match=true" in out


def test_enumerate_tuples_json(capsys):
    code, out, _ = run(capsys, "enumerate", "4", "--tuples", "--json")
    data = json.loads(out)
    assert data["solutions"] == [[0, 0, 0, 0], [0, 1, 0, 1], [1, 0, 1, 0]]


def test_enumerate_sweeps(capsys):
    code, out, _ = run(capsys, "enumerate", "6", "--sweep", "thm1")
    assert code == 0
    assert "sweep=thm1i" in out and "sweep=thm1ii" in out
    assert "counterexamples=0" in out

    code, out, _ = run(capsys, "enumerate", "5", "--sweep", "all", "--json")
    assert code == 0
    data = json.loads(out)
    assert [s["which"] for s in data["sweeps"]] == [
        "thm1i", "thm1ii", "thm2", "thm3", "remark",
    ]
    assert all(s["counterexamples"] == [] for s in data["sweeps"])


def test_enumerate_cap_exceeded(capsys, monkeypatch):
    assert run(capsys, "enumerate", "21")[0] == 2
    monkeypatch.setenv("QUIDDITY_MOD2_CAP", "4")
    assert run(capsys, "enumerate", "5")[0] == 2
    monkeypatch.setenv("QUIDDITY_MOD2_CAP", "6")
    assert run(capsys, "enumerate", "5")[0] == 0


def test_batch_file_input(tmp_path, capsys):
    batch = tmp_path / "seqs.txt"
    batch.write_text("1,1,1\n# comment\n2,2\n")
    code, out, _ = run(capsys, "check", "@" + str(batch), "--pm")
    assert code == 1  # worst verdict wins: (2,2) is not +/-Id
    assert "MinusId" in out and "Other" in out


def test_output_is_deterministic(capsys):
    first = run(capsys, "enumerate", "8", "--classes", "--tuples")
    second = run(capsys, "enumerate", "8", "--classes", "--tuples")
    assert first == second
