import gzip
import json
import subprocess
import sys

import pytest

from semigroup_sep.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "2:0,0,1,1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    flags = doc["properties"]["flags"]
    assert flags["is_E_hypocentral"] and flags["is_E_upcentral"]
    assert not flags["is_E_hypercentral"] and not flags["is_E_separated"]
    assert doc["idempotents"] == [0, 1]
    assert doc["reflection"]["size"] == 1


def test_analyze_text_renders_same_document(capsys):
    code, out, _ = run(capsys, "analyze", "2:0,0,0,1")
    assert code == 0
    assert "is_semilattice: true" in out
    assert "clifford_part: [0, 1]" in out


def test_analyze_file_and_stdin(tmp_path, capsys, monkeypatch):
    path = tmp_path / "z2.txt"
    path.write_text("2\n0 1\n1 0\n")
    code, out, _ = run(capsys, "analyze", str(path), "--format", "json")
    assert code == 0 and json.loads(out)["properties"]["flags"]["is_unipotent"]
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO('{"order": 1, "table": [[0]]}'))
    code, out, _ = run(capsys, "analyze", "-", "--format", "json")
    assert code == 0 and json.loads(out)["table"]["order"] == 1


def test_nonassociative_input_exit_3(capsys):
    code, _, err = run(capsys, "analyze", "2:0,0,1,0")
    assert code == 3
    assert "witness [1, 0, 1]" in err


@pytest.mark.parametrize("src", ["no/such/file", "2:0,0,x", "3:0,0"])
def test_bad_input_exit_3(capsys, src):
    assert run(capsys, "analyze", src)[0] == 3


def test_classes(capsys):
    code, out, _ = run(capsys, "classes", "2:0,0,1,1", "0", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"element": 0, "up": [0, 1], "down": [0, 1], "bi": [0, 1], "trace": [[0], [0, 1]]}


def test_classes_out_of_range_exit_4(capsys):
    assert run(capsys, "classes", "2:0,0,1,1", "5")[0] == 4


def test_reflect(capsys):
    code, out, _ = run(capsys, "reflect", "2:0,0,0,1", "--format", "json")
    assert code == 0
    assert json.loads(out)["quotient"]["order"] == 2


@pytest.mark.parametrize("argv", [["bogus"], [], ["verify", "--suite", "NO_SUCH"], ["verify", "--max-order", "9"],
                                  ["enumerate", "9"], ["analyze", "--format", "xml", "1:0"]])
def test_usage_errors_exit_4(capsys, argv):
    assert run(capsys, *argv)[0] == 4


def test_enumerate_count_and_dump(tmp_path, capsys):
    assert run(capsys, "enumerate", "3", "--count") == (0, "113\n", "")
    assert run(capsys, "enumerate", "3", "--up-to-iso", "--count")[1] == "24\n"
    code, out, _ = run(capsys, "enumerate", "2")
    assert code == 0 and out.splitlines()[0] == "2:0,0,0,0" and len(out.splitlines()) == 8
    run(capsys, "enumerate", "2", "--out", str(tmp_path), "--gzip")
    with gzip.open(tmp_path / "semigroups-2.txt.gz", "rt") as fh:
        assert fh.read() == out


def test_verify_text_and_out(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "--max-order", "2", "--out", str(tmp_path))
    assert code == 0
    assert out.strip().endswith("exit status 0")
    assert len(list(tmp_path.glob("*.json"))) == 22
    doc = json.loads((tmp_path / "SEPAR_EQUIV.json").read_text())
    assert doc["status"] == "PASS"


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--max-order", "2", "--suite", "DUO_ESEP", "--format", "json")
    doc = json.loads(out)
    assert code == doc["exit_status"] == 0 and doc["reports"][0]["suite"] == "DUO_ESEP"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "semigroup_sep", "enumerate", "2", "--count"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "8\n"
