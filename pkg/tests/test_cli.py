import io
import json
import subprocess
import sys

import pytest

from tropical_hurwitz.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), stdout=out)
    return code, out.getvalue()


def test_hurwitz_all_methods():
    code, out = run("hurwitz", "--d", "2", "--profile", "2;2;2;2", "--method", "all")
    assert code == 0
    assert out.strip().splitlines()[-1] == "1/2 (all methods agree)"


def test_hurwitz_trace():
    code, out = run("hurwitz", "--d", "3", "--profile", "2,1;2,1;3", "--method", "trace")
    assert (code, out.strip()) == (0, "1")


def test_hurwitz_json_flags_half_integral_genus():
    code, out = run("hurwitz", "--d", "2", "--profile", "2;2;2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["agree"]
    assert data["genus"] == "1/2" and not data["genus_integral"]
    assert data["values"] == {"trace": "0", "oracle": "0", "degree": "0", "recursive": "0"}


def test_parse_error_exit_code(capsys):
    code, _ = run("hurwitz", "--d", "2", "--profile", "3;2;2;2")
    assert code == 1


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["hurwitz", "--d", "2"])
    assert exc.value.code == 1


def test_guard_exit_code():
    code, _ = run("hurwitz", "--d", "5", "--profile", "5;5;5;5", "--method", "oracle", "--max-work", "10")
    assert code == 3


def test_disagreement_exit_code(monkeypatch):
    import tropical_hurwitz.cli as cli
    from fractions import Fraction

    monkeypatch.setattr(cli, "degree_recursive", lambda profile: Fraction(7))
    code, out = run("hurwitz", "--d", "2", "--profile", "2;2;2;2")
    assert code == 2 and "DISAGREEMENT" in out


def test_cells_json(tmp_path):
    code, out = run("cells", "--d", "2", "--profile", "2;2;2;2")
    data = json.loads(out)
    assert code == 0 and len(data["cells"]) == 3 and data["degree"]["value"] == "1/2"
    path = tmp_path / "cx.json"
    code, _ = run("cells", "--d", "2", "--profile", "2;2;2;2", "--out", str(path))
    assert code == 0 and json.loads(path.read_text()) == data


def test_embed():
    code, out = run("embed", "--n", "4", "--tree", "12|34", "--lengths", "5")
    assert code == 0
    assert out.splitlines() == ["((1,2),(3,4))\t0", "((1,3),(2,4))\t5", "((1,4),(2,3))\t5"]


def test_embed_json_and_errors():
    code, out = run("embed", "--n", "5", "--tree", "12|345;123|45", "--lengths", "2,3", "--format", "json")
    data = json.loads(out)
    assert len(data["coordinates"]) == 15 == len(data["quadruples"])
    assert run("embed", "--n", "5", "--tree", "12|345", "--lengths", "2")[0] == 1
    assert run("embed", "--n", "4", "--tree", "12|34", "--lengths", "2,3")[0] == 1


def test_trees():
    code, out = run("trees", "--n", "5")
    assert code == 0 and out.strip().endswith("15 trivalent types")


def test_selfcheck():
    code, out = run("selfcheck", "--max-d", "3", "--max-n", "5")
    assert code == 0
    assert out.count("[PASS]") == 7 and "[FAIL]" not in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tropical_hurwitz", "hurwitz", "--d", "3", "--profile", "3;3;3;3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip().endswith("1 (all methods agree)")
