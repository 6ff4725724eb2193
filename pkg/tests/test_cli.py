import json
import subprocess
import sys

import pytest

from blseifert.cli import EXIT_CAP, EXIT_INPUT, EXIT_OK, CliConfig, config_from_args, dumps, main, run

W3 = "3*t1*t2 + 3*t1^-1*t2^-1 - 5"


def call(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_w3(capsys):
    code, out, _ = call(capsys, "build", "-m", "2", W3)
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["matrix"] == [[3, 0, 3, 0], [-1, 1, 0, 1], [3, 0, 3, 1], [0, 1, 0, 1]]
    assert rep["delta"] == "3*t1*t2 - 5 + 3*t1^-1*t2^-1" and rep["roundtrip"]


def test_build_trefoil_and_trivial(capsys):
    _, out, _ = call(capsys, "build", "-m", "1", "t1 - 1 + t1^-1")
    assert json.loads(out)["matrix"] == [[1, 0], [-1, 1]]
    _, out, _ = call(capsys, "build", "-m", "2", "1")
    rep = json.loads(out)
    assert rep["matrix"] == [] and rep["delta"] == "1" and rep["sizes"] == [0, 0]


def test_build_text_and_explicit_path(capsys):
    code, out, _ = call(capsys, "build", W3, "--path", "+t2,+t1", "--format", "text")
    assert code == EXIT_OK
    assert "path: +t2,+t1" in out and "sigma: 1->2 2->1" in out and "roundtrip: ok" in out


@pytest.mark.parametrize("argv", [["build", "t1 + 1"], ["build", "3**t1"], ["build", W3, "--path", "+t1"],
                                  ["paths", "t1 + t1^-1"]])
def test_build_input_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == EXIT_INPUT and err.startswith("error:")


def test_verify(capsys, fixtures_dir):
    code, out, _ = call(capsys, "verify", str(fixtures_dir / "built_w3_p1.json"), "--format", "text")
    assert code == EXIT_OK and out.strip() == "3*t1*t2 - 5 + 3*t1^-1*t2^-1"
    code, out, _ = call(capsys, "verify", str(fixtures_dir / "trefoil_enlarged.txt"))
    assert json.loads(out) == {"valid": True, "m": 1, "sizes": [4], "delta": "t1 - 1 + t1^-1"}


def test_verify_rejects_non_seifert(capsys, fixtures_dir, tmp_path):
    code, out, err = call(capsys, "verify", str(fixtures_dir / "not_seifert.json"))
    assert code == EXIT_INPUT
    assert json.loads(out)["violations"][0]["code"] == "diagonal_det"
    code, _, _ = call(capsys, "verify", str(tmp_path / "missing.json"))
    assert code == EXIT_INPUT


def test_paths_w3(capsys):
    code, out, _ = call(capsys, "paths", "-m", "2", W3)
    rep = json.loads(out)
    assert code == EXIT_OK and not rep["partial"]
    assert [a["path"] for a in rep["assemblies"]] == ["+t1,+t2", "+t2,+t1"]
    assert len(rep["comparisons"]) == 1


def test_paths_trivial(capsys):
    _, out, _ = call(capsys, "paths", "-m", "2", "1")
    assert [a["matrix"] for a in json.loads(out)["assemblies"]] == [[]]


def test_paths_example1_covers_all_shortest_orders(capsys):
    from blseifert.pathplan import enumerate_paths

    poly = "2*t1 + 2*t1^-1 + 3*t1*t2 + 3*t1^-1*t2^-1 + 4*t2 + 4*t2^-1 - 17"
    _, out, _ = call(capsys, "paths", poly)
    rep = json.loads(out)
    expected = [str(p) for p in enumerate_paths(2, [(1, 0), (1, 1), (0, 1)])]
    assert [a["path"] for a in rep["assemblies"]] == expected
    assert all(a["roundtrip"] for a in rep["assemblies"])
    assert len(rep["comparisons"]) == len(expected) * (len(expected) - 1) // 2


def test_paths_cap(capsys):
    code, out, _ = call(capsys, "paths", "t1^2*t2^2 - 1 + t1^-2*t2^-2", "--max-paths", "2", "--format", "text")
    assert code == EXIT_CAP and "(partial)" in out


def test_compare_printed_pair(capsys, fixtures_dir):
    code, out, _ = call(capsys, "compare", str(fixtures_dir / "paper_A1.json"),
                        str(fixtures_dir / "paper_A2.json"), "--obstruction-only")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["verdict"] == "NotEquivalent"
    assert rep["reasons"][0]["det_a"] == 3 and rep["reasons"][0]["det_b"] == 0


def test_reduce(capsys, fixtures_dir):
    _, out, _ = call(capsys, "reduce", str(fixtures_dir / "trefoil_enlarged.txt"))
    assert json.loads(out) == {"m": 1, "sizes": [2], "rows": [[1, 0], [-1, 1]]}
    _, out, _ = call(capsys, "reduce", str(fixtures_dir / "trefoil.json"))
    assert json.loads(out) == {"reduced": False, "irreducible": True, "deficient": []}


def test_output_file(capsys, tmp_path):
    target = tmp_path / "rep.json"
    code, out, _ = call(capsys, "build", "t1 - 1 + t1^-1", "-o", str(target))
    assert code == EXIT_OK and out == ""
    assert json.loads(target.read_text())["matrix"] == [[1, 0], [-1, 1]]


def test_selftest_small(capsys):
    code, out, _ = call(capsys, "selftest", "--seed", "3", "--cases", "10")
    assert code == EXIT_OK
    assert out.splitlines() == ["seed: 3", "mainprop: 10/10 identities hold; roundtrip: 10/10"]


def test_config_roundtrip():
    cfg = config_from_args(["compare", "a.json", "b.json", "--obstruction-only"])
    assert cfg == CliConfig(command="compare", files=("a.json", "b.json"), obstruction_only=True)


def test_run_returns_streams_separately():
    code, out, err = run(CliConfig(command="build", poly="t1 + 1"))
    assert code == EXIT_INPUT and out == "" and "not symmetric" in err


def test_dumps_keeps_rows_on_one_line():
    text = dumps({"rows": [[1, 2], [3, 4]], "x": []})
    assert "[1, 2]" in text and json.loads(text) == {"rows": [[1, 2], [3, 4]], "x": []}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "blseifert", "build", "t1 - 1 + t1^-1", "--format", "text"],
                          capture_output=True, text=True, check=True)
    assert "delta: t1 - 1 + t1^-1" in proc.stdout
