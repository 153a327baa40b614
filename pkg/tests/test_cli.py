import json
import subprocess
import sys
import time

import pytest

from scramblenum import cli, sn_solver
from scramblenum.families import c_nk, k4, ll6, path
from scramblenum.formats import save_graph


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


@pytest.fixture
def files(tmp_path):
    save_graph(ll6(), tmp_path / "ll6.json")
    save_graph(k4(), tmp_path / "k4.json")
    save_graph(path(3), tmp_path / "tree.json")
    return tmp_path


def test_sn_ll6(capsys, files):
    code, out = run(capsys, "sn", "--graph", files / "ll6.json")
    assert code == 0 and out["sn"] == 3 and out["verified"]
    assert out["run"]["inputs"][str(files / "ll6.json")]


def test_sn_certify_writes_witnesses(capsys, files):
    code, out = run(capsys, "sn", "--graph", files / "ll6.json", "--certify", "--witness-dir", files / "w")
    assert code == 0
    assert out["upper_witness"]["kind"] == "tree-cut-decomposition"
    code, order = run(capsys, "order", "--scramble", files / "w" / "scramble.json")
    assert code == 0 and order["order"] == 3 and order["h"] == 3
    code, w = run(capsys, "width", "--graph", files / "ll6.json", "--decomp", files / "w" / "decomposition.json")
    assert code == 0 and w["width"] == 3


def test_family_and_lemma_decomposition_width(capsys, files):
    code, out = run(capsys, "family", "C", "--n", 8, "--k", 3, "--out", files / "c83.json")
    assert code == 0 and out["graph"]["n"] == 8 and out["edge_connectivity"] == 6
    code, out = run(capsys, "lemma-decomp", "--family", "C", "--n", 8, "--k", 3,
                    "--graph-out", files / "c83e.json", "--out", files / "lemma41.json")
    assert code == 0 and out["width"] == 5
    code, out = run(capsys, "width", "--graph", files / "c83e.json", "--decomp", files / "lemma41.json")
    assert code == 0 and out["width"] == 5


def test_family_multicycle(capsys):
    code, out = run(capsys, "family", "multicycle", "--mults", 2, 2, 1)
    assert code == 0 and out["graph"]["edges"] == [[0, 1, 2], [0, 2, 1], [1, 2, 2]]


def test_classify(capsys, files):
    assert run(capsys, "classify", "--graph", files / "tree.json")[1]["verdict"] == "sn=1"
    code, out = run(capsys, "classify", "--graph", files / "k4.json")
    assert out["verdict"] == "sn>=3" and out["pattern"] == "K4"


def test_text_edge_list_input(capsys, tmp_path):
    (tmp_path / "g.txt").write_text("# triangle with two doubled sides\n0 1 2\n1 2 2\n0 2\n")
    code, out = run(capsys, "sn", "--graph", tmp_path / "g.txt")
    assert code == 0 and out["sn"] == 3


def test_topominor_exit_codes(capsys, files):
    save_graph(c_nk(5, 2), files / "c52.json")
    save_graph(c_nk(4, 2), files / "c42.json")
    code, out = run(capsys, "topominor", "--pattern", files / "tree.json", "--host", files / "k4.json")
    assert code == 0 and out["found"] and out["verified"] and "branch_map" in out and "path_map" in out
    code, out = run(capsys, "topominor", "--pattern", files / "k4.json", "--host", files / "ll6.json")
    assert code == 1 and not out["found"]
    code, _ = run(capsys, "topominor", "--pattern", files / "c42.json", "--host", files / "c52.json")
    assert code == 1
    code, out = run(capsys, "topominor", "--pattern", files / "c42.json", "--host", files / "c52.json", "--multi")
    assert code == 0 and out["found"]


def test_scw_and_dsn(capsys, files):
    code, out = run(capsys, "scw", "--graph", files / "ll6.json", "--certify", "--out", files / "d.json")
    assert code == 0 and out["scw"] == 3 and out["verified"] and (files / "d.json").exists()
    code, out = run(capsys, "dsn", "--graph", files / "k4.json")
    assert code == 0 and out["dsn"] == 3


def test_minimal(capsys, files):
    code, out = run(capsys, "minimal", "--graph", files / "ll6.json", "--k", 3)
    assert code == 0 and out["minimal"]
    code, out = run(capsys, "minimal", "--graph", files / "ll6.json", "--k", 4)
    assert code == 1 and not out["minimal"]


def test_verify_commands(capsys):
    code, out = run(capsys, "verify", "lemma", "--name", "bridge", "--max-n", 4, "--max-mult", 2)
    assert code == 0 and out["passed"]
    code, out = run(capsys, "verify", "corollary-3ec", "--max-n", 4, "--max-mult", 2)
    assert code == 0 and out["passed"] and out["tested"] > 0


def test_verify_violation_exit_code(capsys, monkeypatch):
    fake = {"lemma": "bridge", "violations": [{"graph": [[0, 1, 1]]}], "passed": False}
    monkeypatch.setattr(cli, "verify_lemma", lambda name, n, m: fake)
    code, out = run(capsys, "verify", "lemma", "--name", "bridge", "--max-n", 3, "--max-mult", 1)
    assert code == 2 and out["violations"] == fake["violations"]


def test_verify_lemma_needs_name(capsys):
    code, _ = run(capsys, "verify", "lemma", "--max-n", 3, "--max-mult", 1)
    assert code == 64


def test_reproduce(capsys):
    code, out = run(capsys, "reproduce", "w5")
    assert code == 0 and out["passed"] and out["got"]["sn"] == 4 and out["got"]["dsn"] == 3


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["sn"],
    ["sn", "--graph", "missing.json"],
    ["minimal", "--graph", "x.json", "--k", "three"],
    ["reproduce", "fig99"],
    ["--timeout-secs", "0", "sn", "--graph", "x.json"],
])
def test_usage_errors_exit_64(capsys, argv):
    assert cli.main(argv) == 64


def test_malformed_and_disconnected_inputs(capsys, tmp_path):
    (tmp_path / "bad.json").write_text('{"n": 2, "edges": [[0, 1, 1], [1, 0, 2]]}')
    assert run(capsys, "sn", "--graph", tmp_path / "bad.json")[0] == 64
    (tmp_path / "split.json").write_text('{"n": 3, "edges": [[0, 1, 1]]}')
    code, out = run(capsys, "sn", "--graph", tmp_path / "split.json")
    assert code == 64 and out["error"] == "input"


def test_size_limit_exit_65(capsys, tmp_path):
    save_graph(c_nk(11, 1), tmp_path / "big.json")
    code, out = run(capsys, "sn", "--graph", tmp_path / "big.json")
    assert code == 65 and out["error"] == "size-limit"
    code, _ = run(capsys, "scw", "--graph", tmp_path / "big.json")
    assert code == 65


def test_timeout_reports_interval(capsys, files, monkeypatch):
    def slow(g, k):
        time.sleep(5)

    monkeypatch.setattr(sn_solver, "scramble_at_least", slow)
    code, out = run(capsys, "--timeout-secs", 1, "sn", "--graph", files / "ll6.json", "--no-classifier")
    assert code == 66
    low, high = out["bounds"]
    assert low <= 3 <= high
    assert "sn" not in out


def test_output_is_deterministic_and_thread_independent(capsys, files):
    _, a = run(capsys, "sn", "--graph", files / "ll6.json", "--certify")
    _, b = run(capsys, "--threads", 4, "sn", "--graph", files / "ll6.json", "--certify")
    a.pop("run"), b.pop("run")
    assert a == b


def test_version(capsys):
    assert cli.main(["--version"]) == 0
    assert "scramblenum" in capsys.readouterr().out


def test_console_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "scramblenum.cli", "sn", "--graph", str(files / "k4.json")],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["sn"] == 3
