from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from tcat.cli import main, run
from tcat.cocycles import standard_cocycle
from tcat.convolution import ConvCatSpec
from tcat.fusion import pointed_category


def call(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.mark.parametrize("p,order", [(1, "4"), (0, "2")])
def test_ind_order(capsys, p, order):
    code, out = call(capsys, "ind-order", "--n", "2", "--p", str(p), "--simple", "1")
    assert code == 0 and out == order + "\n"


def test_center_lines(capsys):
    code, out = call(capsys, "center", "--n", "2", "--p", "1")
    assert code == 0
    assert "g=1 chi(1)=i theta=i" in out.splitlines()


def test_json_reports_are_single_documents(capsys):
    for argv in (["center", "--json"], ["classify-rank2", "--json"], ["cells", "--type", "A2", "--json"]):
        code, out = call(capsys, *argv)
        doc = json.loads(out)
        assert doc["exit"] == code == 0
        assert doc["command"] == "tcat " + " ".join(argv)
        assert all(c["ok"] for c in doc["checks"])


def test_pentagon_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(pointed_category(standard_cocycle(3, 1)).dumps())
    assert call(capsys, "pentagon", "--input", str(good))[0] == 0
    cocycle = tmp_path / "w.json"
    cocycle.write_text(standard_cocycle(2, 1).dumps())
    assert call(capsys, "pentagon", "--input", str(cocycle))[0] == 0
    corrupted = tmp_path / "bad.json"
    corrupted.write_text(standard_cocycle(2, 1).with_value((1, 1, 1), 1).with_value((1, 0, 1), -1).dumps())
    code, out = call(capsys, "pentagon", "--input", str(corrupted), "--json")
    doc = json.loads(out)
    assert code == 1 and doc["payload"]["violations"]
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    assert call(capsys, "pentagon", "--input", str(broken))[0] == 2
    assert call(capsys, "pentagon", "--input", str(tmp_path / "missing.json"))[0] == 2


@pytest.mark.parametrize("argv", [
    ["center", "--n", "0"],
    ["ind-order", "--simple", "5"],
    ["cells", "--type", "E8"],
    ["jring", "--type", "B2", "--cell-index", "7"],
    ["jring", "--type", "B2", "--cell-index", "1", "--corner", "s1 s2"],
    ["modcats", "--n", "4", "--p", "1"],
    ["verify-theorem-model", "--yprime", "0"],
    ["center", "--root-bound", "0"],
    ["no-such-command"],
])
def test_malformed_input_exits_2(capsys, argv):
    assert main(argv) == 2


def test_convcat(tmp_path, capsys):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps(ConvCatSpec.free_cyclic(2).to_json()))
    code, out = call(capsys, "convcat", "--spec", str(spec), "--split", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["payload"]["split"]["gauge_found"]
    plain = tmp_path / "plain.json"
    plain.write_text(json.dumps({"Y": ["a", "b"]}))
    code, out = call(capsys, "convcat", "--spec", str(plain), "--reconstruct", "a~a", "--corner", "b~b")
    assert code == 0 and "corner at b~b: b~b" in out
    assert call(capsys, "convcat", "--spec", str(plain), "--split")[0] == 2
    assert call(capsys, "convcat", "--spec", str(plain), "--corner", "a~b")[0] == 2


def test_modcats(capsys):
    code, out = call(capsys, "modcats", "--n", "2", "--p", "1", "--max-rank", "2")
    assert code == 0 and out.count("class ") == 1 and "obstructed: rank=1" in out
    code, out = call(capsys, "modcats", "--n", "2", "--p", "0", "--json")
    assert [c["rank"] for c in json.loads(out)["payload"]["classes"]] == [1, 2]


def test_cells_and_jring(capsys):
    code, out = call(capsys, "cells", "--type", "B2")
    assert code == 0
    assert "cell 1 a=1 size=6" in out and "  s1 | s2 | s1 s2 | s2 s1 | s1 s2 s1 | s2 s1 s2" in out
    code, out = call(capsys, "jring", "--type", "B2", "--cell-index", "1", "--corner", "s")
    assert code == 0 and out.rstrip().endswith("tag: Z[Z/2]")
    code, out = call(capsys, "jring", "--type", "A2", "--cell-index", "1")
    assert code == 0 and "t[s1 s2] t[s2 s1] = t[s1]" in out


@pytest.mark.parametrize("k", [1, 2])
def test_verify_theorem_model(capsys, k):
    code, out = call(capsys, "verify-theorem-model", "--yprime", str(k))
    assert code == 0 and "FAIL" not in out and out.count("[pass]") == 7


def test_failed_check_sets_exit_1():
    rep, _ = run(["center"])
    rep.check("forced", False, "witness")
    assert rep.status == 1
    assert "FAILED forced: witness" in rep.render(False)


def test_console_script_is_deterministic():
    env = dict(os.environ)
    outs = []
    for seed in ("1", "2"):
        env["PYTHONHASHSEED"] = seed
        proc = subprocess.run([sys.executable, "-m", "tcat.cli", "modcats", "--n", "2", "--p", "0", "--json"],
                              capture_output=True, env=env, check=False)
        assert proc.returncode == 0
        outs.append(proc.stdout)
    assert outs[0] == outs[1]
