"""Command line behavior: tables, JSON blocks, exit codes, round trips."""

import importlib.resources
import json
import subprocess
import sys

from tensalg.cli import main
from tensalg.workspace import load

WORKSPACE = str(importlib.resources.files("tensalg")
                / "data" / "paper_example.json")


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def json_block(out: str) -> dict:
    lines = out.splitlines()
    start = max(i for i, line in enumerate(lines) if line == "{")
    return json.loads("\n".join(lines[start:]))


def test_paper_example_golden(capsys):
    code, out = run_cli(capsys, "paper-example")
    assert code == 0
    assert "lax: yes, injective: no" in out
    block = json_block(out)
    assert block["failed"] == 0
    assert block["homs"]["f7"] == ["0", "0", "1", "1", "1"]
    assert block["r"] == [["1", "0", "0"], ["1", "0", "0"], ["1", "1", "0"]]
    assert block["mu"][1] == ["0", "0", "1"]
    assert block["checks"]["shipped-workspace"] is True


def test_paper_example_quiet_is_pure_json(capsys):
    code, out = run_cli(capsys, "paper-example", "--quiet")
    assert code == 0
    json.loads(out)


def test_validate_shipped_workspace(capsys):
    code, out = run_cli(capsys, "validate", "--workspace", WORKSPACE)
    assert code == 0
    block = json_block(out)
    assert block["quantales"] == ["V"]
    assert set(block["modules"]) == {"A", "L"}


def test_homs_command(capsys):
    code, out = run_cli(capsys, "homs", "A", "L", "--workspace", WORKSPACE)
    assert code == 0
    block = json_block(out)
    assert block["count"] == 3
    assert block["homs"][2] == ["0", "1", "1", "1", "1"]


def test_hom_frame_command_and_out(tmp_path, capsys):
    out_file = tmp_path / "hf.json"
    code, out = run_cli(capsys, "hom-frame", "H", "L",
                        "--workspace", WORKSPACE, "--out", str(out_file))
    assert code == 0
    block = json_block(out)
    assert block["points"] == 3
    # the written document reloads to the same frame
    ws = load(str(out_file))
    frame = ws.frame(block["frame"])
    assert [[frame.quantale.labels[v] for v in row] for row in frame.r] \
        == block["r"]


def test_tensor_command_and_out(tmp_path, capsys):
    out_file = tmp_path / "tensor.json"
    code, out = run_cli(capsys, "tensor", "J", "H",
                        "--workspace", WORKSPACE, "--out", str(out_file))
    assert code == 0
    block = json_block(out)
    assert block["classes"] == 1 and block["tuples"] == 25
    ws = load(str(out_file))
    assert ws.module(block["module"]).n == 1


def test_fj_command_and_out(tmp_path, capsys):
    out_file = tmp_path / "fj.json"
    code, out = run_cli(capsys, "fj", "L", "J",
                        "--workspace", WORKSPACE, "--out", str(out_file))
    assert code == 0
    block = json_block(out)
    assert block["size"] == 4
    assert block["F"] == ["(0,0)", "(0,1)", "(1,1)", "(1,1)"]
    ws = load(str(out_file))
    fsl = ws.fsemilattice(block["fsl"])
    assert [fsl.module.labels[v] for v in fsl.F] == block["F"]


def test_check_command(capsys):
    code, out = run_cli(capsys, "check", "--suite", "laws", "--count", "5",
                        "--quiet")
    assert code == 0
    block = json_block(out)
    assert block["failed"] == 0
    assert block["counts"]["laws"]["checks"] > 0


def test_check_adjunctions_small(capsys):
    code, out = run_cli(capsys, "check", "--suite", "adjunctions",
                        "--count", "3", "--seed", "1", "--quiet")
    assert code == 0
    block = json_block(out)
    assert set(block["counts"]) == {"triangles", "naturality"}


def test_unknown_object_fails(capsys):
    code, out = run_cli(capsys, "homs", "A", "missing",
                        "--workspace", WORKSPACE)
    assert code == 1
    block = json_block(out)
    assert block["error"] == "UnknownReference"


def test_missing_workspace_fails(capsys):
    code, out = run_cli(capsys, "validate")
    assert code == 1
    block = json_block(out)
    assert block["error"] == "ParseError"


def test_broken_workspace_reports_position(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{broken", encoding="utf-8")
    code, out = run_cli(capsys, "validate", "--workspace", str(bad))
    assert code == 1
    assert json_block(out)["error"] == "ParseError"


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tensalg.cli", "paper-example", "--quiet"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["failed"] == 0
