import json

import numpy as np

from jampack.cli import dispatch
from jampack.configuration import Configuration
from jampack.files import read_config, write_config


def test_build_square_then_verify(tmp_path, capsys):
    out = tmp_path / "sq.json"
    assert dispatch(["build-square", "--N", "4", "--out", str(out)]) == 0
    capsys.readouterr()
    assert dispatch(["verify", str(out)]) == 0
    text = capsys.readouterr().out
    assert "stable: True" in text


def test_verify_movable_exit_code(tmp_path, capsys):
    path = tmp_path / "free.json"
    write_config(Configuration(1.0, [[3.0, 3.0], [7.0, 7.0]], (10.0, 10.0)),
                 path)
    assert dispatch(["verify", str(path)]) == 2
    text = capsys.readouterr().out
    assert "stable: False" in text
    assert "rattlers: 2" in text


def test_verify_json_format(tmp_path, capsys):
    out = tmp_path / "j.json"
    assert dispatch(["five-disc", "--out", str(out)]) == 0
    capsys.readouterr()
    assert dispatch(["verify", str(out), "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["stable"] is True
    assert doc["parameters"]["tol"] == 1e-9


def test_simulate_frozen(tmp_path, capsys):
    out = tmp_path / "five.json"
    dispatch(["five-disc", "--out", str(out)])
    capsys.readouterr()
    assert dispatch(["simulate", str(out), "--steps", "20000",
                     "--seed", "7", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["accepted"] == 0
    assert doc["parameters"]["seed"] == 7


def test_escape_reports_acceptance(tmp_path, capsys):
    out = tmp_path / "five.json"
    dispatch(["five-disc", "--out", str(out)])
    capsys.readouterr()
    assert dispatch(["escape", str(out), "--shrink", "1.0", "0.95",
                     "--steps", "20000", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["acceptance"]["1.0"] == 0.0
    assert doc["acceptance"]["0.95"] > 0.0


def test_build_bridge_and_junction(tmp_path, capsys):
    out = tmp_path / "b.json"
    assert dispatch(["build-bridge", "--N", "4", "--out", str(out)]) == 0
    assert read_config(out).n == 36
    out2 = tmp_path / "j.json"
    assert dispatch(["junction", "--out", str(out2)]) == 0
    assert read_config(out2).n == 6


def test_tiling_and_density(tmp_path, capsys):
    out = tmp_path / "t.json"
    assert dispatch(["tiling", "--window", "5", "--out", str(out),
                     "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["n"] == read_config(out).n
    assert dispatch(["density", str(out), "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert 0.3 < doc["density"] < 0.45


def test_render_writes_svg(tmp_path):
    cfg = tmp_path / "five.json"
    dispatch(["five-disc", "--out", str(cfg)])
    out = tmp_path / "five.svg"
    assert dispatch(["render", str(cfg), "--contacts", "--color",
                     "--out", str(out)]) == 0
    assert out.read_text().count("<circle") == 5


def test_identical_invocations_identical_files(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    dispatch(["build-bridge", "--N", "4", "--out", str(a)])
    dispatch(["build-bridge", "--N", "4", "--out", str(b)])
    assert a.read_text().replace(str(a), "") == \
        b.read_text().replace(str(b), "")


def test_unknown_flag_exit_1(capsys):
    assert dispatch(["five-disc", "--bogus"]) == 1
    assert "usage" in capsys.readouterr().err


def test_missing_file_exit_1(capsys):
    assert dispatch(["verify", "/nonexistent/x.json"]) == 1
    assert "error" in capsys.readouterr().err


def test_assembly_failure_exit_1(capsys):
    assert dispatch(["build-square", "--N", "4", "--layout",
                     "interior-bridges"]) == 1
    assert "error" in capsys.readouterr().err


def test_overlapping_input_refused(tmp_path, capsys):
    path = tmp_path / "bad.json"
    write_config(Configuration(1.0, [[0.0, 0.0], [1.5, 0.0]]), path)
    assert dispatch(["verify", str(path)]) == 1
    assert dispatch(["simulate", str(path), "--steps", "10"]) == 1
