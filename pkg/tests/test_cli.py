import json

import numpy as np
import pytest

import gliderange as g
from gliderange.cli import main


def test_solve_grr_writes_document(tmp_path, warm_kernel):
    out = tmp_path / "result.json"
    code = main(["solve-grr", "--preset", "grrp-flat", "--out", str(out)])
    assert code == 0
    doc = g.parse_document(out.read_text().strip())
    assert doc.meta["kind"] == "grr"
    assert len(doc.field) == 101 * 101


def test_solve_mra_writes_document(tmp_path):
    out = tmp_path / "result.json"
    code = main(["solve-mra", "--preset", "mrap-flat", "--out", str(out)])
    assert code == 0
    doc = g.parse_document(out.read_text().strip())
    assert doc.meta["kind"] == "mra"


def test_problem_kind_mismatch_is_usage_error(capsys):
    assert main(["solve-grr", "--preset", "mrap-flat"]) == 2
    assert "error:" in capsys.readouterr().err


def test_unknown_preset_is_usage_error(capsys):
    assert main(["solve-grr", "--preset", "nope"]) == 2
    assert "error:" in capsys.readouterr().err


def test_scenario_and_preset_together_rejected(tmp_path):
    path = tmp_path / "s.json"
    path.write_text("{}")
    assert main(["solve-grr", "--preset", "grrp-flat",
                 "--scenario", str(path)]) == 2


def test_missing_source_rejected():
    assert main(["solve-grr"]) == 2


def test_bad_subcommand_is_usage_error():
    assert main(["frobnicate"]) == 2


def test_trace_outputs_trajectory(tmp_path):
    out = tmp_path / "trace.json"
    code = main(["trace", "--preset", "mrap-flat", "--target", "40,65",
                 "--out", str(out)])
    assert code == 0
    doc = g.parse_document(out.read_text().strip())
    assert len(doc.trajectories) == 1
    assert doc.trajectories[0]["termination"] == "reached-origin"


def test_trace_unreachable_is_solver_error(tmp_path, capsys):
    scenario_doc = {
        "grid": {"n_cols": 21, "n_rows": 21, "spacing": 1.0},
        "elevation": [0.0] * 441,
        "aircraft": {"mode": "constant", "g0": 1.0},
        "problem": {"kind": "grr", "start_xy": [10.0, 10.0], "z0": 3.0},
    }
    path = tmp_path / "s.json"
    path.write_text(json.dumps(scenario_doc))
    assert main(["trace", "--scenario", str(path), "--target", "20,20"]) == 1
    assert "error:" in capsys.readouterr().err


def test_bad_target_is_usage_error():
    assert main(["trace", "--preset", "mrap-flat", "--target", "oops"]) == 2


def test_contours_outputs_levels(tmp_path):
    out = tmp_path / "contours.json"
    code = main(["contours", "--preset", "mrap-flat", "--levels", "20,40",
                 "--out", str(out)])
    assert code == 0
    doc = g.parse_document(out.read_text().strip())
    assert [c["level"] for c in doc.contours] == [20.0, 40.0]
    assert all(len(c["polylines"]) > 0 for c in doc.contours)


def test_benchmark_single_name(capsys):
    assert main(["benchmark", "--name", "mrap-flat"]) == 0
    assert "mrap-flat" in capsys.readouterr().out


def test_benchmark_unknown_suite_rejected():
    assert main(["benchmark", "--suite", "nope"]) == 2


def test_cli_and_library_fields_agree(tmp_path):
    out = tmp_path / "result.json"
    assert main(["solve-mra", "--preset", "staircase", "--out", str(out)]) == 0
    doc = g.parse_document(out.read_text().strip())
    direct = g.solve_mrap(g.build_preset("staircase"))
    assert np.array_equal(g.field_array(doc), direct.V)
