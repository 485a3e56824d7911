import json

import pytest

from rowpack.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_search_49(capsys):
    code, out, _ = run_cli(capsys, "search", "--n", "49")
    assert code == 0
    blob = json.loads(out)
    assert blob["class"] == "may_hole"
    assert blob["width"] == 34


def test_search_1(capsys):
    code, out, _ = run_cli(capsys, "search", "--n", "1")
    blob = json.loads(out)
    assert code == 0
    assert blob["area"] == {"p": 4, "q": 0, "float": 4.0}


def test_search_79(capsys):
    code, out, _ = run_cli(capsys, "search", "--n", "79")
    assert json.loads(out)["class"] == "must_hole"


def test_range_summary_and_file(tmp_path, capsys):
    out_path = tmp_path / "scan.jsonl"
    code, out, _ = run_cli(
        capsys, "range", "--from", "1", "--to", "10", "--jobs", "1", "--out", str(out_path)
    )
    assert code == 0
    summary = json.loads(out)
    assert summary["irregular"] == 0
    lines = out_path.read_text().splitlines()
    assert len(lines) == 10
    assert json.loads(lines[0])["n"] == 1


def test_range_parallel_bytes_match_serial(tmp_path, capsys):
    serial = tmp_path / "serial.jsonl"
    parallel = tmp_path / "parallel.jsonl"
    run_cli(capsys, "range", "--from", "40", "--to", "90", "--jobs", "1", "--out", str(serial))
    run_cli(capsys, "range", "--from", "40", "--to", "90", "--jobs", "3", "--out", str(parallel))
    assert serial.read_bytes() == parallel.read_bytes()


def test_range_empty_errors(capsys):
    code, _, err = run_cli(capsys, "range", "--from", "9", "--to", "3", "--jobs", "1")
    assert code == 2
    assert "error" in err


def test_table_reports(capsys):
    code, out, _ = run_cli(capsys, "table", "--which", "1")
    assert code == 0
    blob = json.loads(out)
    assert blob["ok"] is True
    assert {e["n"] for e in blob["errata"]} == {11, 12, 14}

    code, out, _ = run_cli(capsys, "table", "--which", "2")
    assert code == 0
    blob = json.loads(out)
    assert blob["matched"] == 158


def test_irregular_list(capsys):
    code, out, _ = run_cli(capsys, "irregular", "--to", "120", "--jobs", "1")
    assert code == 0
    assert [int(v) for v in out.split()] == [49, 61, 79, 97, 107]


def test_milestones(capsys):
    code, out, _ = run_cli(capsys, "milestones", "--to", "340", "--jobs", "1")
    blob = json.loads(out)
    assert code == 0
    assert blob["even_h_holed"] == 317


def test_theory(capsys):
    code, out, _ = run_cli(capsys, "theory", "--kmax", "3")
    blob = json.loads(out)
    assert code == 0
    assert blob["smallest_two_row_m"] == 7
    assert blob["convergents"][-1]["N"] == 2910
    assert blob["densities"]["hex"] == pytest.approx(0.90689968)


def test_aspect_csv(tmp_path, capsys):
    out_path = tmp_path / "aspect.csv"
    code, _, _ = run_cli(capsys, "aspect", "--to", "30", "--jobs", "1", "--out", str(out_path))
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines[0] == "n,aspect"
    assert lines[-1].startswith("limit,")


def test_render_svg(tmp_path, capsys):
    out_path = tmp_path / "p.svg"
    code, _, _ = run_cli(capsys, "render", "--n", "25", "--out", str(out_path))
    assert code == 0
    svg = out_path.read_text()
    assert svg.count("<circle") == 25


def test_render_variant_out_of_range(capsys):
    code, _, err = run_cli(capsys, "render", "--n", "12", "--variant", "9")
    assert code == 2
    assert "variant" in err


def test_compact_requires_seed(capsys):
    code, _, err = run_cli(capsys, "compact", "--n", "2")
    assert code == 2
    assert "seed" in err


def test_compact_single_run(tmp_path, capsys):
    trace = tmp_path / "trace.csv"
    code, out, _ = run_cli(capsys, "compact", "--n", "2", "--seed", "5", "--out", str(trace))
    assert code == 0
    blob = json.loads(out)
    assert blob["seed"] == 5 and blob["density"] > 0.3
    assert trace.read_text().splitlines()[0] == "move,width,height,density"


def test_compact_json_packing(tmp_path, capsys):
    out_path = tmp_path / "packing.json"
    code, _, _ = run_cli(
        capsys, "compact", "--n", "3", "--seed", "1", "--format", "json", "--out", str(out_path)
    )
    assert code == 0
    blob = json.loads(out_path.read_text())
    assert len(blob["centers"]) == 3
