from __future__ import annotations

import csv
import json
import subprocess
import sys
from pathlib import Path

import pytest

from polydom.cli import SCHEMA_VERSION, bench_rows, main
from polydom.fixtures import example_polygon
from polydom.geom_model import parse_model, serialize_model
from polydom.oracles import parse_digraph


def run(capsys, *argv: str) -> tuple[int, dict]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip().startswith("{") else {}


@pytest.fixture
def fig(tmp_path: Path) -> str:
    path = tmp_path / "fig2.poly"
    path.write_text(serialize_model(example_polygon()))
    return str(path)


@pytest.fixture
def path3(tmp_path: Path) -> str:
    path = tmp_path / "path3.digraph"
    path.write_text("digraph v1\n3 2\n1 2\n2 3\n")
    return str(path)


class TestSolve:
    def test_polygon_pds(self, capsys, fig: str) -> None:
        code, report = run(capsys, "solve", "pds", "--engine", "polygon", fig)
        assert code == 0
        assert report["size"] == 4 and report["feasible"] is True
        assert report["verdicts"] == {"paired_dominating": "pass"}
        assert report["schema"] == SCHEMA_VERSION
        assert report["solution"] == sorted(report["solution"])
        assert len(report["input_digest"]) == 64

    def test_oracle_ds(self, capsys, fig: str) -> None:
        code, report = run(capsys, "solve", "ds", "--engine", "oracle", fig)
        assert code == 0 and report["size"] == 2

    def test_isolated_chord_is_infeasible(self, capsys, tmp_path: Path) -> None:
        model = tmp_path / "iso.poly"
        model.write_text("poly v1\n4 3\n2 2 1 1\n1 3\n2 4\n5 6\n")
        code, report = run(capsys, "solve", "pds", str(model))
        assert code == 2 and report["feasible"] is False

    def test_parse_error_names_line(self, capsys, tmp_path: Path) -> None:
        model = tmp_path / "bad.poly"
        model.write_text("poly v1\n3 2\n2 1 1\n1 2\n3 4\n")
        assert main(["solve", "ds", str(model)]) == 1
        assert "line 4: chord endpoints on same side" in capsys.readouterr().err

    def test_oracle_cap(self, capsys, fig: str) -> None:
        assert main(["--oracle-cap", "4", "solve", "ds", "--engine", "oracle", fig]) == 1
        assert "cap" in capsys.readouterr().err

    def test_polygon_engine_needs_sides(self, capsys, tmp_path: Path) -> None:
        model = tmp_path / "c.circle"
        model.write_text("circle v1\n2\n1 3\n2 4\n")
        assert main(["solve", "ds", str(model)]) == 1

    def test_missing_file(self, capsys, tmp_path: Path) -> None:
        assert main(["solve", "ds", str(tmp_path / "nope.poly")]) == 1

    def test_text_format(self, capsys, fig: str) -> None:
        assert main(["--format", "text", "solve", "ds", fig]) == 0
        out = capsys.readouterr().out
        assert "size: 2" in out and "verdicts: dominating=pass" in out

    def test_jobs_flag_after_subcommand(self, capsys, fig: str) -> None:
        code, report = run(capsys, "solve", "pds", fig, "--jobs", "2")
        assert code == 0 and report["size"] == 4

    def test_reports_identical_apart_from_duration(self, capsys, fig: str) -> None:
        _, a = run(capsys, "solve", "pds", fig)
        _, b = run(capsys, "solve", "pds", fig)
        a.pop("duration_s"), b.pop("duration_s")
        assert a == b

    def test_bad_usage(self, capsys) -> None:
        assert main(["solve"]) == 1
        assert main(["--jobs", "0", "solve", "ds", "x"]) == 1


class TestReduceAndWitness:
    def test_reduce_running_instance(self, capsys, tmp_path: Path) -> None:
        dg = tmp_path / "run.digraph"
        dg.write_text("digraph v1\n3 2\n1 3\n2 3\n")
        out = tmp_path / "run.circle"
        code, report = run(capsys, "reduce", str(dg), "--out", str(out))
        assert code == 0
        assert report["chords"] == 57 and report["target"] == 22
        assert report["verdicts"] == {"structure": "pass"}
        assert parse_model(out.read_text()).m == 57
        assert Path(f"{out}.names").exists()

    def test_reduce_two_vertices(self, capsys, tmp_path: Path) -> None:
        dg = tmp_path / "e.digraph"
        dg.write_text("digraph v1\n2 1\n1 2\n")
        code, report = run(capsys, "reduce", str(dg), "--out", str(tmp_path / "e.circle"))
        assert code == 0 and report["chords"] == 25 and report["target"] == 10

    def test_reduce_malformed(self, capsys, tmp_path: Path) -> None:
        dg = tmp_path / "bad.digraph"
        dg.write_text("digraph v1\n3 1\n1 x\n")
        assert main(["reduce", str(dg), "--out", str(tmp_path / "x")]) == 1
        assert "line 3" in capsys.readouterr().err

    def test_reduce_single_vertex(self, capsys, tmp_path: Path) -> None:
        dg = tmp_path / "one.digraph"
        dg.write_text("digraph v1\n1 0\n")
        assert main(["reduce", str(dg), "--out", str(tmp_path / "x")]) == 1

    def test_witness_round_trip(self, capsys, tmp_path: Path, path3: str) -> None:
        model = tmp_path / "p3.circle"
        assert run(capsys, "reduce", path3, "--out", str(model))[0] == 0
        walk = tmp_path / "path.txt"
        walk.write_text("1 2 3\n")
        art = ["--digraph", path3, "--model", str(model)]
        code, report = run(capsys, "witness", "to-pds", str(walk), *art)
        assert code == 0 and report["size"] == 22
        assert report["verdicts"] == {"paired_dominating": "pass"}
        chords = tmp_path / "set.txt"
        chords.write_text(" ".join(map(str, report["solution"])) + "\n")
        code, report = run(capsys, "witness", "to-path", str(chords), *art)
        assert code == 0 and report["solution"] == [1, 2, 3]
        assert report["verdicts"] == {"hamiltonian_path": "pass"}
        chords.write_text(" ".join(map(str, report["solution"][:2])) + "\n")
        code, report = run(capsys, "witness", "to-path", str(chords), *art)
        assert code == 2 and report["reason"] == "not a target-size PDS"

    def test_invalid_path_witness(self, capsys, tmp_path: Path, path3: str) -> None:
        model = tmp_path / "p3.circle"
        run(capsys, "reduce", path3, "--out", str(model))
        walk = tmp_path / "path.txt"
        walk.write_text("1 3 2\n")
        code, report = run(capsys, "witness", "to-pds", str(walk), "--digraph", path3, "--model", str(model))
        assert code == 2 and report["feasible"] is False

    def test_validate_artifact_and_model(self, capsys, tmp_path: Path, path3: str, fig: str) -> None:
        model = tmp_path / "p3.circle"
        run(capsys, "reduce", path3, "--out", str(model))
        code, report = run(capsys, "validate", "--model", str(model), "--digraph", path3)
        assert code == 0 and report["violations"] == []
        code, report = run(capsys, "validate", "--model", fig)
        assert code == 0 and report["edges"] == 12 and report["sides"] == 4


class TestGen:
    def test_polygon_deterministic(self, capsys) -> None:
        main(["gen", "polygon", "--k", "4", "--m", "10", "--seed", "1"])
        a = capsys.readouterr().out
        main(["--seed", "1", "gen", "polygon", "--k", "4", "--m", "10"])
        assert capsys.readouterr().out == a
        model = parse_model(a)
        assert model.k == 4 and model.m == 10

    def test_digraph(self, capsys) -> None:
        assert main(["gen", "digraph", "--n", "4", "--p", "0.5", "--seed", "9"]) == 0
        assert parse_digraph(capsys.readouterr().out).n == 4

    def test_writes_file_and_report(self, capsys, tmp_path: Path) -> None:
        out = tmp_path / "g.poly"
        code, report = run(capsys, "gen", "polygon", "--k", "3", "--m", "5", "--out", str(out))
        assert code == 0 and report["seed"] == 0
        assert parse_model(out.read_text()).m == 5

    @pytest.mark.parametrize(
        "argv",
        [["gen", "polygon", "--k", "2", "--m", "3"], ["gen", "polygon", "--k", "3"], ["gen", "digraph", "--n", "3", "--p", "2"]],
    )
    def test_invalid_ranges(self, capsys, argv: list[str]) -> None:
        assert main(argv) == 1


class TestBench:
    def test_csv_deterministic_except_runtime(self, capsys, tmp_path: Path) -> None:
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        for out in (a, b):
            assert main(["--seed", "3", "bench", "--k", "3", "4", "--m", "2", "4", "--seeds", "2", "--out", str(out)]) == 0
        rows_a = [r[:3] for r in csv.reader(a.open())]
        rows_b = [r[:3] for r in csv.reader(b.open())]
        assert rows_a == rows_b
        assert rows_a[0] == ["k", "m", "candidates"] and len(rows_a) == 5

    def test_empty_grid(self, capsys, tmp_path: Path) -> None:
        out = tmp_path / "e.csv"
        assert main(["bench", "--k", "--out", str(out)]) == 0
        assert out.read_text() == "k,m,candidates,runtime_s\n"

    def test_candidates_grow_with_m(self) -> None:
        rows = bench_rows([3, 4], [2, 4, 6, 8], seeds=3, base_seed=0)
        for k in (3, 4):
            counts = [r[2] for r in rows if r[0] == k]
            assert counts == sorted(counts)

    def test_plot(self, capsys, tmp_path: Path) -> None:
        pytest.importorskip("matplotlib")
        png = tmp_path / "b.png"
        main(["bench", "--k", "3", "--m", "2", "3", "--seeds", "1", "--out", str(tmp_path / "b.csv"), "--plot", str(png)])
        assert png.read_bytes()[:4] == b"\x89PNG"


def test_module_entry_point(fig: str) -> None:
    proc = subprocess.run(
        [sys.executable, "-m", "polydom.cli", "solve", "ds", fig], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["size"] == 2
