"""End-to-end tests for the corrsphere command line."""

import json
import logging
from pathlib import Path

import numpy as np
import pandas as pd
import pytest

from corrsphere import SamplePoint, standardize
from corrsphere.cli import (
    EXIT_DATA,
    EXIT_NUMERICAL,
    EXIT_OK,
    EXIT_USAGE,
    build_parser,
    run_cli,
)
from corrsphere.errors import ConvergenceFailureError

ROWS = [
    [1.0, 2.0, 3.0, 5.0],
    [2.0, 1.0, 4.0, 3.0],
    [0.5, 2.5, 2.0, 6.0],
    [-1.0, 3.0, 1.0, 2.0],
    [3.0, 3.5, 1.0, 0.0],
    [4.0, 1.0, 0.5, 0.25],
]


@pytest.fixture
def data_csv(tmp_path: Path) -> Path:
    path = tmp_path / "data.csv"
    path.write_text("".join(",".join(repr(v) for v in row) + "\n" for row in ROWS))
    return path


@pytest.fixture
def labeled_csv(tmp_path: Path) -> Path:
    path = tmp_path / "labeled.csv"
    lines = ["id,a,b,c,d"]
    lines += [f"s{i + 1}," + ",".join(repr(v) for v in row) for i, row in enumerate(ROWS)]
    path.write_text("\n".join(lines) + "\n")
    return path


def run(capsys, *argv: str) -> tuple[int, str]:
    code = run_cli(list(argv))
    return code, capsys.readouterr().out


class TestStandardizeCommand:
    def test_csv_output(self, capsys, data_csv: Path) -> None:
        code, out = run(capsys, "standardize", "--input", str(data_csv))
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert len(lines) == len(ROWS)
        for line, row in zip(lines, ROWS, strict=True):
            values = np.array([float(field) for field in line.split(",")])
            np.testing.assert_allclose(values, standardize(SamplePoint(row)).values, atol=1e-9)

    def test_output_re_standardizes_to_itself(self, capsys, data_csv: Path, tmp_path: Path) -> None:
        first = tmp_path / "first.csv"
        assert run_cli(["standardize", "--input", str(data_csv), "--output", str(first)]) == EXIT_OK
        code, out = run(capsys, "standardize", "--input", str(first))
        assert code == EXIT_OK
        again = np.array([[float(f) for f in line.split(",")] for line in out.strip().splitlines()])
        original = np.array(
            [[float(f) for f in line.split(",")] for line in first.read_text().splitlines()]
        )
        np.testing.assert_allclose(again, original, atol=1e-9)

    def test_json_with_ids(self, capsys, labeled_csv: Path) -> None:
        code, out = run(
            capsys,
            "standardize",
            "--input", str(labeled_csv),
            "--header",
            "--id-column", "id",
            "--format", "json",
            "--canonical",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["ids"] == [f"s{i + 1}" for i in range(len(ROWS))]
        assert all(point[0] > 0 for point in payload["points"])

    def test_identical_across_runs(self, capsys, data_csv: Path) -> None:
        _, first = run(capsys, "standardize", "--input", str(data_csv))
        _, second = run(capsys, "standardize", "--input", str(data_csv))
        assert first == second


class TestDistmatCommand:
    def test_json_matrix(self, capsys, labeled_csv: Path) -> None:
        code, out = run(
            capsys,
            "distmat",
            "--input", str(labeled_csv),
            "--header",
            "--id-column", "id",
            "--format", "json",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        matrix = np.array(payload["matrix"])
        assert payload["ids"][0] == "s1"
        assert matrix.shape == (len(ROWS), len(ROWS))
        np.testing.assert_array_equal(matrix, matrix.T)
        np.testing.assert_array_equal(np.diag(matrix), 0.0)

    def test_csv_with_labels(self, capsys, labeled_csv: Path) -> None:
        code, out = run(
            capsys, "distmat", "--input", str(labeled_csv), "--header", "--id-column", "id"
        )
        assert code == EXIT_OK
        assert out.splitlines()[0] == ",s1,s2,s3,s4,s5,s6"

    def test_constant_row_is_rejected(self, capsys, caplog, tmp_path: Path) -> None:
        path = tmp_path / "constant.csv"
        path.write_text("1,2,3\n4,4,4\n")
        with caplog.at_level(logging.ERROR):
            code, out = run(capsys, "distmat", "--input", str(path))
        assert code == EXIT_DATA
        assert out == ""
        assert "row 2" in caplog.text


    def test_constant_row_reports_file_line(self, capsys, caplog, tmp_path: Path) -> None:
        path = tmp_path / "constant.csv"
        path.write_text("id,a,b,c\ns1,1,2,3\n\nflat,4,4,4\n")
        with caplog.at_level(logging.ERROR):
            code, _ = run(
                capsys, "distmat", "--input", str(path), "--header", "--id-column", "id"
            )
        assert code == EXIT_DATA
        assert "row 4 ('flat')" in caplog.text


class TestCenterCommand:
    def test_json_keys(self, capsys, data_csv: Path) -> None:
        code, out = run(capsys, "center", "--input", str(data_csv), "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert set(payload) == {"point", "eigenvalue", "objective", "degenerate"}
        assert payload["objective"] == pytest.approx(1.0 - payload["eigenvalue"], abs=1e-10)

    def test_solver_failure(self, capsys, monkeypatch, data_csv: Path) -> None:
        def fail(points):
            raise ConvergenceFailureError(100, 1.0, 1e-12)

        monkeypatch.setattr("corrsphere.cli.center_of_mass", fail)
        code, _ = run(capsys, "center", "--input", str(data_csv))
        assert code == EXIT_NUMERICAL


class TestClusterCommand:
    def test_json_keys(self, capsys, data_csv: Path) -> None:
        code, out = run(capsys, "cluster", "--input", str(data_csv), "--k", "2", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert set(payload) == {"centers", "assignments", "inertia", "iterations", "converged"}
        assert len(payload["assignments"]) == len(ROWS)
        assert set(payload["assignments"]) <= {0, 1}

    def test_csv_assignments(self, capsys, labeled_csv: Path) -> None:
        code, out = run(
            capsys,
            "cluster",
            "--input", str(labeled_csv),
            "--header",
            "--id-column", "id",
            "--k", "3",
            "--init", "random",
            "--seed", "5",
        )
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "id,cluster"
        assert lines[1].startswith("s1,")

    def test_too_many_clusters(self, capsys, data_csv: Path) -> None:
        code, _ = run(capsys, "cluster", "--input", str(data_csv), "--k", "7")
        assert code == EXIT_DATA

    def test_invalid_k(self, capsys, data_csv: Path) -> None:
        code, _ = run(capsys, "cluster", "--input", str(data_csv), "--k", "0")
        assert code == EXIT_USAGE

    def test_xlsx_workbook(self, capsys, data_csv: Path, tmp_path: Path) -> None:
        path = tmp_path / "clusters.xlsx"
        code, out = run(
            capsys,
            "cluster",
            "--input", str(data_csv),
            "--k", "2",
            "--format", "xlsx",
            "--output", str(path),
        )
        assert code == EXIT_OK
        assert out == ""
        sheets = pd.read_excel(path, sheet_name=None)
        assert list(sheets) == ["Assignments", "Centers", "Summary"]
        assert sheets["Summary"].loc[0, "k"] == 2


class TestUsage:
    def test_missing_input(self, capsys) -> None:
        assert run_cli(["center"]) == EXIT_USAGE

    def test_unknown_command(self, capsys) -> None:
        assert run_cli(["explode", "--input", "x.csv"]) == EXIT_USAGE

    def test_no_command(self, capsys) -> None:
        assert run_cli([]) == EXIT_USAGE

    def test_xlsx_needs_output(self, capsys, data_csv: Path) -> None:
        assert run_cli(["center", "--input", str(data_csv), "--format", "xlsx"]) == EXIT_USAGE

    def test_missing_file(self, capsys, tmp_path: Path) -> None:
        assert run_cli(["center", "--input", str(tmp_path / "absent.csv")]) == EXIT_USAGE

    def test_help(self, capsys) -> None:
        assert run_cli(["--help"]) == EXIT_OK
        assert "Exit codes" in capsys.readouterr().out

    def test_parser_defaults(self) -> None:
        args = build_parser().parse_args(["cluster", "--input", "x.csv", "--k", "2"])
        assert args.seed == 0
        assert args.init == "farthest"
        assert args.format == "csv"


class TestReproducibility:
    @pytest.mark.parametrize(
        "argv",
        [
            ["distmat"],
            ["distmat", "--format", "json"],
            ["center"],
            ["center", "--format", "json"],
            ["cluster", "--k", "3", "--init", "random", "--seed", "42"],
            ["cluster", "--k", "2", "--init", "random", "--seed", "7", "--format", "json"],
            ["cluster", "--k", "2", "--format", "json"],
        ],
    )
    def test_identical_across_runs(self, capsys, data_csv: Path, argv: list[str]) -> None:
        command = [*argv, "--input", str(data_csv)]
        first_code, first = run(capsys, *command)
        second_code, second = run(capsys, *command)
        assert first_code == second_code == EXIT_OK
        assert first
        assert first == second
