"""Tests for CSV parsing and CSV/JSON serialization."""

import io
import json
import math

import numpy as np
import pytest

from corrsphere import (
    ClusteringConfig,
    Dataset,
    DistanceMatrix,
    SamplePoint,
    center_of_mass,
    distance_matrix,
    fit,
    standardize,
)
from corrsphere.errors import (
    DuplicateIdentifierError,
    EmptyFileError,
    NonNumericFieldError,
    RaggedRowsError,
)
from corrsphere.storage import (
    CsvOptions,
    assignments_frame,
    barycenter_frame,
    centers_frame,
    distance_frame,
    parse_csv,
    points_frame,
    write_csv,
    write_json,
)


def parse(text: str, **options) -> Dataset:
    return parse_csv(io.StringIO(text), CsvOptions(**options), source="test.csv")


class TestCsvOptions:
    def test_multi_character_delimiter(self) -> None:
        with pytest.raises(ValueError, match="single character"):
            CsvOptions(delimiter=";;")

    def test_id_column_needs_header(self) -> None:
        with pytest.raises(ValueError, match="header"):
            CsvOptions(id_column="id")


class TestParseCsv:
    def test_plain_rows(self) -> None:
        dataset = parse("1,2,3\n1,3,2\n")
        assert dataset.size == 2
        assert dataset.dimension == 3
        assert dataset.identifiers is None
        assert dataset.dimension_names is None
        assert dataset.source == "test.csv"
        assert dataset.lines == (1, 2)
        np.testing.assert_array_equal(dataset.matrix(), [[1.0, 2.0, 3.0], [1.0, 3.0, 2.0]])

    def test_header_and_id_column(self) -> None:
        dataset = parse("id,a,b,c\ns1,1,2,3\ns2,4,6,5\n", has_header=True, id_column="id")
        assert dataset.identifiers == ("s1", "s2")
        assert dataset.dimension_names == ("a", "b", "c")
        assert dataset.id_label == "id"
        assert dataset.label(0) == "s1"
        np.testing.assert_array_equal(dataset.points[1].values, [4.0, 6.0, 5.0])

    def test_whitespace_and_blank_lines(self) -> None:
        dataset = parse("1, 2 ,3\n\n  4,5,6\n")
        np.testing.assert_array_equal(dataset.matrix(), [[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]])

    def test_scientific_notation(self) -> None:
        dataset = parse("1e-3,-2.5E2,3\n")
        np.testing.assert_array_equal(dataset.points[0].values, [1e-3, -250.0, 3.0])

    def test_delimiter(self) -> None:
        dataset = parse("1;2;3\n3;2;1\n", delimiter=";")
        assert dataset.dimension == 3

    def test_transpose(self) -> None:
        dataset = parse("g1,g2\n1,4\n2,6\n3,5\n", has_header=True, transpose=True)
        assert dataset.identifiers == ("g1", "g2")
        assert dataset.dimension_names is None
        assert dataset.lines is None
        np.testing.assert_array_equal(dataset.matrix(), [[1.0, 2.0, 3.0], [4.0, 6.0, 5.0]])

    def test_transpose_with_id_column(self) -> None:
        dataset = parse(
            "gene,s1,s2\nA,1,4\nB,2,6\nC,3,5\n",
            has_header=True,
            id_column="gene",
            transpose=True,
        )
        assert dataset.identifiers == ("s1", "s2")
        assert dataset.dimension_names == ("A", "B", "C")
        assert dataset.id_label is None
        np.testing.assert_array_equal(dataset.matrix(), [[1.0, 2.0, 3.0], [4.0, 6.0, 5.0]])

    def test_lines_skip_header_and_blank_rows(self) -> None:
        dataset = parse("a,b\n1,2\n\n3,5\n", has_header=True)
        assert dataset.lines == (2, 4)
        assert dataset.line(1) == 4

    def test_ragged_rows(self) -> None:
        with pytest.raises(RaggedRowsError) as excinfo:
            parse("1,2,3\n1,2\n")
        assert excinfo.value.row == 2
        assert excinfo.value.expected == 3
        assert excinfo.value.found == 2

    def test_ragged_row_reports_physical_line(self) -> None:
        with pytest.raises(RaggedRowsError) as excinfo:
            parse("a,b,c\n1,2,3\n\n4,5,6,7\n", has_header=True)
        assert excinfo.value.row == 4

    def test_non_numeric_field(self) -> None:
        with pytest.raises(NonNumericFieldError) as excinfo:
            parse("a,b,c\n1,2,3\n4,x,6\n", has_header=True)
        assert excinfo.value.row == 3
        assert excinfo.value.column == "b"
        assert excinfo.value.value == "x"

    @pytest.mark.parametrize("token", ["nan", "inf", "-inf", ""])
    def test_non_finite_field(self, token: str) -> None:
        with pytest.raises(NonNumericFieldError):
            parse(f"1,{token},3\n")

    def test_empty_file(self) -> None:
        with pytest.raises(EmptyFileError):
            parse("")

    def test_header_only(self) -> None:
        with pytest.raises(EmptyFileError):
            parse("a,b,c\n", has_header=True)

    def test_duplicate_identifiers(self) -> None:
        with pytest.raises(DuplicateIdentifierError):
            parse("id,a,b\nx,1,2\nx,2,1\n", has_header=True, id_column="id")

    def test_missing_id_column(self) -> None:
        with pytest.raises(ValueError, match="not found"):
            parse("a,b\n1,2\n", has_header=True, id_column="id")


class TestFrames:
    def test_points_round_trip_is_exact(self, random_point) -> None:
        points = [random_point(6) for _ in range(20)]
        buffer = io.StringIO()
        write_csv(buffer, points_frame(points), header=False)
        dataset = parse_csv(io.StringIO(buffer.getvalue()))
        for original, parsed in zip(points, dataset.points, strict=True):
            np.testing.assert_array_equal(parsed.values, original.values)

    def test_points_frame_labels(self, random_point) -> None:
        frame = points_frame([random_point(3)], ["s1"], ["a", "b", "c"], id_label="id")
        assert list(frame.columns) == ["a", "b", "c"]
        assert frame.index.name == "id"
        assert list(frame.index) == ["s1"]

    def test_distance_frame(self, worked_pair) -> None:
        matrix = DistanceMatrix(distance_matrix(list(worked_pair)).entries, ("p", "q"))
        frame = distance_frame(matrix)
        assert list(frame.columns) == ["p", "q"]
        assert list(frame.index) == ["p", "q"]
        assert frame.loc["p", "q"] == pytest.approx(math.sqrt(0.75), abs=1e-12)
        assert frame.loc["q", "q"] == 0.0

    def test_barycenter_frame(self, worked_pair) -> None:
        frame = barycenter_frame(center_of_mass(list(worked_pair)))
        assert list(frame.columns) == ["c1", "c2", "c3", "eigenvalue", "objective", "degenerate"]
        assert len(frame) == 1

    def test_cluster_frames(self, random_point) -> None:
        points = [random_point(4) for _ in range(9)]
        model = fit(points, ClusteringConfig(k=3))
        assignments = assignments_frame(model)
        assert list(assignments.columns) == ["id", "cluster"]
        assert assignments["id"].tolist() == list(range(1, 10))
        centers = centers_frame(model, ["a", "b", "c", "d"])
        assert list(centers.columns[:2]) == ["cluster", "size"]
        assert centers["size"].sum() == 9

    def test_csv_uses_seventeen_digits(self) -> None:
        point = standardize(SamplePoint([1.0, 2.0, 4.0]))
        buffer = io.StringIO()
        write_csv(buffer, points_frame([point]), header=False)
        first = buffer.getvalue().splitlines()[0].split(",")[0]
        assert float(first) == point.values[0]


class TestWriteJson:
    def test_floats_round_trip(self, worked_pair) -> None:
        center = center_of_mass(list(worked_pair))
        buffer = io.StringIO()
        write_json(buffer, center.to_dict())
        payload = json.loads(buffer.getvalue())
        assert payload["point"] == center.point.to_list()
        assert payload["degenerate"] is False
        assert buffer.getvalue().endswith("\n")

    def test_rejects_nan(self) -> None:
        with pytest.raises(ValueError):
            write_json(io.StringIO(), {"value": float("nan")})
