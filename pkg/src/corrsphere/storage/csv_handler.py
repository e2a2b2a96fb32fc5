"""CSV ingestion and CSV/JSON serialization of results."""

import csv
import json
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any, TextIO

import numpy as np
import pandas as pd

from ..config import FLOAT_FORMAT
from ..errors import EmptyFileError, NonNumericFieldError, RaggedRowsError
from ..models import (
    Barycenter,
    ClusterModel,
    Dataset,
    DistanceMatrix,
    SamplePoint,
    StandardizedPoint,
    stack_points,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CsvOptions:
    """How to read a CSV source: rows are samples, columns are components."""

    delimiter: str = ","
    has_header: bool = False
    id_column: str | None = None
    transpose: bool = False

    def __post_init__(self) -> None:
        if len(self.delimiter) != 1:
            raise ValueError(f"delimiter must be a single character, got {self.delimiter!r}")
        if self.id_column is not None and not self.has_header:
            raise ValueError("an id column can only be named when the input has a header")


def _read_rows(stream: TextIO, delimiter: str) -> list[tuple[int, list[str]]]:
    reader = csv.reader(stream, delimiter=delimiter)
    rows = []
    for row in reader:
        if not any(field.strip() for field in row):
            continue
        rows.append((reader.line_num, row))
    return rows


def parse_csv(
    stream: TextIO, options: CsvOptions | None = None, source: str | None = None
) -> Dataset:
    """Parse a delimited text stream into a Dataset.

    Args:
        stream: Readable text stream
        options: Delimiter, header, id column and orientation
        source: Path or name recorded on the dataset

    Returns:
        Dataset with one SamplePoint per data row (per column when transposed)

    Raises:
        EmptyFileError: If there are no data rows
        RaggedRowsError: If a row has a different number of fields than the first
        NonNumericFieldError: If a component is not a finite number
    """
    options = options or CsvOptions()
    rows = _read_rows(stream, options.delimiter)
    if not rows:
        raise EmptyFileError(f"no rows in {source or 'input'}")

    header: list[str] | None = None
    if options.has_header:
        header = [name.strip() for name in rows[0][1]]
        rows = rows[1:]
        if not rows:
            raise EmptyFileError(f"no data rows after the header in {source or 'input'}")

    width = len(header) if header is not None else len(rows[0][1])
    for line, row in rows:
        if len(row) != width:
            raise RaggedRowsError(line, width, len(row))

    columns = header if header is not None else [f"c{i + 1}" for i in range(width)]
    frame = pd.DataFrame([row for _, row in rows], columns=columns, dtype=str)
    lines = [line for line, _ in rows]

    identifiers: tuple[str, ...] | None = None
    if options.id_column is not None:
        if options.id_column not in frame.columns:
            raise ValueError(f"id column {options.id_column!r} not found in header")
        identifiers = tuple(frame.pop(options.id_column).str.strip())

    numeric = frame.apply(lambda column: pd.to_numeric(column.str.strip(), errors="coerce"))
    values = numeric.to_numpy(dtype=np.float64)
    bad = np.argwhere(~np.isfinite(values))
    if bad.size:
        row, col = (int(i) for i in bad[0])
        raise NonNumericFieldError(lines[row], str(frame.columns[col]), frame.iat[row, col])

    names: tuple[str, ...] | None = tuple(frame.columns) if header is not None else None
    id_label = options.id_column
    row_lines: tuple[int, ...] | None = tuple(lines)
    if options.transpose:
        # columns become samples; an id column names the dimensions
        values = values.T
        identifiers, names, id_label, row_lines = names, identifiers, None, None

    logger.debug(f"Parsed {values.shape[0]} samples of dimension {values.shape[1]}")
    return Dataset(
        points=tuple(SamplePoint(row) for row in values),
        identifiers=identifiers,
        source=source,
        dimension_names=names,
        id_label=id_label,
        lines=row_lines,
    )


def points_frame(
    points: Sequence[SamplePoint | StandardizedPoint],
    identifiers: Sequence[str] | None = None,
    dimension_names: Sequence[str] | None = None,
    id_label: str | None = None,
) -> pd.DataFrame:
    """Tabulate points row-wise, indexed by identifiers when present."""
    matrix = stack_points(points)
    columns = (
        list(dimension_names)
        if dimension_names is not None
        else [f"c{i + 1}" for i in range(matrix.shape[1])]
    )
    index = pd.Index(list(identifiers), name=id_label) if identifiers is not None else None
    return pd.DataFrame(matrix, index=index, columns=columns)


def distance_frame(matrix: DistanceMatrix) -> pd.DataFrame:
    """Tabulate a distance matrix with identifier labels when present."""
    labels = (
        list(matrix.identifiers)
        if matrix.identifiers is not None
        else [str(i + 1) for i in range(matrix.n)]
    )
    return pd.DataFrame(np.array(matrix.entries), index=labels, columns=labels)


def barycenter_frame(
    barycenter: Barycenter, dimension_names: Sequence[str] | None = None
) -> pd.DataFrame:
    """One-row table: barycenter components followed by eigenvalue, objective, degenerate."""
    values = barycenter.point.to_list()
    names = (
        list(dimension_names)
        if dimension_names is not None
        else [f"c{i + 1}" for i in range(len(values))]
    )
    record: dict[str, Any] = dict(zip(names, values, strict=True))
    record.update(
        eigenvalue=barycenter.eigenvalue,
        objective=barycenter.objective,
        degenerate=barycenter.degenerate_flag,
    )
    return pd.DataFrame([record])


def assignments_frame(
    model: ClusterModel, identifiers: Sequence[str] | None = None
) -> pd.DataFrame:
    """Table of (id, cluster) pairs; rows are numbered from 1 without identifiers."""
    labels = model.assignments.tolist()
    ids = list(identifiers) if identifiers is not None else [i + 1 for i in range(len(labels))]
    return pd.DataFrame({"id": ids, "cluster": labels})


def centers_frame(
    model: ClusterModel, dimension_names: Sequence[str] | None = None
) -> pd.DataFrame:
    """Table of cluster centers with their eigenvalue, objective and degeneracy flag."""
    frames = [barycenter_frame(center, dimension_names) for center in model.centers]
    frame = pd.concat(frames, ignore_index=True)
    frame.insert(0, "cluster", range(model.k))
    frame.insert(1, "size", np.bincount(model.assignments, minlength=model.k))
    return frame


def write_csv(
    stream: TextIO, frame: pd.DataFrame, *, header: bool = True, index: bool = False
) -> None:
    """Write a table with 17 significant digits per float."""
    frame.to_csv(
        stream, header=header, index=index, float_format=FLOAT_FORMAT, lineterminator="\n"
    )


def write_json(stream: TextIO, payload: dict[str, Any]) -> None:
    """Write a JSON document; floats are emitted in shortest round-trip form."""
    json.dump(payload, stream, indent=2, allow_nan=False)
    stream.write("\n")
