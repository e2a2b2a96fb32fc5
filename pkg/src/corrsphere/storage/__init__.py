"""Input parsing and result export."""

from .csv_handler import (
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
from .excel_handler import ExcelExporter, StorageError, TableExporter

__all__ = [
    "CsvOptions",
    "ExcelExporter",
    "StorageError",
    "TableExporter",
    "assignments_frame",
    "barycenter_frame",
    "centers_frame",
    "distance_frame",
    "parse_csv",
    "points_frame",
    "write_csv",
    "write_json",
]
