"""Excel export of result tables."""

import logging
from collections.abc import Mapping
from pathlib import Path
from typing import Protocol

import pandas as pd
from openpyxl.styles import Alignment, Font, PatternFill
from openpyxl.worksheet.worksheet import Worksheet

from ..errors import CorrSphereError

logger = logging.getLogger(__name__)

MAX_COLUMN_WIDTH = 50


class StorageError(CorrSphereError):
    """Raised when result tables cannot be written."""


class TableExporter(Protocol):
    """Protocol for exporters that persist named result tables."""

    def export(self, tables: Mapping[str, pd.DataFrame], index: bool = False) -> None:
        """Write every table."""
        ...


class ExcelExporter:
    """Writes result tables to an .xlsx workbook, one sheet per table."""

    def __init__(self, file_path: str | Path) -> None:
        """Initialize Excel exporter.

        Args:
            file_path: Path of the workbook to create or overwrite
        """
        self.file_path = Path(file_path)

    def export(self, tables: Mapping[str, pd.DataFrame], index: bool = False) -> None:
        """Write tables to the workbook with a styled header row.

        Args:
            tables: Sheet name to table mapping, written in order
            index: Whether to write each table's index as the first column

        Raises:
            StorageError: If the workbook cannot be written
        """
        if not tables:
            raise StorageError("no tables to export")
        try:
            with pd.ExcelWriter(self.file_path, engine="openpyxl") as writer:
                for sheet_name, frame in tables.items():
                    frame.to_excel(writer, index=index, sheet_name=sheet_name)
                    self._format_sheet(writer.sheets[sheet_name])
        except (OSError, ValueError) as e:
            raise StorageError(f"Failed to write {self.file_path}: {e}") from e
        logger.info(f"Wrote {len(tables)} sheet(s) to {self.file_path}")

    @staticmethod
    def _format_sheet(worksheet: Worksheet) -> None:
        header_font = Font(bold=True, color="FFFFFF")
        header_fill = PatternFill(start_color="366092", end_color="366092", fill_type="solid")
        header_alignment = Alignment(horizontal="center", vertical="center")

        for cell in worksheet[1]:
            cell.font = header_font
            cell.fill = header_fill
            cell.alignment = header_alignment

        for column in worksheet.columns:
            column_letter = column[0].column_letter
            max_length = max(
                (len(str(cell.value)) for cell in column if cell.value is not None), default=0
            )
            worksheet.column_dimensions[column_letter].width = min(
                max_length + 2, MAX_COLUMN_WIDTH
            )
