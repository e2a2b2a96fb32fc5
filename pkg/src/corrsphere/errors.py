"""Exception hierarchy for corrsphere.

``DataError`` subclasses describe bad input (exit code 2 on the command line),
``NumericalError`` subclasses describe solver failures (exit code 3).
"""


class CorrSphereError(Exception):
    """Base exception for corrsphere errors."""


class DataError(CorrSphereError):
    """Raised when input data cannot be processed."""


class NumericalError(CorrSphereError):
    """Raised when a numerical routine fails."""


class DegenerateInputError(DataError):
    """Raised when a point lies on (or numerically next to) the constant diagonal."""

    def __init__(self, message: str, row: int | None = None, label: str | None = None) -> None:
        self.row = row
        self.label = label
        if label is not None and row is not None:
            message = f"row {row} ({label!r}): {message}"
        elif label is not None:
            message = f"row {label!r}: {message}"
        elif row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)


class DimensionMismatchError(DataError):
    """Raised when points of different dimension are combined."""


class EmptyInputError(DataError):
    """Raised when an operation needs at least one point and got none."""


class NonFiniteValueError(DataError):
    """Raised when a point contains NaN or infinity."""


class NotStandardizedError(DataError):
    """Raised when values do not satisfy the standardized-point invariants."""


class NonSymmetricMatrixError(DataError):
    """Raised when a matrix handed to the symmetric eigensolver is not symmetric."""


class TooFewPointsError(DataError):
    """Raised when more clusters are requested than there are points."""


class RaggedRowsError(DataError):
    """Raised when CSV rows do not all have the same number of fields."""

    def __init__(self, row: int, expected: int, found: int) -> None:
        self.row = row
        self.expected = expected
        self.found = found
        super().__init__(f"row {row}: expected {expected} fields, found {found}")


class NonNumericFieldError(DataError):
    """Raised when a CSV field cannot be read as a finite number."""

    def __init__(self, row: int, column: str, value: str) -> None:
        self.row = row
        self.column = column
        self.value = value
        super().__init__(f"row {row}, column {column!r}: not a finite number: {value!r}")


class EmptyFileError(DataError):
    """Raised when a CSV source holds no data rows."""


class DuplicateIdentifierError(DataError):
    """Raised when row identifiers are not unique."""


class ConvergenceFailureError(NumericalError):
    """Raised when the eigensolver does not converge within its sweep budget."""

    def __init__(self, sweeps: int, off_norm: float, threshold: float) -> None:
        self.sweeps = sweeps
        self.off_norm = off_norm
        self.threshold = threshold
        super().__init__(
            f"off-diagonal norm {off_norm:.3e} above {threshold:.3e} after {sweeps} sweeps"
        )
