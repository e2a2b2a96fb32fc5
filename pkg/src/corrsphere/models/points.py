"""Point and dataset models for correlation geometry."""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from ..errors import (
    DimensionMismatchError,
    DuplicateIdentifierError,
    EmptyInputError,
    NonFiniteValueError,
    NotStandardizedError,
)

STANDARDIZED_RTOL = 1e-10


def frozen_vector(values: ArrayLike) -> np.ndarray:
    """Copy values into a read-only finite float64 vector of length >= 2.

    Raises:
        DimensionMismatchError: If the values are not a vector of length >= 2
        NonFiniteValueError: If any component is NaN or infinite
    """
    vector = np.array(values, dtype=np.float64)
    if vector.ndim != 1:
        raise DimensionMismatchError(f"expected a vector, got shape {vector.shape}")
    if vector.size < 2:
        raise DimensionMismatchError(f"dimension must be at least 2, got {vector.size}")
    if not np.all(np.isfinite(vector)):
        raise NonFiniteValueError("point components must be finite")
    vector.setflags(write=False)
    return vector


@dataclass(frozen=True, eq=False)
class SamplePoint:
    """Raw sample vector in R^D, before standardization."""

    values: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", frozen_vector(self.values))

    @property
    def dimension(self) -> int:
        return int(self.values.size)

    def __len__(self) -> int:
        return self.dimension

    def __iter__(self) -> Iterator[float]:
        return iter(self.values.tolist())

    def to_list(self) -> list[float]:
        return self.values.tolist()


@dataclass(frozen=True, eq=False)
class StandardizedPoint:
    """Centered, reduced vector lying on the hypersphere of radius sqrt(D).

    Construction checks both invariants: the component sum is zero within
    1e-10*D and the sum of squares equals D within 1e-10*D.
    """

    values: np.ndarray

    def __post_init__(self) -> None:
        vector = frozen_vector(self.values)
        dim = vector.size
        total = float(np.sum(vector))
        squares = float(np.dot(vector, vector))
        if abs(total) > STANDARDIZED_RTOL * dim:
            raise NotStandardizedError(f"component sum {total:.3e} is not zero")
        if abs(squares - dim) > STANDARDIZED_RTOL * dim:
            raise NotStandardizedError(f"sum of squares {squares!r} differs from D={dim}")
        object.__setattr__(self, "values", vector)

    @property
    def dimension(self) -> int:
        return int(self.values.size)

    def __len__(self) -> int:
        return self.dimension

    def __iter__(self) -> Iterator[float]:
        return iter(self.values.tolist())

    def __neg__(self) -> "StandardizedPoint":
        return StandardizedPoint(-self.values)

    def to_list(self) -> list[float]:
        return self.values.tolist()


def stack_points(points: Sequence[SamplePoint | StandardizedPoint]) -> np.ndarray:
    """Stack points row-wise into an (N, D) array.

    Raises:
        EmptyInputError: If no points are given
        DimensionMismatchError: If the points do not share one dimension
    """
    if len(points) == 0:
        raise EmptyInputError("at least one point is required")
    dim = points[0].dimension
    for index, point in enumerate(points):
        if point.dimension != dim:
            raise DimensionMismatchError(
                f"point {index} has dimension {point.dimension}, expected {dim}"
            )
    return np.vstack([point.values for point in points])


@dataclass(frozen=True)
class Dataset:
    """Rectangular collection of sample points read from one source.

    ``lines`` holds the physical source line of each point when points are rows.
    """

    points: tuple[SamplePoint, ...]
    identifiers: tuple[str, ...] | None = None
    source: str | None = None
    dimension_names: tuple[str, ...] | None = None
    id_label: str | None = None
    lines: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        stack_points(self.points)
        if self.lines is not None:
            lines = tuple(int(line) for line in self.lines)
            if len(lines) != len(self.points):
                raise DimensionMismatchError(
                    f"{len(lines)} line numbers for {len(self.points)} points"
                )
            object.__setattr__(self, "lines", lines)
        if self.identifiers is not None:
            identifiers = tuple(str(name) for name in self.identifiers)
            if len(identifiers) != len(self.points):
                raise DimensionMismatchError(
                    f"{len(identifiers)} identifiers for {len(self.points)} points"
                )
            seen: set[str] = set()
            for name in identifiers:
                if name in seen:
                    raise DuplicateIdentifierError(f"duplicate row identifier {name!r}")
                seen.add(name)
            object.__setattr__(self, "identifiers", identifiers)
        if self.dimension_names is not None:
            names = tuple(str(name) for name in self.dimension_names)
            if len(names) != self.dimension:
                raise DimensionMismatchError(
                    f"{len(names)} column names for dimension {self.dimension}"
                )
            object.__setattr__(self, "dimension_names", names)

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def dimension(self) -> int:
        return self.points[0].dimension

    def line(self, index: int) -> int:
        """Source line of the point at ``index``, or its 1-based position without line numbers."""
        return index + 1 if self.lines is None else self.lines[index]

    def label(self, index: int) -> str | None:
        """Row identifier of the point at ``index``, if identifiers are present."""
        return None if self.identifiers is None else self.identifiers[index]

    def matrix(self) -> np.ndarray:
        """Return the samples as an (N, D) array."""
        return stack_points(self.points)
