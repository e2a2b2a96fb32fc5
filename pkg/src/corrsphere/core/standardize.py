"""Centered-reduced transform of raw samples onto the hypersphere of radius sqrt(D)."""

import logging
import math
from collections.abc import Sequence

import numpy as np

from ..config import EPS_DIAG, SIGN_CUTOFF
from ..errors import DegenerateInputError, DimensionMismatchError
from ..models import SamplePoint, StandardizedPoint

logger = logging.getLogger(__name__)

AnyPoint = SamplePoint | StandardizedPoint


def binary_rescale(values: np.ndarray) -> tuple[np.ndarray, int]:
    """Split ``values`` into (scaled, exponent) with values == scaled * 2**exponent.

    The largest scaled magnitude lies in [0.5, 1). Scaling by a power of two is
    exact, so sums and norms of the scaled vector neither overflow nor lose bits.
    """
    peak = float(np.max(np.abs(values)))
    if peak == 0.0:
        return values, 0
    _, exponent = math.frexp(peak)
    return np.ldexp(values, -exponent), exponent


def mean(p: AnyPoint) -> float:
    """Return the arithmetic mean of the components of ``p``."""
    scaled, exponent = binary_rescale(p.values)
    return math.ldexp(float(np.mean(scaled)), exponent)


def stddev(p: AnyPoint) -> float:
    """Return the population (1/D) standard deviation of the components of ``p``.

    Constant vectors give 0; rejecting them is left to :func:`standardize`.
    """
    scaled, exponent = binary_rescale(p.values)
    centered = scaled - np.mean(scaled)
    return math.ldexp(float(np.sqrt(np.mean(centered * centered))), exponent)


def is_diagonal(p: AnyPoint, eps: float = EPS_DIAG) -> bool:
    """Check whether ``p`` is numerically a constant vector.

    Args:
        p: Point to test
        eps: Relative tolerance, compared against max(1, ||p||)

    Returns:
        True iff ||p - mean(p) * 1|| <= eps * max(1, ||p||)
    """
    if eps < 0:
        raise ValueError(f"eps must be non-negative, got {eps}")
    scaled, exponent = binary_rescale(p.values)
    deviation = float(np.linalg.norm(scaled - np.mean(scaled)))
    if eps == 0.0:
        return deviation == 0.0
    # compared after dividing both sides by 2**exponent
    unit = math.ldexp(1.0, -exponent) if exponent > -1000 else math.inf
    return deviation <= eps * max(unit, float(np.linalg.norm(scaled)))


def _standardized_values(p: AnyPoint, eps: float) -> np.ndarray:
    if is_diagonal(p, eps):
        raise DegenerateInputError("constant vector cannot be standardized")
    scaled, _ = binary_rescale(p.values)
    centered = scaled - np.mean(scaled)
    # second pass removes the residual mean left by cancellation
    centered = centered - np.mean(centered)
    return math.sqrt(p.dimension) * centered / np.linalg.norm(centered)


def _warn_two_dimensional() -> None:
    logger.warning(
        "standardizing 2-dimensional points: every result is +/-(1, -1), "
        "so all correlation distances are 0"
    )


def standardize(p: AnyPoint, eps: float = EPS_DIAG) -> StandardizedPoint:
    """Map ``p`` to (p - mean) / stddev, a point on the sphere of radius sqrt(D).

    Args:
        p: Raw sample point (a standardized point is accepted and left unchanged
            up to roundoff)
        eps: Diagonal rejection tolerance, see :func:`is_diagonal`

    Returns:
        The standardized point

    Raises:
        DegenerateInputError: If ``p`` is numerically constant
    """
    values = _standardized_values(p, eps)
    if p.dimension == 2:
        _warn_two_dimensional()
    return StandardizedPoint(values)


def standardize_all(
    points: Sequence[AnyPoint],
    eps: float = EPS_DIAG,
    identifiers: Sequence[str] | None = None,
    rows: Sequence[int] | None = None,
) -> tuple[StandardizedPoint, ...]:
    """Standardize a batch of points, naming the first offending row on failure.

    Args:
        points: Points of one shared dimension
        eps: Diagonal rejection tolerance
        identifiers: Optional row identifiers used in error messages
        rows: Row numbers to report (source lines); defaults to 1-based positions

    Returns:
        Standardized points in input order

    Raises:
        DegenerateInputError: With ``row`` and ``label`` set
        DimensionMismatchError: If dimensions differ
    """
    if not points:
        return ()
    dim = points[0].dimension
    result = []
    for index, point in enumerate(points):
        if point.dimension != dim:
            raise DimensionMismatchError(
                f"point {index} has dimension {point.dimension}, expected {dim}"
            )
        try:
            result.append(StandardizedPoint(_standardized_values(point, eps)))
        except DegenerateInputError as e:
            label = identifiers[index] if identifiers is not None else None
            raise DegenerateInputError(
                "constant vector cannot be standardized",
                row=index + 1 if rows is None else rows[index],
                label=label,
            ) from e
    if dim == 2:
        _warn_two_dimensional()
    logger.debug(f"Standardized {len(result)} points of dimension {dim}")
    return tuple(result)


def canonical_sign(values: np.ndarray, cutoff: float = SIGN_CUTOFF) -> np.ndarray:
    """Return ``values`` or its negation, whichever has a positive first significant component."""
    significant = np.flatnonzero(np.abs(values) > cutoff)
    if significant.size and values[significant[0]] < 0:
        return -values
    return values


def canonicalize(q: StandardizedPoint, cutoff: float = SIGN_CUTOFF) -> StandardizedPoint:
    """Pick the deterministic representative of the pair {q, -q}.

    The first component with absolute value above ``cutoff`` is made positive.
    """
    values = canonical_sign(q.values, cutoff)
    return q if values is q.values else StandardizedPoint(values)
