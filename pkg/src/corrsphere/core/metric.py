"""Pearson correlation and the correlation distance d(x, y) = sqrt(1 - corr(x, y)^2).

For standardized points corr(x, y) = (x . y) / D, clamped to [-1, 1]. The
distance is evaluated as sqrt((1 - c) * (1 + c)). Pairs whose vectors are equal
or exact negatives of each other get distance 0 without any roundoff.
"""

import logging
import math
from collections.abc import Sequence

import numpy as np

from ..config import EPS_DIAG
from ..errors import DegenerateInputError, DimensionMismatchError
from ..models import DistanceMatrix, SamplePoint, StandardizedPoint, stack_points
from .standardize import binary_rescale, canonical_sign, is_diagonal, standardize

logger = logging.getLogger(__name__)


def _check_dimensions(x: StandardizedPoint, y: StandardizedPoint) -> int:
    if x.dimension != y.dimension:
        raise DimensionMismatchError(
            f"cannot compare points of dimension {x.dimension} and {y.dimension}"
        )
    return x.dimension


def _clamped_cosine(dot: float | np.ndarray, dim: int) -> float | np.ndarray:
    return np.clip(dot / dim, -1.0, 1.0)


def _sine(cosine: float | np.ndarray) -> float | np.ndarray:
    return np.sqrt(np.maximum(0.0, (1.0 - cosine) * (1.0 + cosine)))


def _same_line(x: np.ndarray, y: np.ndarray) -> bool:
    return bool(np.array_equal(x, y) or np.array_equal(x, -y))


def _distance_values(x: np.ndarray, y: np.ndarray) -> float:
    if _same_line(x, y):
        return 0.0
    return float(_sine(_clamped_cosine(float(np.dot(x, y)), x.size)))


def correlation(x: StandardizedPoint, y: StandardizedPoint) -> float:
    """Return (x . y) / D clamped to [-1, 1].

    Raises:
        DimensionMismatchError: If x and y differ in dimension
    """
    dim = _check_dimensions(x, y)
    return float(_clamped_cosine(float(np.dot(x.values, y.values)), dim))


def distance(x: StandardizedPoint, y: StandardizedPoint) -> float:
    """Return the correlation distance sqrt(1 - corr(x, y)^2), in [0, 1].

    The distance is a pseudometric: it vanishes for affinely related samples,
    in particular d(x, -x) = 0.

    Raises:
        DimensionMismatchError: If x and y differ in dimension
    """
    _check_dimensions(x, y)
    return _distance_values(x.values, y.values)


def angle(x: StandardizedPoint, y: StandardizedPoint) -> float:
    """Return the angle between x and y in radians, in [0, pi].

    Equal to arccos(corr(x, y)); computed as atan2 of the sine and cosine parts
    so that sin(angle) reproduces :func:`distance`.
    """
    dim = _check_dimensions(x, y)
    cosine = float(_clamped_cosine(float(np.dot(x.values, y.values)), dim))
    return math.atan2(_distance_values(x.values, y.values), cosine)


def distances_from(center: StandardizedPoint, points: Sequence[StandardizedPoint]) -> np.ndarray:
    """Return the vector of distances from ``center`` to each of ``points``.

    Raises:
        EmptyInputError: If ``points`` is empty
        DimensionMismatchError: If dimensions differ
    """
    matrix = stack_points(points)
    dim = matrix.shape[1]
    if center.dimension != dim:
        raise DimensionMismatchError(f"center has dimension {center.dimension}, points have {dim}")
    x = center.values
    result = _sine(_clamped_cosine(matrix @ x, dim))
    same = np.all(matrix == x, axis=1) | np.all(matrix == -x, axis=1)
    result[same] = 0.0
    return result


def _line_classes(matrix: np.ndarray) -> np.ndarray:
    """Label rows so that rows equal up to sign share a label."""
    canonical = np.vstack([canonical_sign(row) for row in matrix])
    _, labels = np.unique(canonical, axis=0, return_inverse=True)
    return labels.reshape(-1)


def distance_matrix(points: Sequence[StandardizedPoint]) -> DistanceMatrix:
    """Compute all pairwise distances.

    Only the upper triangle is kept; the lower triangle is its mirror, so the
    result is exactly symmetric with a zero diagonal.

    Raises:
        EmptyInputError: If ``points`` is empty
        DimensionMismatchError: If the points differ in dimension
    """
    matrix = stack_points(points)
    count, dim = matrix.shape
    sines = _sine(_clamped_cosine(matrix @ matrix.T, dim))
    labels = _line_classes(matrix)
    sines[labels[:, None] == labels[None, :]] = 0.0
    upper = np.triu(sines, 1)
    logger.debug(f"Computed {count}x{count} distance matrix")
    return DistanceMatrix(upper + upper.T)


def correlation_matrix(points: Sequence[StandardizedPoint]) -> np.ndarray:
    """Return the N x N matrix of pairwise correlations, symmetric with unit diagonal."""
    matrix = stack_points(points)
    dim = matrix.shape[1]
    upper = np.triu(np.clip(matrix @ matrix.T / dim, -1.0, 1.0), 1)
    result = upper + upper.T
    np.fill_diagonal(result, 1.0)
    return result


def sample_correlation(x: SamplePoint, y: SamplePoint, eps: float = EPS_DIAG) -> float:
    """Pearson correlation of two raw samples, clamped to [-1, 1].

    Raises:
        DimensionMismatchError: If x and y differ in dimension
        DegenerateInputError: If either sample is numerically constant
    """
    if x.dimension != y.dimension:
        raise DimensionMismatchError(
            f"cannot correlate samples of dimension {x.dimension} and {y.dimension}"
        )
    for point in (x, y):
        if is_diagonal(point, eps):
            raise DegenerateInputError("correlation is undefined for a constant vector")
    cx, _ = binary_rescale(x.values)
    cy, _ = binary_rescale(y.values)
    cx = cx - np.mean(cx)
    cy = cy - np.mean(cy)
    value = float(np.dot(cx, cy)) / math.sqrt(float(np.dot(cx, cx)) * float(np.dot(cy, cy)))
    # clamp r in [-1, +1] against floating-point error
    return min(1.0, max(-1.0, value))


def sample_distance(x: SamplePoint, y: SamplePoint, eps: float = EPS_DIAG) -> float:
    """Correlation distance between two raw samples."""
    return distance(standardize(x, eps), standardize(y, eps))
