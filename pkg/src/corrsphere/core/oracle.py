"""Brute-force barycenter search used to cross-check the eigenvector solution."""

import logging
import math
from collections.abc import Sequence

import numpy as np

from ..errors import DimensionMismatchError
from ..models import StandardizedPoint, stack_points

logger = logging.getLogger(__name__)

_ROWS_PER_CHUNK = 64


def grid_search_center(
    points: Sequence[StandardizedPoint], resolution_deg: float = 0.25
) -> tuple[np.ndarray, float]:
    """Minimize F over a polar/azimuth grid covering the whole sphere in R^3.

    Both members of every antipodal pair lie on the grid, so the result does not
    depend on the sign convention of the eigenvector solution.

    Args:
        points: Standardized points of dimension 3
        resolution_deg: Grid step for both angles, in degrees

    Returns:
        The best grid point (norm sqrt(3)) and its objective value

    Raises:
        DimensionMismatchError: If the points are not 3-dimensional
    """
    matrix = stack_points(points)
    count, dim = matrix.shape
    if dim != 3:
        raise DimensionMismatchError(f"grid search needs dimension 3, got {dim}")
    if resolution_deg <= 0:
        raise ValueError(f"resolution must be positive, got {resolution_deg}")

    polar = np.radians(np.arange(0.0, 180.0 + resolution_deg / 2, resolution_deg))
    azimuth = np.radians(np.arange(0.0, 360.0, resolution_deg))
    radius = math.sqrt(dim)
    best_value = math.inf
    best_point = np.zeros(dim)

    for start in range(0, polar.size, _ROWS_PER_CHUNK):
        theta = polar[start : start + _ROWS_PER_CHUNK, None]
        grid = radius * np.stack(
            [
                np.sin(theta) * np.cos(azimuth),
                np.sin(theta) * np.sin(azimuth),
                np.cos(theta) * np.ones_like(azimuth),
            ],
            axis=-1,
        ).reshape(-1, dim)
        projections = grid @ matrix.T
        values = 1.0 - np.sum(projections * projections, axis=1) / (count * dim * dim)
        index = int(np.argmin(values))
        if values[index] < best_value:
            best_value = float(values[index])
            best_point = grid[index]

    logger.debug(f"Grid search over {polar.size}x{azimuth.size} nodes: min F {best_value:.6g}")
    return best_point, best_value
