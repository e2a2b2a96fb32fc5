"""Center of mass of standardized points under the correlation distance.

Minimizing F(g) = 1 - (1/(N*D^2)) * sum_j (g . x_j)^2 on the sphere g . g = D
leads, through a Lagrange multiplier, to the eigenproblem M g = lambda g with
the scatter matrix M. On the sphere F(g) = 1 - g^T M g / D = 1 - lambda, so the
minimizer is the eigenvector of the largest eigenvalue, scaled to norm sqrt(D).
"""

import logging
import math
from collections.abc import Sequence

import numpy as np

from ..config import DEGENERACY_RTOL, OBJECTIVE_CHECK_TOL
from ..errors import DimensionMismatchError
from ..models import Barycenter, ScatterMatrix, StandardizedPoint, stack_points
from .eigen import eigen_symmetric
from .standardize import canonical_sign

logger = logging.getLogger(__name__)


def objective_F(g: StandardizedPoint, points: Sequence[StandardizedPoint]) -> float:
    """Mean squared correlation distance from ``g`` to ``points``.

    Raises:
        EmptyInputError: If ``points`` is empty
        DimensionMismatchError: If dimensions differ
    """
    matrix = stack_points(points)
    count, dim = matrix.shape
    if g.dimension != dim:
        raise DimensionMismatchError(f"center has dimension {g.dimension}, points have {dim}")
    projections = matrix @ g.values
    return 1.0 - float(np.dot(projections, projections)) / (count * dim * dim)


def constraint_H(g: StandardizedPoint | np.ndarray) -> float:
    """Return 1 - (g . g) / D, which is zero exactly on the sphere of radius sqrt(D)."""
    values = g.values if isinstance(g, StandardizedPoint) else np.asarray(g, dtype=np.float64)
    return 1.0 - float(np.dot(values, values)) / values.size


def build_scatter(points: Sequence[StandardizedPoint]) -> ScatterMatrix:
    """Build m_ik = (1/(N*D)) * sum_j x_jk * x_ji.

    Raises:
        EmptyInputError: If ``points`` is empty
        DimensionMismatchError: If dimensions differ
    """
    matrix = stack_points(points)
    count, dim = matrix.shape
    scatter = (matrix.T @ matrix) / (count * dim)
    return ScatterMatrix(0.5 * (scatter + scatter.T), count)


def _sphere_point(vector: np.ndarray) -> StandardizedPoint:
    return StandardizedPoint(canonical_sign(math.sqrt(vector.size) * vector))


def center_of_mass(points: Sequence[StandardizedPoint]) -> Barycenter:
    """Compute the barycenter of ``points`` on the sphere of radius sqrt(D).

    When the top eigenvalue is repeated the minimizer is not unique; the first
    eigenvector of the tied block is returned and ``degenerate_flag`` is set.

    Raises:
        EmptyInputError: If ``points`` is empty
        DimensionMismatchError: If dimensions differ
        ConvergenceFailureError: If the eigensolver fails
    """
    scatter = build_scatter(points)
    decomposition = eigen_symmetric(scatter)
    eigenvalue, vector = decomposition.pair(0)
    point = _sphere_point(vector)
    degenerate = float(decomposition.eigenvalues[1]) >= eigenvalue * (1.0 - DEGENERACY_RTOL)
    objective = objective_F(point, points)

    if abs(objective - (1.0 - eigenvalue)) > OBJECTIVE_CHECK_TOL:
        logger.warning(
            f"Objective {objective!r} disagrees with 1 - eigenvalue {1.0 - eigenvalue!r}"
        )
    if degenerate:
        logger.warning(
            f"Top eigenvalue {eigenvalue:.6g} is repeated; barycenter of {len(points)} "
            "points is not unique"
        )
    return Barycenter(point, eigenvalue, objective, degenerate)


def stationary_points(points: Sequence[StandardizedPoint]) -> tuple[Barycenter, ...]:
    """Return every constrained stationary point of F, by increasing objective.

    Each eigenvector of the scatter matrix, scaled to norm sqrt(D), satisfies the
    Lagrange condition; the first entry is the barycenter. Eigenvectors of the
    zero eigenvalue along the constant direction are skipped since they are not
    standardized points.
    """
    scatter = build_scatter(points)
    decomposition = eigen_symmetric(scatter)
    eigenvalues = decomposition.eigenvalues
    scale = max(abs(float(eigenvalues[0])), 1.0)
    result = []
    for k in range(eigenvalues.size):
        eigenvalue, vector = decomposition.pair(k)
        if abs(float(np.sum(vector))) * math.sqrt(vector.size) > 1e-11 * vector.size:
            continue
        tied = np.abs(eigenvalues - eigenvalue) <= DEGENERACY_RTOL * scale
        point = _sphere_point(vector)
        result.append(
            Barycenter(point, eigenvalue, objective_F(point, points), int(np.sum(tied)) > 1)
        )
    return tuple(result)
