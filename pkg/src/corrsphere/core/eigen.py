"""Symmetric eigendecomposition by cyclic plane rotations (Jacobi sweeps).

Each sweep visits every off-diagonal pair (p, q), p < q, in row order and
applies the rotation that annihilates entry (p, q). Iteration stops once the
off-diagonal Frobenius norm drops to ``tolerance * max(1, ||A||_F)``.
"""

import logging
import math

import numpy as np

from ..config import JACOBI_MAX_SWEEPS, JACOBI_TOLERANCE
from ..errors import ConvergenceFailureError, DimensionMismatchError, NonSymmetricMatrixError
from ..models import EigenDecomposition, ScatterMatrix
from .standardize import canonical_sign

logger = logging.getLogger(__name__)

SYMMETRY_RTOL = 1e-12


def _off_diagonal_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def _rotation(a: np.ndarray, p: int, q: int) -> tuple[float, float]:
    """Return (c, s) of the rotation that zeroes a[p, q]."""
    theta = (a[q, q] - a[p, p]) / (2.0 * a[p, q])
    if abs(theta) > 1e150:
        t = 0.5 / theta
    else:
        t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    return c, t * c


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int, c: float, s: float) -> None:
    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = a[q, p] = 0.0

    vec_p = v[:, p].copy()
    vec_q = v[:, q].copy()
    v[:, p] = c * vec_p - s * vec_q
    v[:, q] = s * vec_p + c * vec_q


def eigen_symmetric(
    m: ScatterMatrix | np.ndarray,
    tolerance: float = JACOBI_TOLERANCE,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> EigenDecomposition:
    """Diagonalize a real symmetric matrix.

    Args:
        m: Scatter matrix or square symmetric array
        tolerance: Relative off-diagonal tolerance
        max_sweeps: Sweep budget

    Returns:
        Eigenvalues sorted descending (stable among ties) with orthonormal
        eigenvectors as columns, each with a positive first significant component

    Raises:
        DimensionMismatchError: If the matrix is not square
        NonSymmetricMatrixError: If the matrix is not symmetric
        ConvergenceFailureError: If the sweep budget is exhausted
    """
    a = np.array(m.entries if isinstance(m, ScatterMatrix) else m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise DimensionMismatchError(f"expected a square matrix, got shape {a.shape}")

    scale = max(1.0, float(np.linalg.norm(a)))
    if not np.allclose(a, a.T, rtol=0.0, atol=SYMMETRY_RTOL * scale):
        raise NonSymmetricMatrixError("matrix is not symmetric")
    a = 0.5 * (a + a.T)

    n = a.shape[0]
    v = np.eye(n)
    threshold = tolerance * scale
    # entries below this level cannot keep the off-diagonal norm above threshold
    negligible = threshold / n
    off_norm = _off_diagonal_norm(a)
    sweeps = 0

    while off_norm > threshold:
        if sweeps >= max_sweeps:
            raise ConvergenceFailureError(sweeps, off_norm, threshold)
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > negligible:
                    c, s = _rotation(a, p, q)
                    _rotate(a, v, p, q, c, s)
        sweeps += 1
        off_norm = _off_diagonal_norm(a)

    logger.debug(f"Jacobi converged after {sweeps} sweeps (off-diagonal norm {off_norm:.3e})")

    order = np.argsort(-np.diag(a), kind="stable")
    eigenvalues = np.diag(a)[order]
    eigenvectors = np.column_stack([canonical_sign(v[:, k]) for k in order])
    return EigenDecomposition(eigenvalues, eigenvectors, sweeps)
