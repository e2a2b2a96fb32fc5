"""Lloyd-style k-means under the correlation distance.

The update step replaces each center by the barycenter of its cluster, so both
half-steps of an iteration can only lower the mean squared distance (inertia).
Random initialization draws from ``numpy.random.Generator(PCG64(seed))``; PCG64
advances a 128-bit linear congruential state and permutes its output, and its
stream for a given seed is the same on every platform.
"""

import logging
from collections.abc import Sequence

import numpy as np

from ..config import TIE_TOLERANCE
from ..errors import EmptyInputError, TooFewPointsError
from ..models import Barycenter, ClusteringConfig, ClusterModel, InitMethod, StandardizedPoint
from ..models import stack_points
from .barycenter import center_of_mass
from .metric import distances_from

logger = logging.getLogger(__name__)


def make_rng(seed: int) -> np.random.Generator:
    """Return the seeded generator used for random initialization."""
    return np.random.Generator(np.random.PCG64(seed))


def _first_min(values: np.ndarray) -> int:
    return int(np.argmax(values <= np.min(values) + TIE_TOLERANCE))


def _first_max(values: np.ndarray) -> int:
    return int(np.argmax(values >= np.max(values) - TIE_TOLERANCE))


def _check_k(points: Sequence[StandardizedPoint], k: int) -> None:
    stack_points(points)
    if k > len(points):
        raise TooFewPointsError(f"cannot form {k} clusters from {len(points)} points")


def _init_indices(points: Sequence[StandardizedPoint], cfg: ClusteringConfig) -> list[int]:
    count = len(points)
    if cfg.init is InitMethod.RANDOM:
        return [int(i) for i in make_rng(cfg.seed).choice(count, size=cfg.k, replace=False)]

    anchor = center_of_mass(points).point
    chosen = [_first_min(distances_from(anchor, points))]
    nearest = distances_from(points[chosen[0]], points)
    while len(chosen) < cfg.k:
        scores = nearest.copy()
        scores[chosen] = -np.inf
        index = _first_max(scores)
        chosen.append(index)
        nearest = np.minimum(nearest, distances_from(points[index], points))
    return chosen


def init_centers(
    points: Sequence[StandardizedPoint], cfg: ClusteringConfig
) -> tuple[StandardizedPoint, ...]:
    """Choose k input points as starting centers.

    Farthest-point initialization starts from the input point nearest to the
    global barycenter and repeatedly adds the point farthest from all chosen
    centers. Random initialization draws k distinct indices from the seeded
    generator. Both are deterministic given ``cfg`` and the input order.

    Raises:
        TooFewPointsError: If k exceeds the number of points
    """
    _check_k(points, cfg.k)
    return tuple(points[i] for i in _init_indices(points, cfg))


def _distance_table(
    points: Sequence[StandardizedPoint], centers: Sequence[StandardizedPoint]
) -> np.ndarray:
    if not centers:
        raise EmptyInputError("at least one center is required")
    return np.column_stack([distances_from(center, points) for center in centers])


def _nearest(table: np.ndarray) -> np.ndarray:
    closest = np.min(table, axis=1, keepdims=True)
    return np.argmax(table <= closest + TIE_TOLERANCE, axis=1)


def assign(
    points: Sequence[StandardizedPoint], centers: Sequence[StandardizedPoint]
) -> np.ndarray:
    """Label each point with its nearest center; ties go to the lowest index.

    Raises:
        EmptyInputError: If ``centers`` or ``points`` is empty
        DimensionMismatchError: If dimensions differ
    """
    return _nearest(_distance_table(points, centers))


def inertia(
    points: Sequence[StandardizedPoint],
    centers: Sequence[StandardizedPoint],
    labels: np.ndarray,
) -> float:
    """Return (1/N) * sum_j d(center[label_j], x_j)^2."""
    table = _distance_table(points, centers)
    own = table[np.arange(len(points)), labels]
    return float(np.mean(own * own))


def _repair_empty(labels: np.ndarray, own: np.ndarray, k: int) -> np.ndarray:
    """Move the worst-fitting point of a shared cluster into each empty cluster."""
    labels = labels.copy()
    own = own.copy()
    counts = np.bincount(labels, minlength=k)
    for cluster in range(k):
        if counts[cluster]:
            continue
        scores = np.where(counts[labels] > 1, own, -np.inf)
        index = _first_max(scores)
        logger.info(f"Cluster {cluster} is empty; seeding it with point {index}")
        counts[labels[index]] -= 1
        labels[index] = cluster
        counts[cluster] = 1
        own[index] = 0.0
    return labels


def fit(points: Sequence[StandardizedPoint], cfg: ClusteringConfig) -> ClusterModel:
    """Cluster standardized points with k-means under the correlation distance.

    Iterates assignment and barycenter updates until the labels stop changing,
    the inertia improves by less than ``cfg.tol``, or ``cfg.max_iters`` is reached.

    Args:
        points: Standardized points of one dimension
        cfg: Clustering parameters

    Returns:
        Fitted ClusterModel; ``converged`` is True when a stopping test fired

    Raises:
        TooFewPointsError: If k exceeds the number of points
        ConvergenceFailureError: Propagated from the barycenter eigensolver
    """
    points = tuple(points)
    _check_k(points, cfg.k)
    count = len(points)
    rows = np.arange(count)

    centers: list[StandardizedPoint] = list(init_centers(points, cfg))
    table = _distance_table(points, centers)
    labels = _nearest(table)
    own = table[rows, labels]
    current = float(np.mean(own * own))
    history = [current]
    barycenters: list[Barycenter] = []
    converged = False
    iterations = 0

    for iteration in range(1, cfg.max_iters + 1):
        iterations = iteration
        labels = _repair_empty(labels, table[rows, labels], cfg.k)
        barycenters = [
            center_of_mass([points[j] for j in np.flatnonzero(labels == cluster)])
            for cluster in range(cfg.k)
        ]
        centers = [center.point for center in barycenters]

        table = _distance_table(points, centers)
        new_labels = _nearest(table)
        own = table[rows, new_labels]
        updated = float(np.mean(own * own))
        history.append(updated)
        logger.debug(f"Iteration {iteration}: inertia {updated:.12g}")

        stable = np.array_equal(new_labels, labels)
        improvement = current - updated
        labels, current = new_labels, updated
        if stable or improvement < cfg.tol:
            converged = True
            break

    if converged:
        logger.info(f"k-means converged after {iterations} iterations, inertia {current:.6g}")
    else:
        logger.warning(f"k-means stopped at max_iters={cfg.max_iters}, inertia {current:.6g}")

    return ClusterModel(
        centers=tuple(barycenters),
        assignments=labels,
        inertia=current,
        iterations_run=iterations,
        converged=converged,
        inertia_history=tuple(history),
    )
