"""Result models: distance and scatter matrices, eigensystems, barycenters, clusterings."""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ..config import DEFAULT_MAX_ITERS, DEFAULT_SEED, DEFAULT_TOL
from .points import StandardizedPoint


def _frozen_array(values: np.ndarray, dtype: type = np.float64) -> np.ndarray:
    array = np.array(values, dtype=dtype)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Symmetric N x N matrix of pairwise correlation distances."""

    entries: np.ndarray
    identifiers: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _frozen_array(self.entries))

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    def to_dict(self) -> dict[str, list[str] | list[list[float]] | None]:
        """Convert to the JSON output schema."""
        return {
            "ids": None if self.identifiers is None else list(self.identifiers),
            "matrix": self.entries.tolist(),
        }


@dataclass(frozen=True, eq=False)
class ScatterMatrix:
    """The D x D matrix m_ik = (1/(N*D)) * sum_j x_jk * x_ji over standardized points."""

    entries: np.ndarray
    count: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _frozen_array(self.entries))

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries))


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Eigenvalues sorted descending; column k of ``eigenvectors`` pairs with eigenvalue k."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "eigenvalues", _frozen_array(self.eigenvalues))
        object.__setattr__(self, "eigenvectors", _frozen_array(self.eigenvectors))

    def pair(self, k: int) -> tuple[float, np.ndarray]:
        """Return the k-th (eigenvalue, unit eigenvector) pair."""
        return float(self.eigenvalues[k]), self.eigenvectors[:, k]

    def reconstruct(self) -> np.ndarray:
        """Return sum_k lambda_k v_k v_k^T."""
        return (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.T


@dataclass(frozen=True, eq=False)
class Barycenter:
    """Center of mass of a point set: point g, top eigenvalue and objective F(g)."""

    point: StandardizedPoint
    eigenvalue: float
    objective: float
    degenerate_flag: bool

    def to_dict(self) -> dict[str, list[float] | float | bool]:
        """Convert to the JSON output schema."""
        return {
            "point": self.point.to_list(),
            "eigenvalue": self.eigenvalue,
            "objective": self.objective,
            "degenerate": self.degenerate_flag,
        }


class InitMethod(Enum):
    """Center initialization strategies."""

    FARTHEST = "farthest"
    RANDOM = "random"


@dataclass(frozen=True)
class ClusteringConfig:
    """Parameters of a correlation k-means fit."""

    k: int
    max_iters: int = DEFAULT_MAX_ITERS
    tol: float = DEFAULT_TOL
    seed: int = DEFAULT_SEED
    init: InitMethod = InitMethod.FARTHEST

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be at least 1, got {self.max_iters}")
        if not self.tol >= 0:
            raise ValueError(f"tol must be non-negative, got {self.tol}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must fit in 64 unsigned bits, got {self.seed}")
        object.__setattr__(self, "init", InitMethod(self.init))


@dataclass(frozen=True, eq=False)
class ClusterModel:
    """Result of a fit: centers, labels and the objective trajectory."""

    centers: tuple[Barycenter, ...]
    assignments: np.ndarray
    inertia: float
    iterations_run: int
    converged: bool
    inertia_history: tuple[float, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "centers", tuple(self.centers))
        object.__setattr__(self, "assignments", _frozen_array(self.assignments, np.int64))
        object.__setattr__(self, "inertia_history", tuple(self.inertia_history))

    @property
    def k(self) -> int:
        return len(self.centers)

    @property
    def center_points(self) -> tuple[StandardizedPoint, ...]:
        return tuple(center.point for center in self.centers)

    def to_dict(self) -> dict[str, list[list[float]] | list[int] | float | int | bool]:
        """Convert to the JSON output schema."""
        return {
            "centers": [center.point.to_list() for center in self.centers],
            "assignments": self.assignments.tolist(),
            "inertia": self.inertia,
            "iterations": self.iterations_run,
            "converged": self.converged,
        }
