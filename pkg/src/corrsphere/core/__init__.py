"""Core numerical components: standardization, metric, barycenter and clustering."""

from .barycenter import build_scatter, center_of_mass, constraint_H, objective_F, stationary_points
from .clustering import assign, fit, inertia, init_centers, make_rng
from .eigen import eigen_symmetric
from .metric import (
    angle,
    correlation,
    correlation_matrix,
    distance,
    distance_matrix,
    distances_from,
    sample_correlation,
    sample_distance,
)
from .oracle import grid_search_center
from .standardize import (
    canonicalize,
    is_diagonal,
    mean,
    standardize,
    standardize_all,
    stddev,
)

__all__ = [
    "angle",
    "assign",
    "build_scatter",
    "canonicalize",
    "center_of_mass",
    "constraint_H",
    "correlation",
    "correlation_matrix",
    "distance",
    "distance_matrix",
    "distances_from",
    "eigen_symmetric",
    "fit",
    "grid_search_center",
    "inertia",
    "init_centers",
    "is_diagonal",
    "make_rng",
    "mean",
    "objective_F",
    "sample_correlation",
    "sample_distance",
    "standardize",
    "standardize_all",
    "stationary_points",
    "stddev",
]
