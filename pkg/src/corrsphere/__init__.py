"""corrsphere - correlation distance, hypersphere barycenters and correlation k-means."""

__version__ = "1.0.0"
__author__ = "corrsphere developers"
__description__ = "Correlation distance, hypersphere barycenters and correlation-aware k-means"

from .core import (
    angle,
    assign,
    build_scatter,
    canonicalize,
    center_of_mass,
    correlation,
    distance,
    distance_matrix,
    eigen_symmetric,
    fit,
    init_centers,
    is_diagonal,
    mean,
    objective_F,
    standardize,
    stddev,
)
from .models import (
    Barycenter,
    ClusteringConfig,
    ClusterModel,
    Dataset,
    DistanceMatrix,
    EigenDecomposition,
    InitMethod,
    SamplePoint,
    ScatterMatrix,
    StandardizedPoint,
)
from .storage import CsvOptions, parse_csv

__all__ = [
    "Barycenter",
    "ClusteringConfig",
    "ClusterModel",
    "CsvOptions",
    "Dataset",
    "DistanceMatrix",
    "EigenDecomposition",
    "InitMethod",
    "SamplePoint",
    "ScatterMatrix",
    "StandardizedPoint",
    "angle",
    "assign",
    "build_scatter",
    "canonicalize",
    "center_of_mass",
    "correlation",
    "distance",
    "distance_matrix",
    "eigen_symmetric",
    "fit",
    "init_centers",
    "is_diagonal",
    "mean",
    "objective_F",
    "parse_csv",
    "standardize",
    "stddev",
]
