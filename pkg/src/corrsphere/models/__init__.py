"""Data models for correlation geometry."""

from .points import Dataset, SamplePoint, StandardizedPoint, stack_points
from .results import (
    Barycenter,
    ClusteringConfig,
    ClusterModel,
    DistanceMatrix,
    EigenDecomposition,
    InitMethod,
    ScatterMatrix,
)

__all__ = [
    "Barycenter",
    "ClusteringConfig",
    "ClusterModel",
    "Dataset",
    "DistanceMatrix",
    "EigenDecomposition",
    "InitMethod",
    "SamplePoint",
    "ScatterMatrix",
    "StandardizedPoint",
    "stack_points",
]
