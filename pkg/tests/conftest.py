"""Shared fixtures for the corrsphere test suite."""

from collections.abc import Callable

import numpy as np
import pytest

from corrsphere import SamplePoint, StandardizedPoint, standardize

PointFactory = Callable[[int], StandardizedPoint]


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def random_point(rng: np.random.Generator) -> PointFactory:
    """Factory drawing standardized points from a Gaussian sample."""

    def draw(dim: int) -> StandardizedPoint:
        return standardize(SamplePoint(rng.normal(size=dim)))

    return draw


@pytest.fixture
def worked_pair() -> tuple[StandardizedPoint, StandardizedPoint]:
    """standardize(1, 2, 3) and standardize(1, 3, 2): correlation 0.5."""
    return standardize(SamplePoint([1.0, 2.0, 3.0])), standardize(SamplePoint([1.0, 3.0, 2.0]))


@pytest.fixture
def orthogonal_pair() -> tuple[StandardizedPoint, StandardizedPoint]:
    return (
        StandardizedPoint([1.0, -1.0, 1.0, -1.0]),
        StandardizedPoint([1.0, 1.0, -1.0, -1.0]),
    )


@pytest.fixture
def sphere_probe(rng: np.random.Generator) -> Callable[[int], StandardizedPoint]:
    """Factory for uniformly distributed standardized points (centered sphere probes)."""

    def draw(dim: int) -> StandardizedPoint:
        vector = rng.normal(size=dim)
        vector -= vector.mean()
        return StandardizedPoint(np.sqrt(dim) * vector / np.linalg.norm(vector))

    return draw
