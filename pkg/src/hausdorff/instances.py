"""Seeded random test spaces.

Randomness comes from numpy's PCG64 bit generator through
``Generator.random``, whose output stream for a given seed is fixed across
platforms.
"""
from __future__ import annotations

import numpy as np

from .metric import FiniteMetricSpace, PointSet, from_points_euclidean


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_space(rng: np.random.Generator, n: int, dim: int = 2) -> FiniteMetricSpace:
    """``n`` uniform points in the unit cube, labeled ``p0``, ``p1``, ..."""
    pts = rng.random((n, dim))
    return from_points_euclidean(pts, [f"p{i}" for i in range(n)])


def random_subset(rng: np.random.Generator, space: FiniteMetricSpace) -> PointSet:
    bits = rng.random(space.n) < 0.5
    return PointSet(space, tuple(np.flatnonzero(bits).tolist()))


def delta_grid(space: FiniteMetricSpace) -> list[float]:
    """Three probe scales: the least distance, the median distance, and above the diameter."""
    if space.n < 2:
        return [0.5, 1.0, 2.0]
    d = space.dist[np.triu_indices(space.n, k=1)]
    return [float(d.min()), float(np.median(d)), float(d.max()) * 1.01]
