"""Finite metric spaces, point subsets, diameters and admissible covering sets."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import networkx as nx
import numpy as np

from . import kernels
from .errors import DimensionMismatch, DuplicatePoint, MetricViolation, OutOfRange, TooLarge

TRIANGLE_TOL = 1e-12
ENUMERATION_CAP = 20


class DiameterBound(str, enum.Enum):
    """Whether covering elements need ``diam S < delta`` or ``diam S <= delta``."""

    STRICT = "strict"
    WEAK = "weak"


@dataclass(frozen=True, eq=False)
class FiniteMetricSpace:
    """Labeled points with a validated, read-only distance matrix.

    Build instances with :func:`build_space` or :func:`from_points_euclidean`.
    Equality is identity.
    """

    labels: tuple[str, ...]
    dist: np.ndarray

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"FiniteMetricSpace(n={self.n}, labels={list(self.labels)!r})"

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown point label {label!r}") from None

    def subset(self, labels: Iterable[str]) -> PointSet:
        return PointSet(self, tuple(self.index(lb) for lb in labels))

    def all(self) -> PointSet:
        return PointSet(self, tuple(range(self.n)))

    def empty(self) -> PointSet:
        return PointSet(self, ())

    def from_mask(self, mask: int) -> PointSet:
        return PointSet(self, tuple(i for i in range(self.n) if mask >> i & 1))

    @property
    def min_distance(self) -> float:
        """Least distance between distinct points (inf for fewer than two points)."""
        if self.n < 2:
            return math.inf
        iu = np.triu_indices(self.n, k=1)
        return float(self.dist[iu].min())


@dataclass(frozen=True)
class PointSet:
    """A possibly empty subset of a space, stored as sorted distinct indices."""

    space: FiniteMetricSpace
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(set(int(i) for i in self.indices)))
        if idx and (idx[0] < 0 or idx[-1] >= self.space.n):
            raise IndexError(f"point index out of range for a space of {self.space.n} points")
        object.__setattr__(self, "indices", idx)

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __contains__(self, i) -> bool:
        return i in self.indices

    def __repr__(self) -> str:
        return "{" + ", ".join(self.labels) + "}"

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.space.labels[i] for i in self.indices)

    @property
    def mask(self) -> int:
        m = 0
        for i in self.indices:
            m |= 1 << i
        return m

    def issubset(self, other: PointSet) -> bool:
        return set(self.indices) <= set(other.indices)

    def union(self, other: PointSet) -> PointSet:
        return PointSet(self.space, self.indices + other.indices)


def build_space(labels: Sequence[str], dist) -> FiniteMetricSpace:
    """Validate a distance matrix and wrap it as a :class:`FiniteMetricSpace`.

    Raises :class:`MetricViolation` naming the offending points. The triangle
    inequality is checked with an absolute tolerance of 1e-12.
    """
    labels = tuple(str(lb) for lb in labels)
    if len(set(labels)) != len(labels):
        dup = sorted({lb for lb in labels if labels.count(lb) > 1})
        raise MetricViolation("labels", dup, "labels must be unique")
    d = np.array(dist, dtype=float)
    n = len(labels)
    if n == 0 and d.size == 0:
        d = np.zeros((0, 0))
    if d.ndim != 2 or d.shape != (n, n):
        raise MetricViolation("shape", (), f"expected a {n}x{n} matrix, got shape {d.shape}")
    if not np.all(np.isfinite(d)):
        i, j = np.argwhere(~np.isfinite(d))[0]
        raise MetricViolation("finite", (labels[i], labels[j]))
    if np.any(d < 0):
        i, j = np.argwhere(d < 0)[0]
        raise MetricViolation("negative", (labels[i], labels[j]), f"d = {d[i, j]}")
    diag = np.flatnonzero(np.diag(d) != 0)
    if diag.size:
        i = diag[0]
        raise MetricViolation("diagonal", (labels[i],), f"d = {d[i, i]}")
    asym = np.argwhere(d != d.T)
    if asym.size:
        i, j = asym[0]
        raise MetricViolation("symmetry", (labels[i], labels[j]), f"{d[i, j]} != {d[j, i]}")
    off = d + np.eye(n)
    zero = np.argwhere(np.triu(off == 0, k=1))
    if zero.size:
        i, j = zero[0]
        raise DuplicatePoint((labels[i], labels[j]), "distinct points at distance 0")
    for i in range(n if n >= 3 else 0):
        # excess[j, k] = d(i, k) - d(i, j) - d(j, k)
        excess = d[i, None, :] - d[i, :, None] - d
        bad = np.argwhere(excess > TRIANGLE_TOL)
        if bad.size:
            j, k = bad[0]
            raise MetricViolation(
                "triangle",
                (labels[i], labels[j], labels[k]),
                f"d({labels[i]},{labels[k]}) = {d[i, k]} > {d[i, j]} + {d[j, k]}",
            )
    d.setflags(write=False)
    return FiniteMetricSpace(labels, d)


def from_points_euclidean(coords, labels: Sequence[str] | None = None) -> FiniteMetricSpace:
    """Space of points in R^d with the Euclidean distance.

    Labels default to ``"0"``, ``"1"``, ...
    """
    rows = [np.atleast_1d(np.asarray(c, dtype=float)) for c in coords]
    if rows and len({r.shape for r in rows}) != 1:
        raise DimensionMismatch(f"points have differing dimensions: {sorted({r.size for r in rows})}")
    if labels is None:
        labels = [str(i) for i in range(len(rows))]
    if len(labels) != len(rows):
        raise DimensionMismatch(f"{len(labels)} labels for {len(rows)} points")
    if not rows:
        return build_space([], [])
    x = np.vstack(rows)
    d = np.sqrt(((x[:, None, :] - x[None, :, :]) ** 2).sum(axis=-1))
    zero = np.argwhere(np.triu(d + np.eye(len(rows)) == 0, k=1))
    if zero.size:
        i, j = zero[0]
        raise DuplicatePoint((labels[i], labels[j]), "duplicate coordinates")
    return build_space(labels, d)


def diameter(space: FiniteMetricSpace, s: PointSet) -> float:
    """Largest pairwise distance in ``s``; 0 for the empty set and singletons."""
    if len(s) < 2:
        return 0.0
    idx = np.asarray(s.indices)
    return float(space.dist[np.ix_(idx, idx)].max())


def within(d, delta: float, bound: DiameterBound):
    """Elementwise test ``d < delta`` (strict) or ``d <= delta`` (weak)."""
    return d < delta if DiameterBound(bound) is DiameterBound.STRICT else d <= delta


def _check_delta(delta: float) -> float:
    delta = float(delta)
    if not delta > 0:
        raise OutOfRange(f"delta must be positive, got {delta}")
    return delta


def admissibility_graph(space: FiniteMetricSpace, a: PointSet, delta: float, bound=DiameterBound.STRICT) -> nx.Graph:
    delta = _check_delta(delta)
    g = nx.Graph()
    g.add_nodes_from(a.indices)
    idx = list(a.indices)
    if len(idx) > 1:
        sub = space.dist[np.ix_(idx, idx)]
        ok = within(sub, delta, bound)
        for p, q in zip(*np.nonzero(np.triu(ok, k=1))):
            g.add_edge(idx[p], idx[q])
    return g


def admissible_sets(
    space: FiniteMetricSpace,
    a: PointSet,
    delta: float,
    bound=DiameterBound.STRICT,
    cap: int = ENUMERATION_CAP,
) -> list[PointSet]:
    """Every nonempty ``S`` within ``a`` whose diameter passes the delta bound.

    These are the cliques of the graph joining points of ``a`` closer than
    ``delta``; the result is sorted by size, then by indices.
    """
    delta = _check_delta(delta)
    if len(a) > cap:
        raise TooLarge(f"{len(a)} points exceed the enumeration cap of {cap}")
    idx = list(a.indices)
    k = len(idx)
    if k == 0:
        return []
    ok = within(space.dist[np.ix_(idx, idx)], delta, bound)
    adj = []
    for p in range(k):
        m = 0
        for q in range(k):
            if q != p and ok[p, q]:
                m |= 1 << q
        adj.append(m)
    sets = [PointSet(space, tuple(idx[q] for q in range(k) if mask >> q & 1)) for mask in kernels.clique_masks(adj)]
    sets.sort(key=lambda s: (len(s), s.indices))
    return sets


def maximal_admissible_sets(space: FiniteMetricSpace, a: PointSet, delta: float, bound=DiameterBound.STRICT) -> list[PointSet]:
    """Only the maximal admissible sets; the candidate family for heuristic solving."""
    g = admissibility_graph(space, a, delta, bound)
    sets = [PointSet(space, tuple(c)) for c in nx.find_cliques(g)]
    sets.sort(key=lambda s: (-len(s), s.indices))
    return sets


def admissible_components(space: FiniteMetricSpace, a: PointSet, delta: float, bound=DiameterBound.STRICT) -> list[PointSet]:
    """Connected components of the admissibility graph on ``a``.

    Every admissible set lies inside a single component, so covering problems
    split into independent per-component problems.
    """
    g = admissibility_graph(space, a, delta, bound)
    comps = [PointSet(space, tuple(c)) for c in nx.connected_components(g)]
    comps.sort(key=lambda s: s.indices)
    return comps
