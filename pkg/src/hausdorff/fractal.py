"""Finite experiments on the middle-thirds Cantor set.

Endpoints are held as integer numerators over ``3**k`` so construction is
exact; floats only appear when distances and gauges are evaluated.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .errors import DegenerateInput, OutOfRange
from .extreal import format_ext
from .gauge import GaugeVariant, normalizer
from .measure import FEDERER, CoveringConvention, H0Override, h_m, h_m_delta
from .metric import FiniteMetricSpace, build_space

MAX_LEVEL = 40
MAX_ENDPOINT_LEVEL = 6
CRITICAL_DIMENSION = math.log(2) / math.log(3)
DELTA_OFFSET = 1e-9


@dataclass(frozen=True)
class CantorLevel:
    """Depth-``k`` stage of the construction: ``2**k`` closed intervals of length ``3**-k``.

    Intervals are generated lazily in increasing order.
    """

    k: int

    def __post_init__(self):
        if not isinstance(self.k, (int, np.integer)) or not 0 <= self.k <= MAX_LEVEL:
            raise OutOfRange(f"level must be an integer in [0, {MAX_LEVEL}], got {self.k!r}")

    @property
    def denominator(self) -> int:
        return 3 ** self.k

    @property
    def length(self) -> Fraction:
        return Fraction(1, self.denominator)

    def __len__(self) -> int:
        return 2 ** self.k

    def left_numerators(self) -> Iterator[int]:
        """Left endpoints times ``3**k``: integers whose base-3 digits are all 0 or 2."""
        k = self.k
        weights = [2 * 3 ** (k - 1 - i) for i in range(k)]
        for b in range(2 ** k):
            yield sum(w for i, w in enumerate(weights) if b >> (k - 1 - i) & 1)

    def intervals(self) -> Iterator[tuple[Fraction, Fraction]]:
        den = self.denominator
        for left in self.left_numerators():
            yield Fraction(left, den), Fraction(left + 1, den)


def cantor_level(k: int) -> CantorLevel:
    return CantorLevel(k)


def natural_cover_sum(k: int, m: float) -> float:
    """``2**k * 3**(-k*m)``: the raw diameter-power sum of the level-k intervals."""
    if not 0 <= k <= MAX_LEVEL:
        raise OutOfRange(f"level must be in [0, {MAX_LEVEL}], got {k}")
    if m < 0:
        raise OutOfRange(f"dimension must be nonnegative, got {m}")
    return 2.0 ** k * 3.0 ** (-k * m)


def endpoint_numerators(level: CantorLevel) -> list[int]:
    pts = set()
    for left in level.left_numerators():
        pts.add(left)
        pts.add(left + 1)
    return sorted(pts)


def endpoints_space(level: CantorLevel) -> FiniteMetricSpace:
    """All interval endpoints of a level, with the distance of the real line."""
    if level.k > MAX_ENDPOINT_LEVEL:
        raise OutOfRange(f"endpoint spaces are limited to level {MAX_ENDPOINT_LEVEL}, got {level.k}")
    den = level.denominator
    nums = np.array(endpoint_numerators(level), dtype=np.int64)
    labels = [str(Fraction(int(p), den)) for p in nums]
    # integer differences, divided once: exact multiples of 3**-k up to one rounding
    dist = np.abs(nums[:, None] - nums[None, :]) / den
    return build_space(labels, dist)


@dataclass(frozen=True)
class SweepRow:
    k: int
    delta: float
    count: int
    raw_sum: float
    value: float
    solver_flag: str
    limit_value: float | None = None


@dataclass(frozen=True)
class ScaleSweep:
    m: float
    convention: CoveringConvention
    rows: tuple[SweepRow, ...]

    def scales(self) -> list[tuple[float, int]]:
        """``(3**-k, 2**k)`` for every row with ``k >= 1``."""
        return [(3.0 ** -r.k, r.count) for r in self.rows if r.k >= 1]


def _gauge_factor(m: float, conv: CoveringConvention) -> float:
    return 1.0 if conv.gauge.variant is GaugeVariant.RAW else normalizer(m)


def sweep(
    level_max: int,
    m: float,
    conv: CoveringConvention = FEDERER,
    solver: str = "auto",
    exact_max: int = MAX_ENDPOINT_LEVEL,
) -> ScaleSweep:
    """Approximating measures of the level-k endpoint sets for k = 0..level_max.

    Each row evaluates at ``delta = 3**-k * (1 + 1e-9)``, just wide enough to
    admit the two endpoints of one level-k interval. Rows beyond
    ``exact_max`` carry only the natural-cover upper bound (flag ``bound``).
    ``limit_value`` is the delta -> 0 limit for the solved rows.
    """
    if not 0 <= level_max <= MAX_LEVEL:
        raise OutOfRange(f"level_max must be in [0, {MAX_LEVEL}], got {level_max}")
    exact_max = min(exact_max, MAX_ENDPOINT_LEVEL)
    m = float(m)
    delta_conv = conv
    if conv.h0_override is H0Override.COUNTING and m == 0:
        delta_conv = replace(conv, h0_override=H0Override.NONE)
    rows = []
    for k in range(level_max + 1):
        delta = 3.0 ** -k * (1.0 + DELTA_OFFSET)
        raw = natural_cover_sum(k, m)
        if k <= exact_max:
            space = endpoints_space(CantorLevel(k))
            res = h_m_delta(space, space.all(), m, delta, delta_conv, solver)
            limit = h_m(space, space.all(), m, conv, solver).value
            flag = "exact" if res.optimal else "greedy"
            rows.append(SweepRow(k, delta, 2 ** k, raw, res.value, flag, limit))
        else:
            rows.append(SweepRow(k, delta, 2 ** k, raw, _gauge_factor(m, conv) * raw, "bound"))
    return ScaleSweep(m, conv, tuple(rows))


def dimension_estimate(scales: Sequence[tuple[float, int]]) -> float:
    """Least-squares slope of ``log(count)`` against ``log(1/delta)``."""
    deltas = np.array([float(d) for d, _ in scales])
    counts = np.array([float(c) for _, c in scales])
    if len(set(deltas.tolist())) < 2:
        raise DegenerateInput("need at least two distinct scales")
    if np.any((deltas <= 0) | (deltas >= 1)):
        raise OutOfRange("scales must lie in (0, 1)")
    if np.any(counts < 1):
        raise OutOfRange("counts must be at least 1")
    x = np.log(1.0 / deltas)
    y = np.log(counts)
    xc = x - x.mean()
    return float((xc * (y - y.mean())).sum() / (xc * xc).sum())


def _fixed(x: float) -> str:
    if x == 0 or 1e-3 <= abs(x) < 1e12:
        return f"{x:.12f}"
    return f"{x:.12e}"


CSV_COLUMNS = ("k", "delta", "count", "raw_sum", "normalized_value", "solver_flag", "limit_value")


def sweep_csv(result: ScaleSweep) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in result.rows:
        w.writerow([
            r.k,
            format(r.delta, ".15g"),
            r.count,
            _fixed(r.raw_sum),
            format_ext(r.value),
            r.solver_flag,
            "" if r.limit_value is None else format_ext(r.limit_value),
        ])
    return buf.getvalue()
