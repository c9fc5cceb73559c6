"""Hausdorff measures of subsets of finite metric spaces.

A :class:`CoveringConvention` fixes every choice that the classical
definition leaves implicit: whether coverings may be finite or must be
infinite countable families, whether the empty set may appear in them, the
gauge and its value of ``0**0``, and whether diameters are bounded strictly
by ``delta``.

Coverings are multisets. A strictly infinite covering of a finite space must
repeat some element infinitely often, so its cheapest form is a finite
repetition-free support plus one element repeated countably often (the
padding). The padding contributes 0 if its gauge cost is 0 and inf otherwise.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace

from .cover import CoverInstance, CoverSolution, solve
from .errors import OutOfRange, PolicyMismatch
from .extreal import INF, ext_sum, ext_equal, omega_sum
from .gauge import GaugePolicy, GaugeVariant, gauge_value, zeta
from .metric import (
    ENUMERATION_CAP,
    DiameterBound,
    FiniteMetricSpace,
    PointSet,
    admissible_components,
    admissible_sets,
    diameter,
    maximal_admissible_sets,
)


class Cardinality(str, enum.Enum):
    AT_MOST_COUNTABLE = "at-most-countable"
    STRICTLY_INFINITE = "strictly-infinite"


class Elements(str, enum.Enum):
    NONEMPTY_ONLY = "nonempty-only"
    EMPTY_ALLOWED = "empty-allowed"


class H0Override(str, enum.Enum):
    NONE = "none"
    COUNTING = "counting-by-definition"


@dataclass(frozen=True)
class CoveringConvention:
    cardinality: Cardinality = Cardinality.AT_MOST_COUNTABLE
    elements: Elements = Elements.NONEMPTY_ONLY
    gauge: GaugePolicy = field(default_factory=GaugePolicy)
    bound: DiameterBound = DiameterBound.STRICT
    h0_override: H0Override = H0Override.NONE

    def __post_init__(self):
        object.__setattr__(self, "cardinality", Cardinality(self.cardinality))
        object.__setattr__(self, "elements", Elements(self.elements))
        object.__setattr__(self, "bound", DiameterBound(self.bound))
        object.__setattr__(self, "h0_override", H0Override(self.h0_override))

    def describe(self) -> dict:
        return {
            "cardinality": self.cardinality.value,
            "elements": self.elements.value,
            "gauge": self.gauge.describe(),
            "bound": self.bound.value,
            "h0_override": self.h0_override.value,
        }


FEDERER = CoveringConvention()
PAPER_MODIFIED = CoveringConvention(
    Cardinality.STRICTLY_INFINITE, Elements.EMPTY_ALLOWED, GaugePolicy(GaugeVariant.MODIFIED)
)
CONTRA_EMPTY = CoveringConvention(Cardinality.STRICTLY_INFINITE, Elements.EMPTY_ALLOWED, GaugePolicy(zero_pow_zero=1))
HALMOS = CoveringConvention(h0_override=H0Override.COUNTING)


def contra_nonempty(zero_pow_zero: int = 1) -> CoveringConvention:
    """Infinite countable coverings by nonempty sets with a chosen ``0**0``."""
    return CoveringConvention(
        Cardinality.STRICTLY_INFINITE, Elements.NONEMPTY_ONLY, GaugePolicy(zero_pow_zero=zero_pow_zero)
    )


# at-most-countable twin of PAPER_MODIFIED
MODIFIED_FINITE = CoveringConvention(Cardinality.AT_MOST_COUNTABLE, Elements.EMPTY_ALLOWED, GaugePolicy(GaugeVariant.MODIFIED))

PRESETS: dict[str, CoveringConvention] = {
    "federer": FEDERER,
    "halmos": HALMOS,
    "paper-modified": PAPER_MODIFIED,
    "contra-nonempty": contra_nonempty(1),
    "contra-empty": CONTRA_EMPTY,
}

COMPARISON_ROWS: tuple[tuple[str, CoveringConvention], ...] = (
    ("federer", FEDERER),
    ("halmos", HALMOS),
    ("paper-modified", PAPER_MODIFIED),
    ("contra-nonempty(1)", contra_nonempty(1)),
    ("contra-nonempty(0)", contra_nonempty(0)),
    ("contra-empty", CONTRA_EMPTY),
)


@dataclass(frozen=True)
class Padding:
    """The element repeated countably often in a strictly infinite covering.

    ``kind`` is ``"none"`` (finite coverings, or no admissible element
    exists), ``"empty-set"`` or ``"set"``.
    """

    kind: str
    element: PointSet | None = None
    per_copy_cost: float = 0.0

    def describe(self) -> dict:
        d = {"kind": self.kind}
        if self.kind != "none":
            d["per_copy_cost"] = self.per_copy_cost
        if self.element is not None:
            d["element"] = list(self.element.labels)
        return d


NO_PADDING = Padding("none")


@dataclass(frozen=True)
class MeasureResult:
    value: float
    finite_support: CoverSolution
    padding: Padding
    convention: CoveringConvention
    delta: float
    m: float
    by_definition: bool = False

    @property
    def optimal(self) -> bool:
        return self.finite_support.optimal

    @property
    def timed_out(self) -> bool:
        return self.finite_support.timed_out

    def expected_value(self) -> float:
        """Value re-derived from the certificate fields."""
        strictly_infinite = self.convention.cardinality is Cardinality.STRICTLY_INFINITE
        if strictly_infinite and not self.by_definition and self.padding.kind == "none":
            return INF
        cost = ext_sum(self.finite_support_costs())
        if self.padding.kind == "none":
            return cost
        return cost + omega_sum(self.padding.per_copy_cost)

    def finite_support_costs(self) -> list[float]:
        if self.by_definition:
            return [1.0] * len(self.finite_support.chosen)
        if self.finite_support.cost == INF:
            return [INF]
        space = self.finite_support.chosen[0].space if self.finite_support.chosen else None
        return [zeta(space, s, self.m, self.convention.gauge) for s in self.finite_support.chosen]

    def verify(self) -> bool:
        """Certificate soundness: the value follows from support and padding."""
        if self.convention.cardinality is Cardinality.AT_MOST_COUNTABLE and self.padding.kind != "none":
            return False
        return ext_equal(self.value, self.expected_value())


def _check_args(m: float, delta: float, conv: CoveringConvention) -> None:
    if not m >= 0 or math.isinf(m):
        raise OutOfRange(f"dimension must be a finite nonnegative number, got {m}")
    if not delta > 0:
        raise OutOfRange(f"delta must be positive, got {delta}")
    if conv.h0_override is H0Override.COUNTING and m == 0:
        raise PolicyMismatch("H^0 is the counting measure by definition under this convention; use h_m")
    if conv.gauge.variant is GaugeVariant.RAW and m == 0:
        raise PolicyMismatch("the raw diameter-power gauge needs m > 0")


def _diameters(space: FiniteMetricSpace, cands: list[PointSet]) -> list[float]:
    """Diameters of a family, reusing the diameter of each set minus its last point."""
    rows = space.dist.tolist()
    known: dict[tuple[int, ...], float] = {}
    out = []
    for s in cands:
        idx = s.indices
        if len(idx) < 2:
            d = 0.0
        else:
            *rest, last = idx
            head = tuple(rest)
            d = known.get(head)
            if d is None:
                d = diameter(space, PointSet(space, head))
            row = rows[last]
            d = max(d, max(row[j] for j in rest))
        known[idx] = d
        out.append(d)
    return out


def _component_instance(space, comp, m, delta, conv, cap) -> tuple[CoverInstance, bool]:
    if len(comp) <= cap:
        cands = admissible_sets(space, comp, delta, conv.bound, cap=cap)
        exact = True
    else:
        # heuristic family: maximal cliques plus singletons
        maximal = maximal_admissible_sets(space, comp, delta, conv.bound)
        singles = [PointSet(space, (i,)) for i in comp.indices]
        cands = list(dict.fromkeys(maximal + singles))
        exact = False
    diams = _diameters(space, cands)
    weights = [gauge_value(len(s), d, m, conv.gauge) for s, d in zip(cands, diams)]
    return CoverInstance(comp, tuple(cands), tuple(weights)), exact


def finite_cover(
    space: FiniteMetricSpace,
    a: PointSet,
    m: float,
    delta: float,
    conv: CoveringConvention = FEDERER,
    solver: str = "auto",
    cap: int = ENUMERATION_CAP,
) -> CoverSolution:
    """Cheapest finite repetition-free delta-covering of ``a`` by nonempty subsets of ``a``.

    The problem splits over connected components of the admissibility graph.
    """
    if not len(a):
        return CoverSolution((), 0.0, True)
    chosen: list[PointSet] = []
    costs: list[float] = []
    optimal = True
    timed_out = False
    for comp in admissible_components(space, a, delta, conv.bound):
        instance, exact = _component_instance(space, comp, m, delta, conv, cap)
        sol = solve(instance, solver if exact else "greedy")
        if sol.cost == INF:
            return CoverSolution((), INF, sol.optimal and exact, sol.timed_out)
        chosen.extend(sol.chosen)
        costs.append(sol.cost)
        optimal = optimal and sol.optimal and exact
        timed_out = timed_out or sol.timed_out
    chosen.sort(key=lambda s: s.indices)
    return CoverSolution(tuple(chosen), ext_sum(costs), optimal, timed_out)


def cheapest_padding(space: FiniteMetricSpace, a: PointSet, m: float, conv: CoveringConvention) -> Padding:
    """Cheapest element that may be repeated countably often.

    Every supported gauge is monotone under inclusion, so among nonempty
    admissible sets a singleton is always cheapest (a singleton has diameter
    0 and is admissible for every delta > 0). Ties favour the empty set.
    """
    options = []
    if conv.elements is Elements.EMPTY_ALLOWED:
        options.append(Padding("empty-set", None, gauge_value(0, 0.0, m, conv.gauge)))
    if space.n:
        point = a.indices[0] if len(a) else 0
        options.append(Padding("set", PointSet(space, (point,)), gauge_value(1, 0.0, m, conv.gauge)))
    if not options:
        return NO_PADDING
    return min(options, key=lambda p: p.per_copy_cost)


def h_m_delta(
    space: FiniteMetricSpace,
    a: PointSet,
    m: float,
    delta: float,
    conv: CoveringConvention = FEDERER,
    solver: str = "auto",
    cap: int = ENUMERATION_CAP,
) -> MeasureResult:
    """The size-``delta`` approximating measure of ``a`` under ``conv``."""
    m = float(m)
    delta = float(delta)
    _check_args(m, delta, conv)
    support = finite_cover(space, a, m, delta, conv, solver, cap)
    if conv.cardinality is Cardinality.AT_MOST_COUNTABLE:
        return MeasureResult(support.cost, support, NO_PADDING, conv, delta, m)
    padding = cheapest_padding(space, a, m, conv)
    if padding.kind == "none":
        return MeasureResult(INF, support, padding, conv, delta, m)
    value = support.cost + omega_sum(padding.per_copy_cost)
    return MeasureResult(value, support, padding, conv, delta, m)


def limit_delta(space: FiniteMetricSpace, bound=DiameterBound.STRICT) -> float:
    """A delta at which the approximating measures have already stabilized.

    At or below the least interpoint distance (strictly below it for the weak
    bound) only singletons are admissible.
    """
    d_min = space.min_distance
    if math.isinf(d_min):
        return 1.0
    return d_min if DiameterBound(bound) is DiameterBound.STRICT else d_min / 2.0


def h_m(
    space: FiniteMetricSpace,
    a: PointSet,
    m: float,
    conv: CoveringConvention = FEDERER,
    solver: str = "auto",
    cap: int = ENUMERATION_CAP,
) -> MeasureResult:
    """The ``m``-dimensional measure of ``a``: the delta -> 0 limit, exact on finite spaces."""
    delta = limit_delta(space, conv.bound)
    if conv.h0_override is H0Override.COUNTING and float(m) == 0:
        singles = tuple(PointSet(space, (i,)) for i in a.indices)
        support = CoverSolution(singles, float(len(a)), True)
        return MeasureResult(float(len(a)), support, NO_PADDING, conv, delta, 0.0, by_definition=True)
    return h_m_delta(space, a, m, delta, conv, solver, cap)


def compare_conventions(
    space: FiniteMetricSpace,
    a: PointSet,
    m: float,
    delta: float,
    solver: str = "auto",
) -> dict[str, MeasureResult]:
    """Evaluate every named convention on the same input, in a fixed row order.

    Under the counting-by-definition convention at ``m = 0`` the row holds
    the counting measure itself.
    """
    out = {}
    for name, conv in COMPARISON_ROWS:
        if conv.h0_override is H0Override.COUNTING and float(m) == 0:
            out[name] = replace(h_m(space, a, 0.0, conv, solver), delta=float(delta))
        else:
            out[name] = h_m_delta(space, a, m, delta, conv, solver)
    return out
