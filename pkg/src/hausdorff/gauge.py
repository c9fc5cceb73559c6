"""Gamma function, the unit-ball volume constant, and covering gauges.

A gauge assigns a cost in [0, inf] to each covering element. Three variants
are supported:

``standard``
    ``alpha(m) / 2**m * diam(S)**m`` for every S, the empty set included, with
    the value of ``0**0`` taken from the policy.
``modified``
    0 on the empty set; on singletons 1 at ``m = 0`` and 0 for ``m > 0``;
    the standard formula on sets of two or more points.
``raw``
    bare ``diam(S)**m`` without the normalizing constant; only for ``m > 0``.
"""
from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

from .errors import OutOfRange, PolicyMismatch
from .metric import FiniteMetricSpace, PointSet, diameter

# Lanczos approximation, g = 7, 9 terms.
_LANCZOS_G = 7.0
_LANCZOS_P = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)

GAMMA_RANGE = (0.25, 50.0)
ALPHA_RANGE = (0.0, 96.0)

# value used for inf**0 (infinite diameters only arise under the weak bound)
INF_POW_ZERO = 1.0


def gamma(t: float) -> float:
    """Gamma function on [0.25, 50], relative error below 1e-12."""
    t = float(t)
    lo, hi = GAMMA_RANGE
    if not lo <= t <= hi:
        raise OutOfRange(f"gamma argument {t} outside [{lo}, {hi}]")
    if t == int(t):
        return float(math.factorial(int(t) - 1))
    x = t - 1.0
    acc = _LANCZOS_P[0]
    for i in range(1, len(_LANCZOS_P)):
        acc += _LANCZOS_P[i] / (x + i)
    base = x + _LANCZOS_G + 0.5
    return _SQRT_2PI * base ** (x + 0.5) * math.exp(-base) * acc


def alpha(m: float) -> float:
    """Volume of the unit ball in R^m, extended to real ``m``: Gamma(1/2)**m / Gamma(1 + m/2)."""
    m = float(m)
    lo, hi = ALPHA_RANGE
    if not lo <= m <= hi:
        raise OutOfRange(f"dimension {m} outside [{lo}, {hi}]")
    return gamma(0.5) ** m / gamma(1.0 + m / 2.0)


@functools.lru_cache(maxsize=256)
def normalizer(m: float) -> float:
    """``alpha(m) / 2**m``, the factor in front of ``diam**m``."""
    return alpha(m) / 2.0 ** m


class GaugeVariant(str, enum.Enum):
    STANDARD = "standard"
    MODIFIED = "modified"
    RAW = "raw"


@dataclass(frozen=True)
class GaugePolicy:
    variant: GaugeVariant = GaugeVariant.STANDARD
    zero_pow_zero: int = 1

    def __post_init__(self):
        object.__setattr__(self, "variant", GaugeVariant(self.variant))
        if self.zero_pow_zero not in (0, 1):
            raise PolicyMismatch(f"0**0 must be 0 or 1, got {self.zero_pow_zero!r}")
        object.__setattr__(self, "zero_pow_zero", int(self.zero_pow_zero))

    def describe(self) -> dict:
        d = {"variant": self.variant.value}
        if self.variant is GaugeVariant.STANDARD:
            d["zero_pow_zero"] = self.zero_pow_zero
        return d


def _power(diam: float, m: float, zero_pow_zero: int) -> float:
    if m == 0:
        if diam == 0:
            return float(zero_pow_zero)
        if math.isinf(diam):
            return INF_POW_ZERO
        return 1.0
    return diam ** m


def gauge_value(size: int, diam: float, m: float, policy: GaugePolicy) -> float:
    """Gauge cost of a set known only by its cardinality and diameter."""
    if m < 0:
        raise OutOfRange(f"dimension must be nonnegative, got {m}")
    variant = policy.variant
    if variant is GaugeVariant.RAW:
        if m == 0:
            raise PolicyMismatch("the raw diameter-power gauge needs m > 0")
        return diam ** m
    if variant is GaugeVariant.MODIFIED:
        if size == 0:
            return 0.0
        if size == 1:
            return 1.0 if m == 0 else 0.0
        return normalizer(m) * _power(diam, m, 1)
    return normalizer(m) * _power(diam, m, policy.zero_pow_zero)


def zeta(space: FiniteMetricSpace, s: PointSet, m: float, policy: GaugePolicy) -> float:
    """Gauge cost of the covering element ``s`` at dimension ``m``."""
    return gauge_value(len(s), diameter(space, s), m, policy)
