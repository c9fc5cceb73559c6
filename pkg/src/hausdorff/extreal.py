"""Arithmetic on the extended half-line [0, inf].

Values are plain Python floats; ``math.inf`` is the infinite element. The
only operations that need care are countable sums of a repeated constant and
the text encoding used by reports.
"""
from __future__ import annotations

import math
from typing import Iterable

ExtReal = float

INF: ExtReal = math.inf

# finite parts are compared at this absolute/relative tolerance
EXT_TOL = 1e-12


def ext(value: float) -> ExtReal:
    """Coerce ``value`` to an extended nonnegative real, rejecting NaN and negatives."""
    v = float(value)
    if math.isnan(v) or v < 0:
        raise ValueError(f"not a value in [0, inf]: {value!r}")
    return v


def ext_sum(values: Iterable[float]) -> ExtReal:
    """Finite sum in [0, inf]; the empty sum is 0."""
    total = 0.0
    for v in values:
        total += v
        if total == INF:
            return INF
    return total


def omega_sum(c: float) -> ExtReal:
    """Sum of countably infinitely many copies of ``c``.

    0 if ``c`` is 0, otherwise inf.
    """
    c = ext(c)
    return 0.0 if c == 0 else INF


def ext_equal(a: float, b: float, tol: float = EXT_TOL) -> bool:
    if math.isinf(a) or math.isinf(b):
        return a == b
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def ext_geq(a: float, b: float, tol: float = EXT_TOL) -> bool:
    """``a >= b`` with finite parts compared at ``tol``."""
    if a == INF:
        return True
    if b == INF:
        return False
    return a >= b - tol * max(1.0, abs(a), abs(b))


def format_ext(value: float) -> str:
    """Encode for reports: ``"inf"`` or 15 significant digits."""
    if value == INF:
        return "inf"
    return format(ext(value), ".15g")


def parse_ext(text: str) -> ExtReal:
    if text.strip().lower() in ("inf", "+inf", "infinity"):
        return INF
    return ext(float(text))
