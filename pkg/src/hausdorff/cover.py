"""Weighted minimum set cover over families of admissible sets.

Four solvers share one instance type:

* :func:`solve_exact_dp` - subset dynamic programming, exact, up to 15 points.
* :func:`solve_branch_and_bound` - exact search with a greedy incumbent and a
  fractional lower bound; degrades to the incumbent on timeout.
* :func:`solve_greedy` - ratio greedy, an upper bound.
* :func:`oracle_brute_force` - plain enumeration of subfamilies, used as the
  independent reference in tests.

Covers are repetition-free: weights are nonnegative, so dropping a repeated
element never raises the cost.
"""
from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

import numpy as np

from . import kernels
from .errors import TooLarge
from .extreal import EXT_TOL, INF, ext, ext_sum
from .metric import PointSet

DP_MAX_POINTS = 15
BNB_MAX_POINTS = 25
ORACLE_FAMILY_CAP = 1 << 21
DEFAULT_TIMEOUT = 30.0


def default_timeout() -> float:
    return float(os.environ.get("HAUSDORFF_TIMEOUT_SECS", DEFAULT_TIMEOUT))


@dataclass(frozen=True)
class CoverInstance:
    target: PointSet
    candidates: tuple[PointSet, ...]
    weights: tuple[float, ...]

    def __post_init__(self):
        cands = tuple(self.candidates)
        weights = tuple(ext(w) for w in self.weights)
        if len(cands) != len(weights):
            raise ValueError(f"{len(cands)} candidates but {len(weights)} weights")
        for c in cands:
            if not len(c):
                raise ValueError("empty candidate")
            if not c.issubset(self.target):
                raise ValueError(f"candidate {c} is not contained in the target {self.target}")
        object.__setattr__(self, "candidates", cands)
        object.__setattr__(self, "weights", weights)

    @property
    def size(self) -> int:
        return len(self.target)

    def local_masks(self) -> list[int]:
        """Candidates as bitmasks over positions within the target."""
        pos = {p: i for i, p in enumerate(self.target.indices)}
        out = []
        for c in self.candidates:
            m = 0
            for p in c.indices:
                m |= 1 << pos[p]
            out.append(m)
        return out

    def feasible(self) -> bool:
        covered = set()
        for c in self.candidates:
            covered.update(c.indices)
        return covered >= set(self.target.indices)


@dataclass(frozen=True)
class CoverSolution:
    chosen: tuple[PointSet, ...]
    cost: float
    optimal: bool
    timed_out: bool = field(default=False)

    def verify(self, instance: CoverInstance, tol: float = EXT_TOL) -> bool:
        """Check that a finite-cost certificate covers the target and re-sums to ``cost``."""
        if self.cost == INF:
            return not self.chosen
        covered = set()
        total = 0.0
        weight = dict(zip(instance.candidates, instance.weights))
        for c in self.chosen:
            if c not in weight:
                return False
            covered.update(c.indices)
            total += weight[c]
        if not covered >= set(instance.target.indices):
            return False
        return abs(total - self.cost) <= tol * max(1.0, abs(self.cost))


def _solution(instance: CoverInstance, picked: Sequence[int], cost: float, optimal: bool, timed_out=False) -> CoverSolution:
    if cost == INF:
        return CoverSolution((), INF, optimal, timed_out)
    chosen = sorted((instance.candidates[j] for j in picked), key=lambda s: s.indices)
    return CoverSolution(tuple(chosen), cost, optimal, timed_out)


def solve_exact_dp(instance: CoverInstance, backend=None) -> CoverSolution:
    """Exact optimum by dynamic programming over subsets of the target."""
    k = instance.size
    if k > DP_MAX_POINTS:
        raise TooLarge(f"exact DP handles at most {DP_MAX_POINTS} points, got {k}")
    kern = backend or kernels
    cost, picked = kern.cover_dp(k, instance.local_masks(), list(instance.weights))
    return _solution(instance, picked, cost, True)


def _greedy(masks: Sequence[int], weights: Sequence[float], sizes, keys, full: int) -> tuple[float, list[int]]:
    uncovered = full
    picked: list[int] = []
    total = 0.0
    while uncovered:
        best = None
        best_key = None
        for j, m in enumerate(masks):
            new = (m & uncovered).bit_count()
            if not new:
                continue
            key = (weights[j] / new, -sizes[j], keys[j])
            if best_key is None or key < best_key:
                best, best_key = j, key
        if best is None:
            return INF, []
        picked.append(best)
        total += weights[best]
        uncovered &= ~masks[best]
    return total, picked


def solve_greedy(instance: CoverInstance) -> CoverSolution:
    """Repeatedly take the candidate with the least weight per newly covered point.

    Ties prefer the larger set, then the lexicographically smaller one.
    """
    masks = instance.local_masks()
    sizes = [len(c) for c in instance.candidates]
    keys = [c.indices for c in instance.candidates]
    cost, picked = _greedy(masks, instance.weights, sizes, keys, (1 << instance.size) - 1)
    return _solution(instance, picked, cost, False)


def solve_branch_and_bound(instance: CoverInstance, timeout: float | None = None) -> CoverSolution:
    """Exact depth-first branch and bound.

    Branches on the uncovered point with the fewest candidates, trying its
    candidates in decreasing coverage-per-cost order. The lower bound charges
    every uncovered point its cheapest share ``w(S) / |S & uncovered|``. On
    timeout the incumbent is returned with ``optimal=False``.
    """
    if timeout is None:
        timeout = default_timeout()
    k = instance.size
    full = (1 << k) - 1
    masks = instance.local_masks()
    weights = instance.weights
    sizes = [len(c) for c in instance.candidates]
    keys = [c.indices for c in instance.candidates]

    best_cost, best_pick = _greedy(masks, weights, sizes, keys, full)
    if best_cost == INF:
        return _solution(instance, [], INF, True)

    by_point: list[list[int]] = [[] for _ in range(k)]
    for j, m in enumerate(masks):
        for i in range(k):
            if m >> i & 1:
                by_point[i].append(j)

    deadline = time.monotonic() + timeout
    state = {"best": best_cost, "pick": list(best_pick), "nodes": 0, "timed_out": False}

    def lower_bound(uncovered: int) -> float:
        lb = 0.0
        u = uncovered
        while u:
            low = u & -u
            i = low.bit_length() - 1
            u ^= low
            share = INF
            for j in by_point[i]:
                s = weights[j] / (masks[j] & uncovered).bit_count()
                if s < share:
                    share = s
            lb += share
        return lb

    def search(uncovered: int, cost: float, picked: list[int]) -> None:
        if state["timed_out"]:
            return
        state["nodes"] += 1
        if state["nodes"] % 1024 == 1 and time.monotonic() >= deadline:
            state["timed_out"] = True
            return
        if not uncovered:
            if cost < state["best"]:
                state["best"] = cost
                state["pick"] = list(picked)
            return
        if cost + lower_bound(uncovered) >= state["best"]:
            return
        branch = None
        fewest = None
        u = uncovered
        while u:
            low = u & -u
            i = low.bit_length() - 1
            u ^= low
            if fewest is None or len(by_point[i]) < fewest:
                branch, fewest = i, len(by_point[i])
        order = sorted(
            by_point[branch],
            key=lambda j: (-((masks[j] & uncovered).bit_count() / weights[j]) if weights[j] > 0 else -math.inf, j),
        )
        for j in order:
            picked.append(j)
            search(uncovered & ~masks[j], cost + weights[j], picked)
            picked.pop()

    search(full, 0.0, [])
    return _solution(instance, state["pick"], state["best"], not state["timed_out"], state["timed_out"])


def oracle_family_count(n_candidates: int, n_points: int) -> int:
    """Number of subfamilies with at most ``n_points`` members."""
    return sum(comb(n_candidates, s) for s in range(min(n_points, n_candidates) + 1))


def oracle_brute_force(instance: CoverInstance, family_cap: int = ORACLE_FAMILY_CAP) -> CoverSolution:
    """Cheapest covering subfamily by exhaustive enumeration.

    Enumerates every subfamily of at most ``|target|`` candidates (an
    irredundant cover never has more members than points), so any instance
    with up to 20 candidates is enumerated in full.
    """
    k = instance.size
    c = len(instance.candidates)
    if oracle_family_count(c, k) > family_cap:
        raise TooLarge(f"{oracle_family_count(c, k)} subfamilies exceed the oracle cap of {family_cap}")
    if k == 0:
        return CoverSolution((), 0.0, True)
    full = (1 << k) - 1
    masks = np.array(instance.local_masks(), dtype=np.int64)
    weights = np.array(instance.weights, dtype=float)

    # one level per family size: last member index, union, cost, parent row
    last = np.array([-1])
    union = np.array([0], dtype=np.int64)
    cost = np.array([0.0])
    levels = []
    best = (INF, None, None)
    for _size in range(1, min(k, c) + 1):
        # each row is extended by every candidate after its last member
        counts = c - 1 - last
        total = int(counts.sum())
        if not total:
            break
        parent = np.repeat(np.arange(last.size), counts)
        start = np.cumsum(counts) - counts
        last = last[parent] + 1 + (np.arange(total) - start[parent])
        union = union[parent] | masks[last]
        cost = cost[parent] + weights[last]
        levels.append((last, parent))
        covering = np.flatnonzero(union == full)
        if covering.size:
            r = covering[np.argmin(cost[covering])]
            if cost[r] < best[0]:
                best = (float(cost[r]), len(levels) - 1, r)

    if best[0] == INF:
        return CoverSolution((), INF, True)
    picked = []
    level, r = best[1], best[2]
    while level >= 0:
        lst, par = levels[level]
        picked.append(int(lst[r]))
        r = par[r]
        level -= 1
    return _solution(instance, picked, ext_sum(instance.weights[j] for j in picked), True)


SOLVERS = {
    "dp": solve_exact_dp,
    "bnb": solve_branch_and_bound,
    "greedy": solve_greedy,
    "oracle": oracle_brute_force,
}


def solve(instance: CoverInstance, solver="auto") -> CoverSolution:
    """Dispatch to a solver by name; ``auto`` picks DP, then B&B, then greedy by size.

    ``solver`` may also be any callable taking a :class:`CoverInstance`.
    """
    if callable(solver):
        return solver(instance)
    if solver == "auto":
        if instance.size <= DP_MAX_POINTS:
            solver = "dp"
        elif instance.size <= BNB_MAX_POINTS:
            solver = "bnb"
        else:
            solver = "greedy"
    try:
        fn = SOLVERS[solver]
    except KeyError:
        raise ValueError(f"unknown solver {solver!r}; choose from auto, {', '.join(SOLVERS)}") from None
    return fn(instance)
