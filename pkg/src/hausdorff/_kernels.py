"""Pure-Python hot kernels.

Reference implementation of the routines in ``_speedups.pyx``; both must
return identical results (same costs, same certificates, same ordering).
"""
from __future__ import annotations

import math
from typing import Sequence

BACKEND = "python"


def cover_dp(n: int, masks: Sequence[int], weights: Sequence[float]) -> tuple[float, list[int]]:
    """Minimum-weight set cover of the bit universe ``range(n)``.

    ``masks[j]`` is candidate j as a bitmask over the universe. Returns the
    optimal cost (inf if infeasible) and the indices of an optimal cover.
    ``dp[r]`` is the cheapest way to cover the still-uncovered set ``r``;
    each step covers the lowest uncovered bit with a candidate containing it.
    Ties go to the lowest candidate index.
    """
    full = (1 << n) - 1
    by_point: list[list[int]] = [[] for _ in range(n)]
    for j, m in enumerate(masks):
        for i in range(n):
            if m >> i & 1:
                by_point[i].append(j)

    dp = [math.inf] * (full + 1)
    choice = [-1] * (full + 1)
    dp[0] = 0.0
    for r in range(1, full + 1):
        i = (r & -r).bit_length() - 1
        best = math.inf
        bc = -1
        for j in by_point[i]:
            v = weights[j] + dp[r & ~masks[j]]
            if v < best:
                best = v
                bc = j
        dp[r] = best
        choice[r] = bc

    if dp[full] == math.inf:
        return math.inf, []
    chosen = []
    r = full
    while r:
        j = choice[r]
        chosen.append(j)
        r &= ~masks[j]
    return dp[full], chosen


def clique_masks(adj: Sequence[int]) -> list[int]:
    """All nonempty cliques of a graph given as adjacency bitmasks.

    Output is in lexicographic depth-first order: each clique is followed by
    its extensions by higher-numbered vertices, in increasing vertex order.
    """
    out: list[int] = []

    def extend(clique: int, cand: int) -> None:
        out.append(clique)
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            extend(clique | low, cand & adj[u])

    n = len(adj)
    for v in range(n):
        higher = ~((1 << (v + 1)) - 1)
        extend(1 << v, adj[v] & higher)
    return out
