"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py --points 8 10 12 --repeat 3
"""
import argparse
import timeit

import numpy as np

from hausdorff import _kernels, kernels


def dp_workload(n, rng):
    """All nonempty subsets of an n-point universe with random weights."""
    masks = list(range(1, 1 << n))
    weights = rng.random(len(masks)).tolist()
    return n, masks, weights


def clique_workload(n, rng, density=0.6):
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, nargs="+", default=[8, 10, 12, 14])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    backends = [_kernels]
    if kernels.compiled_backend is not None:
        backends.append(kernels.compiled_backend)
    else:
        print("compiled kernels not built; timing the Python backend only")

    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':<8} {'n':>3} " + " ".join(f"{b.BACKEND + ' (s)':>14}" for b in backends) + f" {'speedup':>9}")
    for n in args.points:
        rows = {
            "dp": (dp_workload(n, rng), lambda b, w: b.cover_dp(*w)),
            "cliques": (clique_workload(n, rng), lambda b, w: b.clique_masks(w)),
        }
        for name, (work, call) in rows.items():
            results = {b.BACKEND: call(b, work) for b in backends}
            if len(set(map(repr, results.values()))) != 1:
                raise SystemExit(f"backends disagree on {name} n={n}")
            times = [best_of(lambda b=b: call(b, work), args.repeat) for b in backends]
            speedup = f"{times[0] / times[-1]:>8.1f}x" if len(times) > 1 else ""
            print(f"{name:<8} {n:>3} " + " ".join(f"{t:>14.5f}" for t in times) + f" {speedup}")


if __name__ == "__main__":
    main()
