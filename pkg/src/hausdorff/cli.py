"""Command-line interface.

Space files are JSON in one of two forms::

    {"labels": ["a", "b"], "dist": [[0, 1], [1, 0]]}
    {"points": [[0, 0], [3, 4]], "metric": "euclidean", "labels": ["a", "b"]}

``labels`` is optional in the point form. Every command prints a JSON report
to stdout. Exit codes: 0 success, 1 usage or I/O error, 2 metric violation,
3 solver timeout, 4 oracle mismatch.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import __version__
from .cover import CoverSolution, oracle_brute_force
from .errors import DegenerateInput, HausdorffError, MetricViolation
from .extreal import ext_equal, format_ext
from .fractal import CRITICAL_DIMENSION, MAX_LEVEL, dimension_estimate, sweep, sweep_csv
from .gauge import GaugePolicy, GaugeVariant
from .instances import delta_grid, random_space, rng_for
from .measure import (
    COMPARISON_ROWS,
    PRESETS,
    Cardinality,
    CoveringConvention,
    Elements,
    H0Override,
    MeasureResult,
    compare_conventions,
    h_m,
    h_m_delta,
    limit_delta,
)
from .metric import DiameterBound, FiniteMetricSpace, PointSet, build_space, from_points_euclidean

EXIT_OK, EXIT_USAGE, EXIT_METRIC, EXIT_TIMEOUT, EXIT_MISMATCH = 0, 1, 2, 3, 4
ORACLE_MAX_N = 6
ORACLE_M_VALUES = (0.0, 0.5, 1.0, 2.0)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_space(path: str) -> tuple[FiniteMetricSpace, str]:
    """Read a space file; returns the space and the sha256 digest of the file."""
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    digest = "sha256:" + hashlib.sha256(raw).hexdigest()
    try:
        doc = json.loads(raw)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise UsageError("space file must hold a JSON object")
    if "dist" in doc:
        labels = doc.get("labels") or [str(i) for i in range(len(doc["dist"]))]
        return build_space(labels, doc["dist"]), digest
    if "points" in doc:
        metric = doc.get("metric", "euclidean")
        if metric != "euclidean":
            raise UsageError(f"unsupported metric {metric!r}")
        return from_points_euclidean(doc["points"], doc.get("labels")), digest
    raise UsageError('space file needs either "dist" or "points"')


def _subset(space: FiniteMetricSpace, text: str) -> PointSet:
    if text == "all":
        return space.all()
    if text == "empty":
        return space.empty()
    try:
        return space.subset(s.strip() for s in text.split(",") if s.strip())
    except KeyError as exc:
        raise UsageError(str(exc)) from exc


def _convention(args) -> CoveringConvention:
    base = PRESETS[args.convention]
    gauge = base.gauge
    if args.gauge is not None or args.zero_pow_zero is not None:
        gauge = GaugePolicy(
            GaugeVariant(args.gauge) if args.gauge else gauge.variant,
            args.zero_pow_zero if args.zero_pow_zero is not None else gauge.zero_pow_zero,
        )
    return CoveringConvention(
        Cardinality(args.cardinality) if args.cardinality else base.cardinality,
        Elements(args.elements) if args.elements else base.elements,
        gauge,
        DiameterBound(args.bound) if args.bound else base.bound,
        H0Override(args.h0_override) if args.h0_override else base.h0_override,
    )


def _delta(text: str) -> float | None:
    if text == "auto":
        return None
    try:
        v = float(text)
    except ValueError:
        raise UsageError(f"--delta must be a positive number, 'inf' or 'auto', got {text!r}") from None
    if not v > 0:
        raise UsageError(f"--delta must be positive, got {text!r}")
    return v


def describe_result(res: MeasureResult) -> dict:
    support = res.finite_support
    return {
        "value": format_ext(res.value),
        "m": format_ext(res.m),
        "delta": format_ext(res.delta),
        "optimal": support.optimal,
        "by_definition": res.by_definition,
        "certificate": {
            "finite_support": [list(s.labels) for s in support.chosen],
            "support_cost": format_ext(support.cost),
            "padding": {
                k: (format_ext(v) if k == "per_copy_cost" else v) for k, v in res.padding.describe().items()
            },
        },
    }


def _report(args, argv, digest, results) -> dict:
    return {
        "tool": "hausdorff",
        "version": __version__,
        "command": ["hausdorff", *argv],
        "input_digest": digest,
        "results": results,
    }


def cmd_validate(args, argv):
    try:
        space, digest = load_space(args.input)
    except MetricViolation as exc:
        raw = Path(args.input).read_bytes()
        digest = "sha256:" + hashlib.sha256(raw).hexdigest()
        results = {"valid": False, "violation": {"kind": exc.kind, "points": list(exc.labels), "message": str(exc)}}
        return _report(args, argv, digest, results), EXIT_METRIC
    return _report(args, argv, digest, {"valid": True, "n": space.n, "labels": list(space.labels)}), EXIT_OK


def cmd_measure(args, argv):
    space, digest = load_space(args.input)
    a = _subset(space, args.subset)
    conv = _convention(args)
    delta = _delta(args.delta)
    if delta is None:
        res = h_m(space, a, args.m, conv, args.solver)
    else:
        res = h_m_delta(space, a, args.m, delta, conv, args.solver)
    results = {
        "subset": list(a.labels),
        "convention": {"preset": args.convention, **conv.describe()},
        "solver": args.solver,
        "limit": delta is None,
        **describe_result(res),
    }
    return _report(args, argv, digest, results), EXIT_TIMEOUT if res.timed_out else EXIT_OK


def cmd_compare(args, argv):
    space, digest = load_space(args.input)
    a = _subset(space, args.subset)
    delta = _delta(args.delta)
    if delta is None:
        delta = limit_delta(space)
    table = compare_conventions(space, a, args.m, delta, args.solver)
    conventions = dict(COMPARISON_ROWS)
    rows = [
        {"convention": name, "descriptor": conventions[name].describe(), **describe_result(res)}
        for name, res in table.items()
    ]
    timed_out = any(r.timed_out for r in table.values())
    results = {"subset": list(a.labels), "m": format_ext(args.m), "delta": format_ext(delta), "table": rows}
    return _report(args, argv, digest, results), EXIT_TIMEOUT if timed_out else EXIT_OK


def cmd_fractal(args, argv):
    if not 0 <= args.levels <= MAX_LEVEL:
        raise UsageError(f"--levels must be in [0, {MAX_LEVEL}]")
    if args.m == "critical":
        m = CRITICAL_DIMENSION
    else:
        try:
            m = float(args.m)
        except ValueError:
            raise UsageError(f"--m must be a number or 'critical', got {args.m!r}") from None
    conv = _convention(args)
    result = sweep(args.levels, m, conv, args.solver)
    table = sweep_csv(result)
    if args.csv:
        Path(args.csv).write_text(table)
    results = {
        "levels": args.levels,
        "m": format_ext(m),
        "convention": {"preset": args.convention, **conv.describe()},
        "rows": [
            {
                "k": r.k,
                "delta": format(r.delta, ".15g"),
                "count": r.count,
                "raw_sum": format_ext(r.raw_sum),
                "normalized_value": format_ext(r.value),
                "solver_flag": r.solver_flag,
                "limit_value": None if r.limit_value is None else format_ext(r.limit_value),
            }
            for r in result.rows
        ],
    }
    try:
        results["dimension"] = format_ext(dimension_estimate(result.scales()))
    except DegenerateInput as exc:
        results["dimension"] = None
        results["dimension_note"] = f"DegenerateInput: {exc}"
    report = _report(args, argv, None, results)
    if args.format == "csv":
        return table, EXIT_OK
    return report, EXIT_OK


def oracle_check(n: int, trials: int, seed: int) -> dict:
    """Cross-check DP, branch and bound and brute force on seeded random spaces."""
    rng = rng_for(seed)
    cache: dict = {}
    stats = {"instances": 0, "comparisons": 0, "oracle_skipped": 0}
    mismatches = []

    def cached_oracle(instance):
        masks = instance.local_masks()
        key = (tuple(masks), instance.weights)
        if key not in cache:
            sol = oracle_brute_force(instance)
            chosen_masks = {masks[instance.candidates.index(c)] for c in sol.chosen}
            cache[key] = (sol.cost, chosen_masks)
        cost, chosen_masks = cache[key]
        chosen = tuple(c for c, mk in zip(instance.candidates, masks) if mk in chosen_masks)
        return CoverSolution(chosen, cost, True)

    for trial in range(trials):
        space = random_space(rng, n)
        for delta in delta_grid(space):
            for m in ORACLE_M_VALUES:
                for name, conv in COMPARISON_ROWS:
                    if conv.h0_override is H0Override.COUNTING and m == 0:
                        continue
                    stats["instances"] += 1
                    a = space.all()
                    dp = h_m_delta(space, a, m, delta, conv, "dp")
                    bnb = h_m_delta(space, a, m, delta, conv, "bnb")
                    try:
                        oracle = h_m_delta(space, a, m, delta, conv, cached_oracle)
                    except HausdorffError:
                        stats["oracle_skipped"] += 1
                        oracle = None
                    values = [dp.value, bnb.value] + ([oracle.value] if oracle else [])
                    stats["comparisons"] += 1
                    ok = all(ext_equal(v, values[0]) for v in values) and all(
                        r.verify() for r in (dp, bnb, oracle) if r is not None
                    )
                    if not ok:
                        mismatches.append({
                            "trial": trial,
                            "delta": format_ext(delta),
                            "m": format_ext(m),
                            "convention": name,
                            "dp": format_ext(dp.value),
                            "bnb": format_ext(bnb.value),
                            "oracle": format_ext(oracle.value) if oracle else None,
                        })
    return {"n": n, "trials": trials, "seed": seed, **stats, "mismatches": len(mismatches),
            "mismatch_details": mismatches[:20]}


def cmd_oracle_check(args, argv):
    if not 1 <= args.n <= ORACLE_MAX_N:
        raise UsageError(f"--n must be in [1, {ORACLE_MAX_N}] (oracle cap)")
    if args.trials < 0:
        raise UsageError("--trials must be nonnegative")
    results = oracle_check(args.n, args.trials, args.seed)
    code = EXIT_MISMATCH if results["mismatches"] else EXIT_OK
    return _report(args, argv, None, results), code


def _add_convention_flags(p):
    p.add_argument("--convention", choices=sorted(PRESETS), default="federer",
                   help="named convention; the flags below override single fields")
    p.add_argument("--cardinality", choices=[c.value for c in Cardinality])
    p.add_argument("--elements", choices=[e.value for e in Elements])
    p.add_argument("--gauge", choices=[g.value for g in GaugeVariant])
    p.add_argument("--zero-pow-zero", type=int, choices=(0, 1))
    p.add_argument("--bound", choices=[b.value for b in DiameterBound])
    p.add_argument("--h0-override", choices=[h.value for h in H0Override])


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hausdorff", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"hausdorff {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check a space file against the metric axioms")
    p.add_argument("input")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("measure", help="approximating or limit measure of a subset")
    p.add_argument("input")
    p.add_argument("--m", type=float, default=0.0)
    p.add_argument("--delta", default="auto", help="positive number, 'inf', or 'auto' for the delta -> 0 limit")
    p.add_argument("--subset", default="all", help="'all', 'empty', or comma-separated labels")
    p.add_argument("--solver", choices=["auto", "dp", "bnb", "greedy", "oracle"], default="auto")
    _add_convention_flags(p)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("compare", help="evaluate every named convention side by side")
    p.add_argument("input")
    p.add_argument("--m", type=float, default=0.0)
    p.add_argument("--delta", default="auto")
    p.add_argument("--subset", default="all")
    p.add_argument("--solver", choices=["auto", "dp", "bnb", "greedy", "oracle"], default="auto")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("fractal", help="scale sweep over Cantor set levels")
    p.add_argument("--levels", type=int, required=True)
    p.add_argument("--m", default="critical", help="number or 'critical' (log 2 / log 3)")
    p.add_argument("--solver", choices=["auto", "dp", "bnb", "greedy"], default="auto")
    p.add_argument("--csv", help="also write the sweep table to this file")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    _add_convention_flags(p)
    p.set_defaults(func=cmd_fractal)

    p = sub.add_parser("oracle-check", help="cross-validate the exact solvers on random spaces")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        out, code = args.func(args, argv)
    except MetricViolation as exc:
        print(f"hausdorff: metric violation: {exc}", file=sys.stderr)
        return EXIT_METRIC
    except (UsageError, HausdorffError, ValueError) as exc:
        print(f"hausdorff: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(out, str):
        sys.stdout.write(out)
    else:
        out["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
        sys.stdout.write(json.dumps(out, indent=2, sort_keys=True) + "\n")
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
