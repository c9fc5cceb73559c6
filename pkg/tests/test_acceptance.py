"""Numbered acceptance criteria.

Each test carries an ``acceptance`` marker; the terminal summary prints one
PASS or FAIL line per criterion.
"""
import itertools
import json
import math
import time

import pytest

from hausdorff import (
    CONTRA_EMPTY,
    FEDERER,
    HALMOS,
    PAPER_MODIFIED,
    CoveringConvention,
    GaugePolicy,
    GaugeVariant,
    alpha,
    contra_nonempty,
    gamma,
    h_m,
    h_m_delta,
)
from hausdorff.cli import main, oracle_check
from hausdorff.extreal import INF, ext_equal, ext_geq
from hausdorff.fractal import (
    CRITICAL_DIMENSION,
    MAX_LEVEL,
    cantor_level,
    dimension_estimate,
    endpoints_space,
    natural_cover_sum,
)
from hausdorff.gauge import normalizer
from hausdorff.instances import delta_grid, random_space, random_subset, rng_for
from hausdorff.measure import COMPARISON_ROWS, MODIFIED_FINITE, Cardinality, Elements, H0Override

from .conftest import all_subsets

# modified conventions with the bare diameter power as gauge
RAW_INFINITE = CoveringConvention(Cardinality.STRICTLY_INFINITE, Elements.EMPTY_ALLOWED, GaugePolicy(GaugeVariant.RAW))


@pytest.fixture(scope="module")
def counting_spaces():
    """100 seeded spaces with 1 to 12 points, each with its tested subsets."""
    rng = rng_for(20240101)
    out = []
    for _ in range(100):
        s = random_space(rng, int(rng.integers(1, 13)))
        if s.n <= 6:
            subsets = list(all_subsets(s))
        else:
            subsets = [random_subset(rng, s) for _ in range(50)]
        out.append((s, subsets))
    return out


@pytest.fixture(scope="module")
def grid():
    """50 seeded spaces with at most 10 points, three distinct scales each.

    Tested subsets: every subset when n <= 6, otherwise the whole space, the
    empty set and twelve random subsets.
    """
    rng = rng_for(777)
    out = []
    for _ in range(50):
        s = random_space(rng, int(rng.integers(1, 11)))
        if s.n <= 6:
            subsets = list(all_subsets(s))
        else:
            subsets = [s.all(), s.empty()] + [random_subset(rng, s) for _ in range(12)]
        deltas = sorted(set(delta_grid(s)))
        if len(deltas) < 3:
            # two points: least and median distance coincide
            deltas.insert(1, (deltas[0] + deltas[1]) / 2)
        out.append((s, subsets, deltas))
    return out


@pytest.mark.acceptance(1, "H^0 is the counting measure")
def test_counting_measure(counting_spaces):
    start = time.perf_counter()
    checked = 0
    for s, subsets in counting_spaces:
        for a in subsets:
            for conv in (FEDERER, PAPER_MODIFIED, HALMOS):
                res = h_m(s, a, 0, conv)
                assert res.value == len(a), (s.n, a, conv)
                assert res.verify()
                checked += 1
    elapsed = time.perf_counter() - start
    print(f"criterion 1: {checked} evaluations in {elapsed:.2f} s")
    assert elapsed < 60


@pytest.mark.acceptance(2, "nonempty-only infinite coverings give H^0(X) in {0, inf}")
def test_contradiction_nonempty(counting_spaces):
    for s, _ in counting_spaces:
        assert h_m(s, s.all(), 0, contra_nonempty(1)).value == INF
        assert h_m(s, s.all(), 0, contra_nonempty(0)).value == 0


@pytest.mark.acceptance(3, "empty-set coverings with 0^0 = 1 give H^0(empty) = inf")
def test_contradiction_empty(counting_spaces):
    for s, _ in counting_spaces:
        assert h_m(s, s.empty(), 0, CONTRA_EMPTY).value == INF
        assert h_m(s, s.empty(), 0, FEDERER).value == 0
        assert h_m(s, s.empty(), 0, PAPER_MODIFIED).value == 0


@pytest.mark.acceptance(4, "countably infinite and at most countable modified coverings agree")
def test_cardinality_equivalence(grid):
    for s, subsets, deltas in grid:
        for a, m, delta in itertools.product(subsets, (0.0, 0.5, 1.0, 2.0), deltas):
            inf_val = h_m_delta(s, a, m, delta, PAPER_MODIFIED).value
            fin_val = h_m_delta(s, a, m, delta, MODIFIED_FINITE).value
            assert inf_val == fin_val, (s.n, a, m, delta)


@pytest.mark.acceptance(5, "modified gauge equals normalizer times the bare diameter power")
def test_normalizer_equivalence(grid):
    for s, subsets, deltas in grid:
        for a, m, delta in itertools.product(subsets, (0.5, 1.0, 2.0), deltas):
            mod = h_m_delta(s, a, m, delta, PAPER_MODIFIED).value
            raw = h_m_delta(s, a, m, delta, RAW_INFINITE).value
            expected = normalizer(m) * raw
            assert abs(mod - expected) <= 1e-10 * abs(expected) or mod == expected == 0, (mod, expected)


@pytest.mark.acceptance(6, "DP, branch and bound and brute force agree")
def test_oracle_equivalence():
    start = time.perf_counter()
    report = oracle_check(5, 200, 7)
    elapsed = time.perf_counter() - start
    print(f"criterion 6: {report['comparisons']} comparisons in {elapsed:.1f} s")
    assert report["mismatches"] == 0, report["mismatch_details"]
    assert report["oracle_skipped"] == 0
    assert elapsed < 120


@pytest.mark.acceptance(7, "approximating measures shrink as delta grows")
def test_delta_monotonicity(grid):
    for s, subsets, deltas in grid:
        for a, m in itertools.product(subsets, (0.0, 0.5, 1.0, 2.0)):
            for name, conv in COMPARISON_ROWS:
                if conv.h0_override is H0Override.COUNTING and m == 0:
                    continue
                values = [h_m_delta(s, a, m, d, conv).value for d in deltas]
                for lo, hi in itertools.combinations(range(len(deltas)), 2):
                    assert deltas[lo] < deltas[hi]
                    assert ext_geq(values[lo], values[hi]), (name, a, m, deltas[lo], deltas[hi])


@pytest.mark.acceptance(8, "gauge constants")
def test_gauge_constants():
    for m, exact in ((1, 2.0), (2, math.pi), (3, 4 * math.pi / 3)):
        assert abs(alpha(m) - exact) <= 1e-10 * exact
    assert abs(gamma(0.5) ** 2 - math.pi) <= 1e-12 * math.pi


@pytest.mark.acceptance(9, "Cantor critical sum and dimension estimate")
def test_cantor_critical():
    for k in range(MAX_LEVEL + 1):
        assert 1 - 1e-12 <= natural_cover_sum(k, math.log(2) / math.log(3)) <= 1 + 1e-12
    data = [(3.0 ** -k, len(cantor_level(k))) for k in range(1, 11)]
    assert abs(dimension_estimate(data) - math.log(2) / math.log(3)) < 1e-9
    assert CRITICAL_DIMENSION == math.log(2) / math.log(3)


@pytest.mark.acceptance(10, "Cantor endpoint counting and natural-cover bound")
def test_endpoint_counting():
    for k in range(4):
        s = endpoints_space(cantor_level(k))
        below_gap = s.min_distance / 2
        assert h_m_delta(s, s.all(), 0, below_gap, FEDERER).value == 2 ** (k + 1)
        res = h_m_delta(s, s.all(), 1, 3.0 ** -k * (1 + 1e-9), FEDERER)
        assert res.optimal
        assert res.value <= normalizer(1) * natural_cover_sum(k, 1)


@pytest.mark.acceptance(11, "12-point exact DP through the CLI within 10 s")
def test_cli_performance(tmp_path, capsys):
    rng = rng_for(11)
    path = tmp_path / "twelve.json"
    path.write_text(json.dumps({"points": rng.random((12, 2)).tolist()}))
    start = time.perf_counter()
    code = main(["measure", str(path), "--m", "0", "--delta", "10", "--solver", "dp"])
    elapsed = time.perf_counter() - start
    results = json.loads(capsys.readouterr().out)["results"]
    print(f"criterion 11: {elapsed:.3f} s")
    assert code == 0
    assert results["value"] == "1" and results["optimal"]
    assert elapsed < 10
    assert ext_equal(float(results["value"]), 1.0)
