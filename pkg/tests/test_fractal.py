import math
from fractions import Fraction

import numpy as np
import pytest

from hausdorff import FEDERER, DegenerateInput, OutOfRange, PAPER_MODIFIED, h_m_delta
from hausdorff.fractal import (
    CRITICAL_DIMENSION,
    cantor_level,
    dimension_estimate,
    endpoint_numerators,
    endpoints_space,
    natural_cover_sum,
    sweep,
    sweep_csv,
)
from hausdorff.gauge import normalizer


class TestCantorLevel:
    def test_level0(self):
        assert list(cantor_level(0).intervals()) == [(0, 1)]

    def test_level1(self):
        assert list(cantor_level(1).intervals()) == [(0, Fraction(1, 3)), (Fraction(2, 3), 1)]

    def test_level2(self):
        ivs = list(cantor_level(2).intervals())
        assert len(ivs) == 4
        assert all(b - a == Fraction(1, 9) for a, b in ivs)

    @pytest.mark.parametrize("k", range(0, 8))
    def test_structure(self, k):
        ivs = list(cantor_level(k).intervals())
        assert len(ivs) == len(cantor_level(k)) == 2 ** k
        for (a, b), (c, _d) in zip(ivs, ivs[1:]):
            assert b < c
        # children are the outer thirds of the parent
        children = list(cantor_level(k + 1).intervals())
        for i, (a, b) in enumerate(ivs):
            third = (b - a) / 3
            assert children[2 * i] == (a, a + third)
            assert children[2 * i + 1] == (b - third, b)

    def test_deep_level_is_lazy(self):
        lvl = cantor_level(40)
        assert len(lvl) == 2 ** 40
        first = next(lvl.intervals())
        assert first == (0, Fraction(1, 3 ** 40))

    @pytest.mark.parametrize("k", [-1, 41])
    def test_range(self, k):
        with pytest.raises(OutOfRange):
            cantor_level(k)


class TestNaturalCoverSum:
    def test_count_at_m0(self):
        assert natural_cover_sum(2, 0) == 4

    @pytest.mark.parametrize("k", [0, 1, 5, 17, 40])
    def test_m1(self, k):
        assert natural_cover_sum(k, 1) == pytest.approx((2 / 3) ** k, rel=1e-13)

    @pytest.mark.parametrize("k", range(41))
    def test_critical(self, k):
        assert abs(natural_cover_sum(k, CRITICAL_DIMENSION) - 1) <= 1e-12

    @pytest.mark.parametrize("k", range(1, 12))
    def test_strictly_decreasing_in_m(self, k):
        ms = np.linspace(0, 2, 41)
        vals = [natural_cover_sum(k, m) for m in ms]
        assert all(a > b for a, b in zip(vals, vals[1:]))
        assert natural_cover_sum(k, CRITICAL_DIMENSION - 0.01) > 1 > natural_cover_sum(k, CRITICAL_DIMENSION + 0.01)


class TestEndpointSpace:
    @pytest.mark.parametrize("k, n", [(0, 2), (1, 4), (2, 8), (6, 128)])
    def test_sizes(self, k, n):
        assert endpoints_space(cantor_level(k)).n == n

    def test_level1_points(self):
        assert endpoints_space(cantor_level(1)).labels == ("0", "1/3", "2/3", "1")

    @pytest.mark.parametrize("k", range(7))
    def test_exact_multiples(self, k):
        s = endpoints_space(cantor_level(k))
        nums = np.array(endpoint_numerators(cantor_level(k)))
        steps = s.dist * 3 ** k
        assert np.array_equal(np.rint(steps), np.abs(nums[:, None] - nums[None, :]))
        assert np.allclose(steps, np.rint(steps), rtol=0, atol=1e-9)

    def test_cap(self):
        with pytest.raises(OutOfRange):
            endpoints_space(cantor_level(7))


class TestSweep:
    def test_counting_limit(self):
        rows = sweep(3, 0, FEDERER).rows
        assert [r.limit_value for r in rows] == [2, 4, 8, 16]
        assert [r.value for r in rows] == [1, 2, 4, 8]
        assert all(r.solver_flag == "exact" for r in rows)

    @pytest.mark.parametrize("m", [0.0, 0.3, CRITICAL_DIMENSION, 1.0, 2.0])
    def test_exact_below_natural_bound(self, m):
        for r in sweep(4, m, FEDERER).rows:
            assert r.value <= normalizer(m) * natural_cover_sum(r.k, m) * (1 + 1e-12)

    def test_natural_cover_is_feasible_at_row_delta(self):
        for k in range(4):
            s = endpoints_space(cantor_level(k))
            delta = 3.0 ** -k * (1 + 1e-9)
            # pairs of one interval's endpoints are admissible
            assert h_m_delta(s, s.all(), 0, delta, FEDERER).value == 2 ** k

    def test_critical_raw_sums_and_bounds(self):
        result = sweep(10, CRITICAL_DIMENSION, PAPER_MODIFIED)
        assert [r.solver_flag for r in result.rows] == ["exact"] * 7 + ["bound"] * 4
        for r in result.rows:
            assert abs(r.raw_sum - 1) <= 1e-12
        deltas = [r.delta for r in result.rows]
        counts = [r.count for r in result.rows]
        assert all(a > b for a, b in zip(deltas, deltas[1:]))
        assert counts == sorted(counts)

    def test_csv(self):
        text = sweep_csv(sweep(2, CRITICAL_DIMENSION))
        lines = text.strip().split("\n")
        assert lines[0] == "k,delta,count,raw_sum,normalized_value,solver_flag,limit_value"
        assert all(line.split(",")[3] == "1.000000000000" for line in lines[1:])


class TestDimension:
    def test_cantor(self):
        data = [(3.0 ** -k, 2 ** k) for k in range(1, 11)]
        assert abs(dimension_estimate(data) - math.log(2) / math.log(3)) < 1e-9

    def test_segment(self):
        assert dimension_estimate([(2.0 ** -k, 2 ** k) for k in range(1, 8)]) == pytest.approx(1.0, abs=1e-12)

    def test_single_scale(self):
        with pytest.raises(DegenerateInput):
            dimension_estimate([(0.5, 2)])
        with pytest.raises(DegenerateInput):
            dimension_estimate([(0.5, 2), (0.5, 3)])

    def test_bad_scales(self):
        with pytest.raises(OutOfRange):
            dimension_estimate([(1.5, 2), (0.5, 3)])
