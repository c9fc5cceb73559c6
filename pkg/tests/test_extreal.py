import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hausdorff.extreal import INF, ext, ext_equal, ext_geq, ext_sum, format_ext, omega_sum, parse_ext

nonneg = st.floats(min_value=0, max_value=1e300, allow_nan=False)


def test_omega_sum():
    assert omega_sum(0) == 0
    assert omega_sum(1e-300) == INF
    assert omega_sum(INF) == INF


def test_empty_sum_is_zero():
    assert ext_sum([]) == 0


def test_sum_absorbs_infinity():
    assert ext_sum([1.0, INF, 2.0]) == INF


@pytest.mark.parametrize("bad", [-1.0, math.nan])
def test_ext_rejects(bad):
    with pytest.raises(ValueError):
        ext(bad)


@given(st.one_of(nonneg, st.just(INF)))
def test_format_round_trip(x):
    y = parse_ext(format_ext(x))
    assert ext_equal(x, y, 1e-14)


def test_format_examples():
    assert format_ext(5.0) == "5"
    assert format_ext(INF) == "inf"
    assert parse_ext("inf") == INF


def test_comparisons():
    assert ext_geq(INF, INF)
    assert not ext_geq(1.0, INF)
    assert ext_geq(1.0, 1.0 + 1e-14)
    assert not ext_equal(INF, 1e308)
