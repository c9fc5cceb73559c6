import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hausdorff import GaugePolicy, GaugeVariant, OutOfRange, PolicyMismatch, alpha, build_space, gamma, zeta
from hausdorff.gauge import normalizer

from .conftest import all_subsets

SQRT_PI = 1.7724538509055160273  # Gamma(1/2), by quadrature below


def gamma_by_quadrature(t):
    """Integral definition; below 1 shifted by Gamma(t) = Gamma(t + 1) / t to keep the integrand bounded."""
    mpmath.mp.dps = 30
    t = mpmath.mpf(t)
    if t < 1:
        return gamma_by_quadrature(t + 1) / t
    return mpmath.quad(lambda x: x ** (t - 1) * mpmath.exp(-x), [0, 1, 10, mpmath.inf])


def test_quadrature_oracle_agrees_with_frozen_value():
    assert abs(float(gamma_by_quadrature(0.5)) - SQRT_PI) < 1e-15


@pytest.mark.parametrize("t, expected", [(1, 1.0), (5, 24.0), (0.5, SQRT_PI)])
def test_gamma_examples(t, expected):
    assert gamma(t) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("t", np.linspace(0.25, 50, 37))
def test_gamma_against_quadrature(t):
    assert gamma(t) == pytest.approx(float(gamma_by_quadrature(float(t))), rel=1e-12)


@pytest.mark.parametrize("t", [0.2, 50.5, -1])
def test_gamma_range(t):
    with pytest.raises(OutOfRange):
        gamma(t)


@pytest.mark.parametrize("m, expected", [(0, 1.0), (1, 2.0), (2, math.pi), (3, 4 * math.pi / 3)])
def test_alpha(m, expected):
    assert alpha(m) == pytest.approx(expected, rel=1e-10)


def test_alpha_dense_against_oracle():
    mpmath.mp.dps = 30
    for m in np.linspace(0, 96, 193):
        ref = mpmath.gamma(0.5) ** m / mpmath.gamma(1 + m / 2)
        assert alpha(m) > 0
        assert alpha(m) == pytest.approx(float(ref), rel=1e-10)


def test_alpha_range():
    with pytest.raises(OutOfRange):
        alpha(97)


class TestZeta:
    def test_modified_empty(self, pair):
        assert zeta(pair, pair.empty(), 5, GaugePolicy(GaugeVariant.MODIFIED)) == 0

    def test_modified_singleton_m0(self, pair):
        assert zeta(pair, pair.subset(["p"]), 0, GaugePolicy(GaugeVariant.MODIFIED)) == 1

    def test_modified_pair_m1(self):
        s = build_space(["p", "q"], [[0, 3], [3, 0]])
        assert zeta(s, s.all(), 1, GaugePolicy(GaugeVariant.MODIFIED)) == pytest.approx(3.0, rel=1e-12)

    def test_standard_empty_zero_pow_zero(self, pair):
        assert zeta(pair, pair.empty(), 0, GaugePolicy(zero_pow_zero=1)) == 1
        assert zeta(pair, pair.empty(), 0, GaugePolicy(zero_pow_zero=0)) == 0

    def test_raw_rejects_m0(self, pair):
        with pytest.raises(PolicyMismatch):
            zeta(pair, pair.all(), 0, GaugePolicy(GaugeVariant.RAW))

    def test_bad_zero_pow_zero(self):
        with pytest.raises(PolicyMismatch):
            GaugePolicy(zero_pow_zero=2)


POLICIES = [
    GaugePolicy(GaugeVariant.STANDARD, 1),
    GaugePolicy(GaugeVariant.STANDARD, 0),
    GaugePolicy(GaugeVariant.MODIFIED),
    GaugePolicy(GaugeVariant.RAW),
]

small_spaces = st.lists(
    st.tuples(st.floats(0, 1, allow_nan=False), st.floats(0, 1, allow_nan=False)),
    min_size=1,
    max_size=5,
    unique=True,
)


@settings(max_examples=40, deadline=None)
@given(small_spaces, st.sampled_from([0.0, 0.3, 1.0, 2.0, 3.5]))
def test_gauge_properties(pts, m):
    from hausdorff import DuplicatePoint, from_points_euclidean

    try:
        s = from_points_euclidean(pts)
    except DuplicatePoint:
        return
    subsets = list(all_subsets(s))
    for pol in POLICIES:
        if pol.variant is GaugeVariant.RAW and m == 0:
            continue
        for a in subsets:
            for b in subsets:
                if a.issubset(b):
                    assert zeta(s, a, m, pol) <= zeta(s, b, m, pol)
    if m > 0:
        for a in subsets:
            std = zeta(s, a, m, POLICIES[0])
            if len(a) >= 2:
                assert std == zeta(s, a, m, POLICIES[2])
                assert std == pytest.approx(normalizer(m) * zeta(s, a, m, POLICIES[3]), rel=1e-14)
            if len(a) == 1:
                assert all(zeta(s, a, m, p) == 0 for p in POLICIES)
