"""Distribution-level behaviour: density, CDF, quantile, sampling, describe."""

import math

import numpy as np
import pytest

from mbuw import Params, Sample, cdf, describe, median, pdf, quantile, sample

THETA_GRID = [0.1, 0.5, 1.0, 2.0, 10.0]


def params_for(theta: float) -> Params:
    return Params(theta, 1.0)


# ---------------------------------------------------------------------------
# parameter and sample validation
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("alpha,beta", [(0.0, 1.0), (-1.0, 2.0), (1.0, 0.0), (2.0, -3.0)])
def test_params_rejects_nonpositive(alpha, beta):
    with pytest.raises(ValueError):
        Params(alpha, beta)


def test_params_rejects_overflowing_theta():
    with pytest.raises(ValueError):
        Params(1e300, 2.0)


def test_params_theta_identifiability():
    assert Params(2.0, 3.0).theta == Params(8.0, 1.0).theta == 8.0


def test_sample_sorts_and_validates():
    s = Sample([0.5, 0.1, 0.9])
    assert s.n == 3
    assert list(s.values) == [0.1, 0.5, 0.9]
    with pytest.raises(ValueError):
        Sample([])
    with pytest.raises(ValueError, match="0, 1"):
        Sample([0.5, 1.5])
    with pytest.raises(ValueError):
        Sample([0.0, 0.5])


# ---------------------------------------------------------------------------
# pdf
# ---------------------------------------------------------------------------


def test_pdf_beta22_anchor():
    # theta = 1 collapses to the Beta(2, 2) density 6 y (1 - y)
    assert pdf(0.5, Params(1.0, 5.0)) == pytest.approx(1.5, abs=1e-14)
    y = np.linspace(0.01, 0.99, 99)
    np.testing.assert_allclose(pdf(y, params_for(1.0)), 6 * y * (1 - y), atol=1e-14)


def test_pdf_theta2_anchor():
    # exponent 2/theta - 1 vanishes: (6/2) * (1 - sqrt(0.25)) = 1.5
    assert pdf(0.25, Params(2.0, 1.0)) == pytest.approx(1.5, abs=1e-14)


def test_pdf_vanishes_at_left_edge():
    assert pdf(1e-12, params_for(1.0)) == pytest.approx(0.0, abs=1e-11)


def test_pdf_boundaries():
    assert pdf(1.0, params_for(5.0)) == 0.0
    assert pdf(0.0, params_for(1.0)) == 0.0
    assert pdf(0.0, params_for(2.0)) == 3.0
    with pytest.raises(ValueError, match="diverges"):
        pdf(0.0, params_for(2.5))
    with pytest.raises(ValueError):
        pdf(1.2, params_for(1.0))
    with pytest.raises(ValueError):
        pdf(-0.1, params_for(1.0))


def test_pdf_integrates_to_one():
    # independent check through mpmath's adaptive quadrature, which handles
    # the y -> 0 singularity for theta > 2
    mpmath = pytest.importorskip("mpmath")
    for theta in THETA_GRID:
        p = params_for(theta)
        val = mpmath.quad(lambda y: pdf(float(y), p), [0, 1])
        assert abs(float(val) - 1.0) < 1e-10, f"theta={theta}"


def test_pdf_identifiable_through_theta_only():
    y = np.linspace(0.05, 0.95, 19)
    np.testing.assert_array_equal(pdf(y, Params(2.0, 3.0)), pdf(y, Params(8.0, 1.0)))


# ---------------------------------------------------------------------------
# cdf / quantile
# ---------------------------------------------------------------------------


def test_cdf_anchors():
    p1 = params_for(1.0)
    assert cdf(0.0, p1) == 0.0
    assert cdf(1.0, p1) == 1.0
    assert cdf(0.5, p1) == pytest.approx(0.5, abs=1e-15)
    assert cdf(0.25, Params(2.0, 1.0)) == pytest.approx(0.5, abs=1e-15)
    with pytest.raises(ValueError):
        cdf(1.1, p1)


def test_cdf_monotone():
    y = np.linspace(0.0, 1.0, 501)
    for theta in THETA_GRID:
        F = cdf(y, params_for(theta))
        assert np.all(np.diff(F) >= 0.0), f"theta={theta}"


def test_quantile_anchors():
    p = params_for(3.0)
    assert quantile(0.0, p) == 0.0
    assert quantile(1.0, p) == 1.0
    assert quantile(0.5, p) == 0.5 ** 3.0
    assert quantile(0.5, Params(2.0, 1.0)) == pytest.approx(0.25, abs=1e-15)
    with pytest.raises(ValueError):
        quantile(-0.01, p)


def test_quantile_cdf_roundtrip():
    u = np.linspace(0.001, 0.999, 199)
    y = np.linspace(0.001, 0.999, 199)
    for theta in THETA_GRID:
        p = params_for(theta)
        np.testing.assert_allclose(cdf(quantile(u, p), p), u, atol=1e-10)
        np.testing.assert_allclose(quantile(cdf(y, p), p), y, atol=1e-10)


def test_median_property():
    for theta in THETA_GRID + [1.1281]:
        p = params_for(theta)
        assert median(p) == quantile(0.5, p)
        assert cdf(median(p), p) == pytest.approx(0.5, abs=1e-12)
    assert median(params_for(1.1281)) == pytest.approx(0.4576, abs=5e-5)


def test_quantile_identifiable_through_theta_only():
    u = np.linspace(0.0, 1.0, 21)
    np.testing.assert_array_equal(quantile(u, Params(2.0, 3.0)), quantile(u, Params(8.0, 1.0)))


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------


def test_sample_deterministic():
    p = params_for(1.3)
    s1 = sample(100, p, seed=123)
    s2 = sample(100, p, seed=123)
    np.testing.assert_array_equal(s1.values, s2.values)


def test_sample_mean_beta22():
    s = sample(1000, params_for(1.0), seed=7)
    stderr = s.values.std(ddof=1) / math.sqrt(s.n)
    assert abs(s.values.mean() - 0.5) < 3 * stderr


def test_sample_median_theta2():
    s = sample(1000, params_for(2.0), seed=7)
    # asymptotic se of the sample median: 1 / (2 f(median) sqrt(n))
    f_med = pdf(0.25, params_for(2.0))
    stderr = 1.0 / (2.0 * f_med * math.sqrt(s.n))
    assert abs(np.median(s.values) - 0.25) < 3 * stderr


def test_sample_rejects_bad_n():
    with pytest.raises(ValueError):
        sample(0, params_for(1.0), seed=1)


# ---------------------------------------------------------------------------
# describe
# ---------------------------------------------------------------------------


def test_describe_flood(flood):
    st = describe(flood)
    assert st.mean == pytest.approx(0.4225, abs=1e-12)
    assert st.median == pytest.approx(0.405, abs=1e-12)
    assert st.q1 == pytest.approx(0.33, abs=1e-12)
    assert st.q3 == pytest.approx(0.465, abs=1e-12)
    assert st.min == 0.26 and st.max == 0.74
    assert st.stdev == pytest.approx(0.1244, abs=5e-5)
    assert st.skewness == pytest.approx(1.1625, abs=5e-5)
    assert st.kurtosis == pytest.approx(4.2363, abs=5e-5)


def test_describe_pumps(pumps):
    st = describe(pumps)
    assert st.mean == pytest.approx(0.1578, abs=5e-5)
    assert st.median == pytest.approx(0.0614, abs=1e-12)
    assert st.q1 == pytest.approx(0.0292, abs=1e-4)
    assert st.q3 == pytest.approx(0.21, abs=1e-4)
    assert st.stdev == pytest.approx(0.1931, abs=5e-5)
    assert st.skewness == pytest.approx(1.4614, abs=5e-5)
    assert st.kurtosis == pytest.approx(3.9988, abs=5e-5)


def test_describe_ordering_invariant(flood):
    st = describe(flood)
    assert st.min <= st.q1 <= st.median <= st.q3 <= st.max
    assert st.stdev >= 0.0


def test_describe_degenerate_sample():
    with pytest.raises(ValueError, match="variance"):
        describe(Sample([0.3, 0.3, 0.3, 0.3]))


def test_describe_needs_four_points():
    with pytest.raises(ValueError):
        describe(Sample([0.2, 0.4, 0.6]))
