"""The numerical oracle against the closed forms, and against itself."""

import pytest

from mbuw import integrate_pwm, pop_pwm_general
from mbuw.quadrature import QuadResult, ToleranceNotAchieved

THETA_GRID = [0.1, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0]
ORDERS = [(0, 0), (0, 1), (1, 0), (0, 2), (2, 0), (0, 3), (3, 0)]


def test_anchors():
    assert integrate_pwm(0, 0, 1.0).value == pytest.approx(0.5, abs=1e-10)
    assert integrate_pwm(2, 0, 1.0).value == pytest.approx(1164 / 5040, abs=1e-10)
    assert integrate_pwm(1, 0, 8.0).value == pytest.approx(108 / 2184, abs=1e-8)


@pytest.mark.parametrize("r,s", ORDERS)
def test_oracle_agrees_with_closed_forms(r, s):
    for theta in THETA_GRID:
        q = integrate_pwm(r, s, theta, tol=1e-10)
        assert q.value == pytest.approx(pop_pwm_general(r, s, theta), abs=1e-8), (
            f"(r={r}, s={s}, theta={theta})"
        )


@pytest.mark.parametrize("theta", [0.5, 1.0, 2.0, 5.0])
def test_substituted_and_direct_variables_agree(theta):
    tol = 1e-8
    qt = integrate_pwm(1, 0, theta, tol=tol, variable="t")
    qy = integrate_pwm(1, 0, theta, tol=tol, variable="y")
    assert abs(qt.value - qy.value) < 2 * tol


def test_against_second_oracle():
    mpmath = pytest.importorskip("mpmath")

    def integrand(y, r, s, theta):
        t = y ** (1.0 / theta)
        F = 3 * t ** 2 - 2 * t ** 3
        f = (6.0 / theta) * (1 - t) * y ** (2.0 / theta - 1.0)
        return y * F ** r * (1 - F) ** s * f

    for r, s, theta in [(0, 1, 0.7), (2, 0, 3.0), (0, 2, 1.5)]:
        ref = float(mpmath.quad(lambda y: integrand(float(y), r, s, theta), [0, 1]))
        assert integrate_pwm(r, s, theta).value == pytest.approx(ref, abs=1e-9)


def test_result_metadata():
    q = integrate_pwm(0, 1, 2.0)
    assert isinstance(q, QuadResult)
    assert q.evaluations >= 1
    assert q.abs_error_estimate >= 0.0


def test_validation():
    with pytest.raises(ValueError):
        integrate_pwm(0, 0, -1.0)
    with pytest.raises(ValueError):
        integrate_pwm(0, 0, 1.0, tol=0.0)
    with pytest.raises(ValueError):
        integrate_pwm(-1, 0, 1.0)
    with pytest.raises(ValueError):
        integrate_pwm(0, 0, 1.0, variable="z")


def test_tolerance_failure_carries_best_estimate():
    # an absurd tolerance cannot be certified; the best estimate still rides
    # along on the exception
    with pytest.raises(ToleranceNotAchieved) as err:
        integrate_pwm(0, 0, 0.1, tol=1e-300, variable="y")
    best = err.value.best
    assert best.value == pytest.approx(pop_pwm_general(0, 0, 0.1), abs=1e-8)
