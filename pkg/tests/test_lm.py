"""Solver behaviour: convergence, damping schedule, traces, covariance."""

import numpy as np
import pytest

from mbuw import LmConfig, LmError, solve
from mbuw.moments import pop_pwm_dtheta, pop_pwm_general

UNCONSTRAINED = LmConfig(param_floor=-np.inf)


def test_linear_residual():
    res = solve(lambda x: x - 2.0, lambda x: np.eye(1), [0.0], UNCONSTRAINED)
    assert res.params[0] == pytest.approx(2.0, abs=1e-9)
    assert res.sse < 1e-18
    assert res.status in ("converged_step", "converged_sse")


def test_rosenbrock_least_squares():
    def resid(p):
        x, y = p
        return np.array([1.0 - x, 10.0 * (y - x * x)])

    def jac(p):
        x, _ = p
        return np.array([[-1.0, 0.0], [-20.0 * x, 10.0]])

    res = solve(resid, jac, [-1.2, 1.0], LmConfig(param_floor=-np.inf, max_iters=2000))
    np.testing.assert_allclose(res.params, [1.0, 1.0], atol=1e-6)


def _theta_problem(theta_star: float, order: int = 1):
    target_a = pop_pwm_general(0, order, theta_star)
    target_b = pop_pwm_general(order, 0, theta_star)

    def resid(p):
        th = p[0] ** p[1]
        return np.array([
            target_a - pop_pwm_general(0, order, th),
            target_b - pop_pwm_general(order, 0, th),
        ])

    def jac(p):
        th = p[0] ** p[1]
        grad = np.array([p[1] * p[0] ** (p[1] - 1.0), th * np.log(p[0])])
        return np.outer(
            [-pop_pwm_dtheta(0, order, th), -pop_pwm_dtheta(order, 0, th)], grad
        )

    return resid, jac


@pytest.mark.parametrize("init", [(0.2, 1.0), (0.5, 1.0), (1.0, 1.0), (2.0, 1.0), (5.0, 1.0)])
def test_exact_recovery_across_inits(init):
    resid, jac = _theta_problem(2.0)
    res = solve(resid, jac, list(init))
    theta_hat = res.params[0] ** res.params[1]
    assert abs(theta_hat - 2.0) < 1e-6
    assert res.sse < 1e-20


@pytest.mark.parametrize("theta_star", [0.5, 1.0, 4.0])
def test_exact_recovery_across_targets(theta_star):
    resid, jac = _theta_problem(theta_star)
    res = solve(resid, jac, [1.0, 1.0])
    theta_hat = res.params[0] ** res.params[1]
    assert abs(theta_hat - theta_star) < 1e-6
    assert res.sse < 1e-20


def test_accepted_sse_trace_monotone():
    for theta_star, init in [(0.5, (1.0, 1.0)), (2.0, (0.3, 2.0)), (3.0, (1.4, 1.2))]:
        resid, jac = _theta_problem(theta_star)
        res = solve(resid, jac, list(init))
        assert np.all(np.diff(res.sse_trace) <= 0.0)
        assert len(res.lambda_trace) == res.iterations


def test_covariance_symmetric_nonnegative_diagonal():
    resid, jac = _theta_problem(1.5)
    res = solve(resid, jac, [1.0, 1.0])
    V = res.covariance
    np.testing.assert_allclose(V, V.T, atol=1e-12)
    assert np.all(np.diag(V) >= 0.0)


def test_positivity_floor_blocks_negative_trials():
    # unconstrained, x - (-3) would converge to -3; the floor keeps the
    # iterate at its starting side and the solver exits on step size
    res = solve(lambda x: x + 3.0, lambda x: np.eye(1), [0.5], LmConfig())
    assert res.params[0] >= 1e-8


def test_max_iters_status():
    resid, jac = _theta_problem(2.0)
    res = solve(resid, jac, [5.0, 1.0], LmConfig(max_iters=2))
    assert res.status == "max_iters"
    assert res.iterations == 2


def test_nonfinite_initial_residual_raises():
    with pytest.raises(LmError):
        solve(lambda x: np.array([np.nan]), lambda x: np.eye(1), [1.0])


def test_config_validation():
    with pytest.raises(ValueError):
        LmConfig(lambda0=0.0)
    with pytest.raises(ValueError):
        LmConfig(lambda_up=0.5)
    with pytest.raises(ValueError):
        LmConfig(lambda_down=1.5)
    with pytest.raises(ValueError):
        LmConfig(max_iters=0)
    with pytest.raises(ValueError):
        LmConfig(step_tol=-1.0)
