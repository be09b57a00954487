"""Damped least-squares (Levenberg-Marquardt) solver.

The update is ``x_new = x + [J'J + lambda*I]^{-1} J' (-r)`` with ``J`` the
Jacobian of the residual vector ``r``.  The damping factor starts at
``lambda0`` and is divided by 10 after an improving step and multiplied by
10 after a rejected one; only steps that strictly decrease the sum of
squared residuals are accepted, so the accepted-step SSE trace is
monotone.  ``[J'J + lambda*I]^{-1}`` at the last accepted step doubles as
the parameter covariance approximation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = ["LmConfig", "LmResult", "LmError", "solve"]

_LAMBDA_CAP = 1e12


class LmError(RuntimeError):
    """Unrecoverable solver failure (singular normal equations or
    non-finite residuals at the starting point)."""


@dataclass(frozen=True)
class LmConfig:
    """Damping schedule and termination settings.

    ``param_floor`` rejects trial points with any component below it (the
    positivity guard for shape parameters); set it to ``-inf`` for
    unconstrained problems.
    """

    lambda0: float = 1e-3
    lambda_up: float = 10.0
    lambda_down: float = 0.1
    max_iters: int = 500
    step_tol: float = 1e-10
    sse_tol: float = 1e-14
    param_floor: float = 1e-8

    def __post_init__(self):
        if self.lambda0 <= 0:
            raise ValueError(f"lambda0 must be positive, got {self.lambda0}")
        if self.lambda_up <= 1:
            raise ValueError(f"lambda_up must exceed 1, got {self.lambda_up}")
        if not 0 < self.lambda_down < 1:
            raise ValueError(f"lambda_down must lie in (0, 1), got {self.lambda_down}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be at least 1, got {self.max_iters}")
        if self.step_tol <= 0 or self.sse_tol <= 0:
            raise ValueError("tolerances must be positive")


@dataclass(frozen=True)
class LmResult:
    """Solver outcome.

    ``sse_trace`` holds the SSE after each accepted step (starting with the
    initial point), so it is nonincreasing by construction; ``lambda_trace``
    records the damping used on every trial, accepted or not.
    ``covariance`` is ``[J'J + lambda*I]^{-1}`` from the last accepted step.
    """

    params: np.ndarray
    sse: float
    iterations: int
    status: str
    covariance: np.ndarray
    sse_trace: list = field(default_factory=list)
    lambda_trace: list = field(default_factory=list)


def solve(residual_fn, jacobian_fn, init, cfg: LmConfig = LmConfig()) -> LmResult:
    """Minimize ``sum(residual_fn(x)**2)`` from ``init``.

    Parameters
    ----------
    residual_fn : callable
        Maps a parameter vector to the residual vector.
    jacobian_fn : callable
        Maps a parameter vector to the residual Jacobian (rows are
        gradients of the residual components).
    init : array_like
        Starting parameter vector.
    cfg : LmConfig

    Returns
    -------
    LmResult with status ``converged_step``, ``converged_sse`` or
    ``max_iters``.
    """
    x = np.asarray(init, dtype=float).copy()
    r = np.asarray(residual_fn(x), dtype=float)
    if not np.all(np.isfinite(r)):
        raise LmError(f"residuals are not finite at the starting point {x.tolist()}")
    sse = float(r @ r)
    lam = cfg.lambda0
    eye = np.eye(x.size)
    sse_trace = [sse]
    lambda_trace: list[float] = []
    status = "max_iters"
    a_used = None
    iterations = 0

    while iterations < cfg.max_iters:
        iterations += 1
        lambda_trace.append(lam)
        J = np.asarray(jacobian_fn(x), dtype=float)
        A = J.T @ J + lam * eye
        try:
            step = np.linalg.solve(A, -J.T @ r)
        except np.linalg.LinAlgError:
            lam *= cfg.lambda_up
            if lam > _LAMBDA_CAP:
                raise LmError(
                    f"normal equations remain singular with damping above {_LAMBDA_CAP:g}"
                ) from None
            continue
        if float(np.linalg.norm(step)) < cfg.step_tol:
            status = "converged_step"
            a_used = A if a_used is None else a_used
            break
        trial = x + step
        if np.any(trial < cfg.param_floor):
            lam *= cfg.lambda_up
            continue
        r_trial = np.asarray(residual_fn(trial), dtype=float)
        if not np.all(np.isfinite(r_trial)):
            lam *= cfg.lambda_up
            continue
        sse_trial = float(r_trial @ r_trial)
        if sse_trial < sse:
            improvement = sse - sse_trial
            x, r, sse = trial, r_trial, sse_trial
            sse_trace.append(sse)
            a_used = A
            lam *= cfg.lambda_down
            if improvement < cfg.sse_tol:
                status = "converged_sse"
                break
        else:
            lam *= cfg.lambda_up

    if a_used is None:
        J = np.asarray(jacobian_fn(x), dtype=float)
        a_used = J.T @ J + lam * eye
    covariance = np.linalg.inv(a_used)
    return LmResult(
        params=x,
        sse=sse,
        iterations=iterations,
        status=status,
        covariance=covariance,
        sse_trace=sse_trace,
        lambda_trace=lambda_trace,
    )
