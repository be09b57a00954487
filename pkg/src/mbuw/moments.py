"""Probability-weighted moments (PWMs) of the MBUW distribution.

Population moments ``M_{1,r,s} = E[y * F(y)**r * (1-F(y))**s]`` have exact
rational closed forms in the compound exponent ``theta``: substituting
``t = y**(1/theta)`` turns the integrand into ``t**theta`` times an
integer-coefficient polynomial, and each monomial integrates to
``6*(1/(k+2+theta) - 1/(k+3+theta))``.  The named first- and second-order
moments are implemented as explicit rational functions; ``pop_pwm_general``
carries out the polynomial expansion for arbitrary one-sided orders and is
used to cross-check them.

Sample estimators cover both the order-statistics form with binomial-ratio
weights (unbiased) and the plotting-position form (biased).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .distribution import Sample

__all__ = [
    "MomentSpec",
    "PwmPair",
    "pop_mean",
    "pop_m101",
    "pop_m110",
    "pop_m102",
    "pop_m120",
    "pop_m102_flawed",
    "pop_m120_flawed",
    "pop_pwm_general",
    "pop_pwm_dtheta",
    "rational_moment_polys",
    "sample_pwm_unbiased",
    "sample_pwm_biased",
    "sample_pwm_pair",
    "convert_pwm",
]

PLOTTING_FORMS = ("i_minus_b_over_n", "i_minus_b_over_n_plus_1_minus_2b")

# expansion of F^r (1-F)^s grows like 5^(r+s); past this order the float
# evaluation of the alternating sum is no longer trustworthy
_MAX_EXPANSION_ORDER = 60


@dataclass(frozen=True)
class MomentSpec:
    """Which PWM pair is targeted and how the sample side is estimated.

    ``order`` selects the pair (``M_{1,0,order}``, ``M_{1,order,0}``);
    ``estimator`` is ``"unbiased"`` (binomial weights) or ``"biased"``
    (plotting positions).  ``plotting_b`` and ``plotting_form`` only matter
    for the biased estimator: form ``(i-b)/n`` admits 0 <= b <= 1, form
    ``(i-b)/(n+1-2b)`` admits -0.5 <= b <= 0.5.
    """

    order: int = 1
    estimator: str = "unbiased"
    plotting_b: float = 0.35
    plotting_form: str = "i_minus_b_over_n"

    def __post_init__(self):
        if self.order not in (1, 2):
            raise ValueError(f"order must be 1 or 2, got {self.order}")
        if self.estimator not in ("unbiased", "biased"):
            raise ValueError(f"unknown estimator {self.estimator!r}")
        if self.plotting_form not in PLOTTING_FORMS:
            raise ValueError(f"unknown plotting form {self.plotting_form!r}")
        b = self.plotting_b
        if self.plotting_form == "i_minus_b_over_n":
            if not 0.0 <= b <= 1.0:
                raise ValueError(f"plotting_b must be in [0, 1] for form (i-b)/n, got {b}")
        elif not -0.5 <= b <= 0.5:
            raise ValueError(f"plotting_b must be in [-0.5, 0.5] for form (i-b)/(n+1-2b), got {b}")


@dataclass(frozen=True)
class PwmPair:
    """A matched pair of PWM values: ``a = M_{1,0,order}``, ``b = M_{1,order,0}``."""

    a: float
    b: float
    order: int


def _check_theta(theta: float) -> float:
    theta = float(theta)
    if not (theta > 0.0 and math.isfinite(theta)):
        raise ValueError(f"theta must be a positive finite number, got {theta}")
    return theta


# ---------------------------------------------------------------------------
# population moments, closed forms
# ---------------------------------------------------------------------------


def pop_mean(theta: float) -> float:
    """``M_{1,0,0} = 6 / ((2+theta)(3+theta))``."""
    theta = _check_theta(theta)
    return 6.0 / ((2.0 + theta) * (3.0 + theta))


def pop_m110(theta: float) -> float:
    """``M_{1,1,0} = 6(10+theta) / ((4+theta)(5+theta)(6+theta))``."""
    theta = _check_theta(theta)
    return 6.0 * (10.0 + theta) / ((4.0 + theta) * (5.0 + theta) * (6.0 + theta))


def pop_m101(theta: float) -> float:
    """``M_{1,0,1} = (360+108*theta) / ((2+theta)...(6+theta))``."""
    theta = _check_theta(theta)
    den = (2.0 + theta) * (3.0 + theta) * (4.0 + theta) * (5.0 + theta) * (6.0 + theta)
    return (360.0 + 108.0 * theta) / den


def pop_m120(theta: float) -> float:
    """``M_{1,2,0} = (1008+150*theta+6*theta**2) / ((6+theta)...(9+theta))``.

    Equivalently ``54/(6+t) - 126/(7+t) + 96/(8+t) - 24/(9+t)``.
    """
    theta = _check_theta(theta)
    den = (6.0 + theta) * (7.0 + theta) * (8.0 + theta) * (9.0 + theta)
    return (1008.0 + 150.0 * theta + 6.0 * theta ** 2) / den


def pop_m102(theta: float) -> float:
    """``M_{1,0,2}`` as the difference of two partial-fraction brackets.

    Satisfies the binomial identity ``M_{1,0,2} = mean - 2*M_{1,1,0} + M_{1,2,0}``.
    """
    t = _check_theta(theta)
    upper = (1.0 / (2.0 + t) - 6.0 / (4.0 + t) + 4.0 / (5.0 + t)
             + 9.0 / (6.0 + t) - 12.0 / (7.0 + t) + 4.0 / (8.0 + t))
    lower = (1.0 / (3.0 + t) - 6.0 / (5.0 + t) + 4.0 / (6.0 + t)
             + 9.0 / (7.0 + t) - 12.0 / (8.0 + t) + 4.0 / (9.0 + t))
    return 6.0 * upper - 6.0 * lower


def pop_m102_flawed(theta: float) -> float:
    """A circulating but algebraically wrong rational form of ``M_{1,0,2}``.

    At ``theta = 1`` it evaluates to ~0.9924 instead of the true 43/420, so
    it is useless for estimation.  Kept only as a regression anchor: tests
    pin its (wrong) values to make sure fitting code never reverts to it.
    """
    t = _check_theta(theta)
    num = (962880.0 * t + 553300.0 * t ** 2 + 175520.0 * t ** 3 + 32575.0 * t ** 4
           + 3515.0 * t ** 5 + 205.0 * t ** 6 + 5.0 * t ** 7 + 72560.0)
    den = (663696.0 * t + 509004.0 * t ** 2 + 214676.0 * t ** 3 + 54649.0 * t ** 4
           + 8624.0 * t ** 5 + 826.0 * t ** 6 + 44.0 * t ** 7 + t ** 8 + 362880.0)
    return num / den


def pop_m120_flawed(theta: float) -> float:
    """Wrong rational form of ``M_{1,2,0}`` (final term -4/(9+t) instead of
    -24/(9+t)).  At ``theta = 1`` it exceeds 1, impossible for a moment of a
    unit-interval variable.  Regression anchor only; see ``pop_m102_flawed``.
    """
    t = _check_theta(theta)
    num = 3070.0 * t + 426.0 * t ** 2 + 20.0 * t ** 3 + 7728.0
    den = 1650.0 * t + 335.0 * t ** 2 + 30.0 * t ** 3 + t ** 4 + 3024.0
    return num / den


# ---------------------------------------------------------------------------
# general one-sided moments by exact polynomial expansion
# ---------------------------------------------------------------------------


def _conv(a: tuple, b: tuple) -> tuple:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(out)


@lru_cache(maxsize=None)
def _expansion_coeffs(r: int, s: int) -> tuple:
    """Integer coefficients (ascending in t) of ``(3t^2-2t^3)^r (1-3t^2+2t^3)^s``."""
    poly = (1,)
    for _ in range(r):
        poly = _conv(poly, (0, 0, 3, -2))
    for _ in range(s):
        poly = _conv(poly, (1, 0, -3, 2))
    return poly


def _check_orders(r: int, s: int) -> tuple[int, int]:
    if r < 0 or s < 0 or r != int(r) or s != int(s):
        raise ValueError(f"moment orders must be nonnegative integers, got r={r}, s={s}")
    r, s = int(r), int(s)
    if r and s:
        raise ValueError("only one-sided moments are supported (r*s must be 0)")
    if r + s > _MAX_EXPANSION_ORDER:
        raise ValueError(f"moment order {r + s} exceeds supported maximum {_MAX_EXPANSION_ORDER}")
    return r, s


def pop_pwm_general(r: int, s: int, theta: float) -> float:
    """Population ``M_{1,r,s}`` for arbitrary one-sided integer orders.

    Expands ``F**r * (1-F)**s`` exactly in ``t = y**(1/theta)`` and
    integrates term by term; specializes to the named closed forms for
    (r, s) in {(0,0), (0,1), (1,0), (0,2), (2,0)}.
    """
    r, s = _check_orders(r, s)
    theta = _check_theta(theta)
    cs = _expansion_coeffs(r, s)
    return math.fsum(
        6.0 * c * (1.0 / (k + 2.0 + theta) - 1.0 / (k + 3.0 + theta))
        for k, c in enumerate(cs) if c
    )


def pop_pwm_dtheta(r: int, s: int, theta: float) -> float:
    """Derivative of ``pop_pwm_general`` with respect to theta."""
    r, s = _check_orders(r, s)
    theta = _check_theta(theta)
    cs = _expansion_coeffs(r, s)
    return math.fsum(
        6.0 * c * (1.0 / (k + 3.0 + theta) ** 2 - 1.0 / (k + 2.0 + theta) ** 2)
        for k, c in enumerate(cs) if c
    )


@lru_cache(maxsize=None)
def rational_moment_polys(r: int, s: int) -> tuple[tuple, tuple]:
    """Exact numerator/denominator coefficients of ``M_{1,r,s}`` in theta.

    Returns ``(num, den)`` as tuples of Python ints, ascending powers.  The
    denominator is the product of ``(shift + theta)`` over every integral
    shift appearing in the termwise expansion; the numerator follows by
    clearing denominators exactly.  Used by the denominator-cleared residual
    option and by the oracle tests.
    """
    r, s = _check_orders(r, s)
    cs = _expansion_coeffs(r, s)
    shifts = sorted({k + 2 for k, c in enumerate(cs) if c}
                    | {k + 3 for k, c in enumerate(cs) if c})
    den = (1,)
    for sh in shifts:
        den = _conv(den, (sh, 1))
    num = [0] * len(den)
    for k, c in enumerate(cs):
        if not c:
            continue
        for sh_excluded, sign in ((k + 2, 1), (k + 3, -1)):
            part = (1,)
            for sh in shifts:
                if sh != sh_excluded:
                    part = _conv(part, (sh, 1))
            for i, coeff in enumerate(part):
                num[i] += 6 * c * sign * coeff
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num), den


# ---------------------------------------------------------------------------
# sample estimators
# ---------------------------------------------------------------------------


def sample_pwm_unbiased(s: Sample, r: int = 0, k: int = 0) -> float:
    """Order-statistics estimator with binomial-ratio weights.

    ``M_{1,0,k}`` uses weights ``C(n-i, k)/C(n-1, k)``, ``M_{1,r,0}`` uses
    ``C(i-1, r)/C(n-1, r)``; one of r, k must be zero.  ``r = k = 0`` gives
    the sample mean.
    """
    r, k = _check_orders(r, k)
    x = s.values
    n = s.n
    if n <= max(r, k):
        raise ValueError(f"need more than max(r, k) = {max(r, k)} observations, got {n}")
    if r == 0 and k == 0:
        return float(x.mean())
    if r > 0:
        w = np.array([comb(i - 1, r) for i in range(1, n + 1)], dtype=float)
        w /= comb(n - 1, r)
    else:
        w = np.array([comb(n - i, k) for i in range(1, n + 1)], dtype=float)
        w /= comb(n - 1, k)
    return float((w * x).mean())


def plotting_positions(n: int, spec: MomentSpec) -> np.ndarray:
    """Plotting positions ``p_{i:n}`` for i = 1..n under ``spec``."""
    i = np.arange(1, n + 1, dtype=float)
    b = spec.plotting_b
    if spec.plotting_form == "i_minus_b_over_n":
        return (i - b) / n
    return (i - b) / (n + 1.0 - 2.0 * b)


def sample_pwm_biased(s: Sample, r: int, k: int, spec: MomentSpec) -> float:
    """Plotting-position estimator ``(1/n) sum y_{i:n} p**r (1-p)**k``."""
    r, k = _check_orders(r, k)
    p = plotting_positions(s.n, spec)
    return float(np.mean(s.values * p ** r * (1.0 - p) ** k))


def sample_pwm_pair(s: Sample, spec: MomentSpec) -> PwmPair:
    """The estimated pair (``M_{1,0,order}``, ``M_{1,order,0}``) under ``spec``."""
    m = spec.order
    if spec.estimator == "unbiased":
        a = sample_pwm_unbiased(s, 0, m)
        b = sample_pwm_unbiased(s, m, 0)
    else:
        a = sample_pwm_biased(s, 0, m, spec)
        b = sample_pwm_biased(s, m, 0, spec)
    return PwmPair(a=a, b=b, order=m)


def convert_pwm(values) -> list[float]:
    """Binomial conversion between the two one-sided PWM families.

    Given ``[M_{1,0,0}, M_{1,1,0}, ..., M_{1,m,0}]`` returns the list
    ``[M_{1,0,0}, M_{1,0,1}, ..., M_{1,0,m}]`` via
    ``out[s] = sum_i (-1)**i C(s, i) in[i]`` (and vice versa: the transform
    is its own inverse).
    """
    vals = [float(v) for v in np.asarray(values, dtype=float).ravel()]
    if not vals:
        raise ValueError("need at least one moment value")
    return [
        math.fsum((-1) ** i * comb(s, i) * vals[i] for i in range(s + 1))
        for s in range(len(vals))
    ]
