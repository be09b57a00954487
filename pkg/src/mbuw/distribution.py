"""The median-based unit Weibull (MBUW) distribution on the open unit interval.

The CDF is the smoothstep cubic ``3*t**2 - 2*t**3`` evaluated at
``t = y**(1/theta)``, where ``theta = alpha**beta`` is the compound shape
exponent.  Every functional of the distribution depends on ``(alpha, beta)``
only through ``theta``; in particular the median is ``0.5**theta``, which is
what the name refers to.  ``theta = 1`` reduces the density to the Beta(2, 2)
density ``6*y*(1-y)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Params",
    "Sample",
    "DescriptiveStats",
    "pdf",
    "cdf",
    "quantile",
    "sample",
    "median",
    "describe",
]


@dataclass(frozen=True)
class Params:
    """Shape parameter pair (alpha, beta), both strictly positive.

    The distribution sees the parameters only through the compound
    exponent ``theta = alpha**beta``, so distinct pairs with equal
    ``theta`` describe the same distribution.
    """

    alpha: float
    beta: float

    def __post_init__(self):
        a, b = self.alpha, self.beta
        if not (math.isfinite(a) and math.isfinite(b)):
            raise ValueError(f"parameters must be finite, got alpha={a}, beta={b}")
        if a <= 0 or b <= 0:
            raise ValueError(f"parameters must be positive, got alpha={a}, beta={b}")
        t = a ** b
        if not (math.isfinite(t) and t > 0):
            raise ValueError(f"alpha**beta = {t} is not a positive finite number")

    @property
    def theta(self) -> float:
        return self.alpha ** self.beta


@dataclass(frozen=True)
class Sample:
    """Validated observations, sorted ascending, all strictly inside (0, 1).

    Parameters
    ----------
    values : array_like
        Raw observations; stored sorted.
    source : str, optional
        Provenance note (file path, generator description, ...).
    """

    values: np.ndarray
    source: str | None = None

    def __post_init__(self):
        v = np.sort(np.asarray(self.values, dtype=float).ravel())
        if v.size < 1:
            raise ValueError("sample must contain at least one observation")
        if not np.all(np.isfinite(v)):
            raise ValueError("sample contains non-finite values")
        if v[0] <= 0.0 or v[-1] >= 1.0:
            bad = v[(v <= 0.0) | (v >= 1.0)]
            raise ValueError(
                "sample values must lie strictly inside (0, 1); "
                f"offending values: {bad.tolist()}"
            )
        object.__setattr__(self, "values", v)

    @property
    def n(self) -> int:
        return self.values.size

    def __len__(self) -> int:
        return self.values.size


@dataclass(frozen=True)
class DescriptiveStats:
    min: float
    mean: float
    stdev: float
    skewness: float
    kurtosis: float
    q1: float
    median: float
    q3: float
    max: float


def _as_array(y, lo: float, hi: float, name: str):
    arr = np.asarray(y, dtype=float)
    if np.any(arr < lo) or np.any(arr > hi) or not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must lie in [{lo}, {hi}], got {y!r}")
    return arr


def pdf(y, p: Params):
    """Density ``(6/theta) * (1 - y**(1/theta)) * y**(2/theta - 1)``.

    Accepts scalars or arrays in [0, 1].  The endpoints are assigned their
    continuous limits; at ``y = 0`` the limit diverges for ``theta > 2``,
    which raises a ValueError instead of returning infinity.
    """
    theta = p.theta
    arr = _as_array(y, 0.0, 1.0, "y")
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    out = np.zeros_like(arr)
    if np.any(arr == 0.0):
        if theta > 2.0:
            raise ValueError(f"pdf diverges at y=0 for theta={theta} > 2")
        out[arr == 0.0] = 3.0 if theta == 2.0 else 0.0
    inner = (arr > 0.0) & (arr < 1.0)
    yi = arr[inner]
    out[inner] = (6.0 / theta) * (1.0 - yi ** (1.0 / theta)) * yi ** (2.0 / theta - 1.0)
    return float(out[0]) if scalar else out


def cdf(y, p: Params):
    """CDF ``3*t**2 - 2*t**3`` with ``t = y**(1/theta)``, on [0, 1]."""
    theta = p.theta
    arr = _as_array(y, 0.0, 1.0, "y")
    t = arr ** (1.0 / theta)
    out = 3.0 * t ** 2 - 2.0 * t ** 3
    return float(out) if arr.ndim == 0 else out


def quantile(u, p: Params):
    """Inverse CDF on [0, 1].

    The smoothstep cubic is inverted trigonometrically and the result is
    raised to ``theta``:

        y = { -0.5*(cos(phi) - sqrt(3)*sin(phi)) + 0.5 } ** theta,
        phi = arccos(1 - 2u) / 3.
    """
    theta = p.theta
    arr = _as_array(u, 0.0, 1.0, "u")
    phi = np.arccos(1.0 - 2.0 * arr) / 3.0
    inner = -0.5 * (np.cos(phi) - math.sqrt(3.0) * np.sin(phi)) + 0.5
    # rounding can push the cubic root a hair outside [0, 1]; u = 1/2 maps to
    # exactly 1/2 so the defining median identity holds without rounding noise
    inner = np.clip(inner, 0.0, 1.0)
    inner = np.where(arr == 0.5, 0.5, inner)
    out = inner ** theta
    return float(out) if arr.ndim == 0 else out


def sample(n: int, p: Params, seed) -> Sample:
    """Draw ``n`` observations by inverse-transform sampling.

    Deterministic for a fixed integer seed; ``seed`` may also be a
    ``numpy.random.Generator``.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    rng = np.random.default_rng(seed)
    ys = np.empty(n, dtype=float)
    todo = np.arange(n)
    # redraw the (vanishingly rare) draws that underflow to an endpoint
    while todo.size:
        u = rng.random(todo.size)
        ys[todo] = quantile(u, p)
        todo = todo[(ys[todo] <= 0.0) | (ys[todo] >= 1.0)]
    return Sample(ys, source=f"mbuw(alpha={p.alpha}, beta={p.beta})")


def median(p: Params) -> float:
    """Closed-form median ``0.5**theta``; equals ``quantile(0.5, p)``."""
    return 0.5 ** p.theta


def describe(s: Sample) -> DescriptiveStats:
    """Descriptive statistics under spreadsheet-style sample conventions.

    * standard deviation with the n-1 denominator,
    * adjusted sample skewness  sqrt(n(n-1))/(n-2) * m3/m2**1.5,
    * adjusted sample kurtosis, reported non-excess,
      3 + (n+1)(n-1)/((n-2)(n-3)) * (m4/m2**2 - 3(n-1)/(n+1)),
    * quartiles by Hazen midpoint interpolation (h = n*p + 1/2),

    where m2, m3, m4 are the biased central moments.  These are the
    conventions the bundled reference tables were produced with.
    """
    x = s.values
    n = s.n
    if n < 4:
        raise ValueError(f"need at least 4 observations for quartiles and kurtosis, got {n}")
    mean = float(x.mean())
    d = x - mean
    m2 = float(np.mean(d ** 2))
    if m2 == 0.0:
        raise ValueError("zero variance: skewness and kurtosis are undefined")
    m3 = float(np.mean(d ** 3))
    m4 = float(np.mean(d ** 4))
    skew = math.sqrt(n * (n - 1)) / (n - 2) * m3 / m2 ** 1.5
    kurt = 3.0 + (n + 1) * (n - 1) / ((n - 2) * (n - 3)) * (m4 / m2 ** 2 - 3.0 * (n - 1) / (n + 1))
    q1, med, q3 = np.quantile(x, [0.25, 0.5, 0.75], method="hazen")
    return DescriptiveStats(
        min=float(x[0]),
        mean=mean,
        stdev=float(x.std(ddof=1)),
        skewness=skew,
        kurtosis=kurt,
        q1=float(q1),
        median=float(med),
        q3=float(q3),
        max=float(x[-1]),
    )
