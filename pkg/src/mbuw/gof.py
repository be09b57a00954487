"""Goodness-of-fit statistics against a fully specified fitted CDF.

Kolmogorov-Smirnov, Anderson-Darling and Cramer-von Mises in their standard
order-statistics forms, plus the Kolmogorov tail probability with the
Stephens small-sample rescaling ``(sqrt(n) + 0.12 + 0.11/sqrt(n)) * D``.
No adjustment is made for parameters having been estimated from the data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distribution import Sample

__all__ = [
    "GofReport",
    "ks_statistic",
    "ks_pvalue",
    "ad_statistic",
    "cvm_statistic",
    "decide",
    "evaluate",
]


@dataclass(frozen=True)
class GofReport:
    ks: float
    ks_pvalue: float
    ad: float
    cvm: float
    decision: str
    level: float


def _fitted_probs(s: Sample, fitted_cdf) -> np.ndarray:
    F = np.asarray(fitted_cdf(s.values), dtype=float)
    if F.shape != s.values.shape or not np.all(np.isfinite(F)):
        raise ValueError("fitted_cdf must return a finite probability per observation")
    return F


def ks_statistic(s: Sample, fitted_cdf) -> float:
    """Two-sided sup distance between the ECDF steps and the fitted CDF:
    ``D = max_i max(i/n - F(y_i), F(y_i) - (i-1)/n)``."""
    F = _fitted_probs(s, fitted_cdf)
    n = s.n
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - F), np.max(F - (i - 1) / n)))


def ks_pvalue(d: float, n: int, modified: bool = True) -> float:
    """Kolmogorov tail probability ``2 sum_k (-1)^(k-1) exp(-2 k^2 lam^2)``.

    With ``modified`` (default) the statistic is rescaled by
    ``sqrt(n) + 0.12 + 0.11/sqrt(n)``, which is accurate down to small n;
    otherwise the plain asymptotic ``lam = sqrt(n)*d`` is used.  The series
    is truncated once terms drop below 1e-12.
    """
    if not 0.0 <= d <= 1.0:
        raise ValueError(f"statistic must lie in [0, 1], got {d}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    rn = math.sqrt(n)
    lam = ((rn + 0.12 + 0.11 / rn) if modified else rn) * d
    if lam <= 0.0:
        return 1.0
    total = 0.0
    for k in range(1, 1000):
        term = 2.0 * (-1.0) ** (k - 1) * math.exp(-2.0 * k * k * lam * lam)
        total += term
        if abs(term) < 1e-12:
            break
    return min(max(total, 0.0), 1.0)


def ad_statistic(s: Sample, fitted_cdf) -> float:
    """Anderson-Darling statistic
    ``A^2 = -n - (1/n) sum (2i-1)(ln F(y_i) + ln(1 - F(y_{n+1-i})))``."""
    F = _fitted_probs(s, fitted_cdf)
    if np.any(F <= 0.0) or np.any(F >= 1.0):
        raise ValueError("fitted CDF hits 0 or 1 at an observation; log terms diverge")
    n = s.n
    i = np.arange(1, n + 1)
    return float(-n - np.mean((2 * i - 1) * (np.log(F) + np.log(1.0 - F[::-1]))))


def cvm_statistic(s: Sample, fitted_cdf) -> float:
    """Cramer-von Mises statistic
    ``W^2 = 1/(12n) + sum (F(y_i) - (2i-1)/(2n))^2``."""
    F = _fitted_probs(s, fitted_cdf)
    n = s.n
    i = np.arange(1, n + 1)
    return float(1.0 / (12.0 * n) + np.sum((F - (2 * i - 1) / (2.0 * n)) ** 2))


def decide(p: float, level: float) -> str:
    """``"reject"`` iff p < level, else ``"fail_to_reject"``."""
    if not 0.0 <= p <= 1.0 or not 0.0 <= level <= 1.0:
        raise ValueError(f"p and level must lie in [0, 1], got p={p}, level={level}")
    return "reject" if p < level else "fail_to_reject"


def evaluate(s: Sample, fitted_cdf, level: float = 0.05) -> GofReport:
    """All three statistics plus the KS decision at ``level``."""
    ks = ks_statistic(s, fitted_cdf)
    p = ks_pvalue(ks, s.n)
    return GofReport(
        ks=ks,
        ks_pvalue=p,
        ad=ad_statistic(s, fitted_cdf),
        cvm=cvm_statistic(s, fitted_cdf),
        decision=decide(p, level),
        level=level,
    )
