"""Median-based unit Weibull distribution: PWM estimation and model checking."""

from .compare import CompareResult, OrderStats, compare_orders
from .distribution import (
    DescriptiveStats,
    Params,
    Sample,
    cdf,
    describe,
    median,
    pdf,
    quantile,
    sample,
)
from .fitting import FitReport, fit, jacobian, residuals, significance, theta_variance
from .gof import GofReport, ad_statistic, cvm_statistic, decide, evaluate, ks_pvalue, ks_statistic
from .io import load_sample, load_values, write_plot_data
from .lm import LmConfig, LmError, LmResult, solve
from .moments import (
    MomentSpec,
    PwmPair,
    convert_pwm,
    pop_m101,
    pop_m102,
    pop_m110,
    pop_m120,
    pop_mean,
    pop_pwm_general,
    sample_pwm_biased,
    sample_pwm_pair,
    sample_pwm_unbiased,
)
from .quadrature import QuadResult, ToleranceNotAchieved, integrate_pwm

__version__ = "0.1.0"

__all__ = [
    "CompareResult",
    "DescriptiveStats",
    "FitReport",
    "GofReport",
    "LmConfig",
    "LmError",
    "LmResult",
    "MomentSpec",
    "OrderStats",
    "Params",
    "PwmPair",
    "QuadResult",
    "Sample",
    "ToleranceNotAchieved",
    "ad_statistic",
    "cdf",
    "compare_orders",
    "convert_pwm",
    "cvm_statistic",
    "decide",
    "describe",
    "evaluate",
    "fit",
    "integrate_pwm",
    "jacobian",
    "ks_pvalue",
    "ks_statistic",
    "load_sample",
    "load_values",
    "median",
    "pdf",
    "pop_m101",
    "pop_m102",
    "pop_m110",
    "pop_m120",
    "pop_mean",
    "pop_pwm_general",
    "quantile",
    "residuals",
    "sample",
    "sample_pwm_biased",
    "sample_pwm_pair",
    "sample_pwm_unbiased",
    "significance",
    "solve",
    "theta_variance",
    "write_plot_data",
]
