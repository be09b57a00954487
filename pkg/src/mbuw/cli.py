"""Command-line interface.

Subcommands: ``fit`` (estimate parameters and report goodness of fit),
``describe`` (descriptive statistics), ``moments`` (sample PWMs, optionally
next to population values), ``plotdata`` (CSV tables for fit plots) and
``compare`` (Monte Carlo moment-order comparison).
"""

from __future__ import annotations

import argparse
import json
import sys

from .compare import CompareResult, compare_orders
from .distribution import Params, describe
from .fitting import FitReport, fit, significance
from .io import load_sample, write_plot_data
from .lm import LmConfig, LmError
from .moments import (
    PLOTTING_FORMS,
    MomentSpec,
    pop_pwm_general,
    sample_pwm_pair,
)
from .quadrature import ToleranceNotAchieved

FIT_JSON_KEYS = (
    "alpha_hat", "beta_hat", "theta_hat", "se_alpha", "se_beta", "theta_se",
    "sse", "iterations", "ks", "ks_pvalue", "ad", "cvm", "decision",
    "n", "order", "estimator",
)


def _add_input(parser):
    parser.add_argument("--input", required=True, help="path to a plain-text numeric data file")


def _add_format(parser):
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")


def _add_moment_spec(parser):
    parser.add_argument("--order", type=int, choices=(1, 2), default=1,
                        help="PWM pair order (default: 1)")
    parser.add_argument("--estimator", choices=("unbiased", "biased"), default="unbiased",
                        help="sample PWM estimator (default: unbiased)")
    parser.add_argument("--plotting-b", type=float, default=0.35,
                        help="plotting-position parameter b (default: 0.35)")
    parser.add_argument("--plotting-form", choices=PLOTTING_FORMS, default=PLOTTING_FORMS[0],
                        help="plotting-position formula (default: (i-b)/n)")


def _add_fit_options(parser):
    parser.add_argument("--init-alpha", type=float, default=1.0, help="starting alpha (default: 1)")
    parser.add_argument("--init-beta", type=float, default=1.0, help="starting beta (default: 1)")
    parser.add_argument("--lambda0", type=float, default=1e-3,
                        help="initial damping factor (default: 0.001)")
    parser.add_argument("--max-iters", type=int, default=500,
                        help="iteration cap (default: 500)")
    parser.add_argument("--level", type=float, default=0.05,
                        help="significance level for the KS decision (default: 0.05)")


def _moment_spec(args) -> MomentSpec:
    return MomentSpec(
        order=args.order,
        estimator=args.estimator,
        plotting_b=args.plotting_b,
        plotting_form=args.plotting_form,
    )


def _run_fit(args) -> FitReport:
    data = load_sample(args.input)
    cfg = LmConfig(lambda0=args.lambda0, max_iters=args.max_iters)
    return fit(
        data,
        _moment_spec(args),
        cfg=cfg,
        init=Params(args.init_alpha, args.init_beta),
        level=args.level,
    )


def _fit_json(report: FitReport) -> dict:
    doc = {
        "alpha_hat": report.alpha_hat,
        "beta_hat": report.beta_hat,
        "theta_hat": report.theta_hat,
        "se_alpha": report.se_alpha,
        "se_beta": report.se_beta,
        "theta_se": report.theta_se,
        "sse": report.sse,
        "iterations": report.iterations,
        "ks": report.gof.ks,
        "ks_pvalue": report.gof.ks_pvalue,
        "ad": report.gof.ad,
        "cvm": report.gof.cvm,
        "decision": report.gof.decision,
        "n": report.n,
        "order": report.spec.order,
        "estimator": report.spec.estimator,
    }
    assert tuple(doc) == FIT_JSON_KEYS
    return doc


def _print_fit_text(report: FitReport):
    sig_a, sig_b = significance(report)
    V = report.covariance
    print(f"n               {report.n}")
    print(f"order           {report.spec.order}")
    print(f"estimator       {report.spec.estimator}")
    print(f"sample pwms     a={report.sample_pwms.a:.6f}  b={report.sample_pwms.b:.6f}")
    print(f"alpha_hat       {report.alpha_hat:.6f}   (se {report.se_alpha:.6g}, sig {sig_a:.4g})")
    print(f"beta_hat        {report.beta_hat:.6f}   (se {report.se_beta:.6g}, sig {sig_b:.4g})")
    print(f"theta_hat       {report.theta_hat:.6f}   (se {report.theta_se:.6g})")
    print("note: only theta = alpha**beta is identified; the split is init-dependent")
    print(f"covariance      [[{V[0, 0]:.6g}, {V[0, 1]:.6g}], [{V[1, 0]:.6g}, {V[1, 1]:.6g}]]")
    print(f"sse             {report.sse:.6g}")
    print(f"iterations      {report.iterations} ({report.status})")
    print(f"KS              {report.gof.ks:.4f}")
    print(f"KS p-value      {report.gof.ks_pvalue:.4f}")
    print(f"AD              {report.gof.ad:.4f}")
    print(f"CvM             {report.gof.cvm:.4f}")
    print(f"decision        {report.gof.decision} (level {report.gof.level})")


def cmd_fit(args) -> int:
    report = _run_fit(args)
    if args.format == "json":
        print(json.dumps(_fit_json(report), indent=2))
    else:
        _print_fit_text(report)
    if args.plot_out:
        estimate = Params(report.alpha_hat, report.beta_hat)
        data = load_sample(args.input)
        ecdf_path, density_path = write_plot_data(data, estimate, args.plot_out)
        print(f"wrote {ecdf_path} and {density_path}", file=sys.stderr)
    return 0


def cmd_describe(args) -> int:
    stats = describe(load_sample(args.input))
    fields = ("min", "mean", "stdev", "skewness", "kurtosis", "q1", "median", "q3", "max")
    if args.format == "json":
        print(json.dumps({f: getattr(stats, f) for f in fields}, indent=2))
    else:
        for f in fields:
            print(f"{f:<10}{getattr(stats, f):.6g}")
    return 0


def cmd_moments(args) -> int:
    data = load_sample(args.input)
    spec = _moment_spec(args)
    pair = sample_pwm_pair(data, spec)
    doc = {
        "order": spec.order,
        "estimator": spec.estimator,
        "a": pair.a,
        "b": pair.b,
    }
    if args.theta is not None:
        doc["population_a"] = pop_pwm_general(0, spec.order, args.theta)
        doc["population_b"] = pop_pwm_general(spec.order, 0, args.theta)
        doc["theta"] = args.theta
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(f"sample M_1,0,{spec.order}   {pair.a:.6f}")
        print(f"sample M_1,{spec.order},0   {pair.b:.6f}")
        if args.theta is not None:
            print(f"population M_1,0,{spec.order} at theta={args.theta}: {doc['population_a']:.6f}")
            print(f"population M_1,{spec.order},0 at theta={args.theta}: {doc['population_b']:.6f}")
    return 0


def cmd_plotdata(args) -> int:
    report = _run_fit(args)
    data = load_sample(args.input)
    estimate = Params(report.alpha_hat, report.beta_hat)
    ecdf_path, density_path = write_plot_data(data, estimate, args.plot_out)
    print(f"wrote {ecdf_path}")
    print(f"wrote {density_path}")
    return 0


def cmd_compare(args) -> int:
    result: CompareResult = compare_orders(args.theta, args.n, args.replicates, args.seed)
    if args.format == "json":
        doc = {
            "true_theta": result.true_theta,
            "n": result.n,
            "replicates": result.replicates,
        }
        for name in ("order1", "order2"):
            stats = getattr(result, name)
            doc[name] = {
                "mean_theta_hat": stats.mean_theta_hat,
                "bias": stats.bias,
                "variance": stats.variance,
                "mse": stats.mse,
                "failure_count": stats.failure_count,
            }
        print(json.dumps(doc, indent=2))
    else:
        print(f"true theta {result.true_theta}, n {result.n}, replicates {result.replicates}")
        print(f"{'':10}{'mean':>12}{'bias':>12}{'variance':>12}{'mse':>12}{'failures':>10}")
        for name in ("order1", "order2"):
            s = getattr(result, name)
            print(f"{name:<10}{s.mean_theta_hat:>12.6f}{s.bias:>12.6f}"
                  f"{s.variance:>12.6f}{s.mse:>12.6f}{s.failure_count:>10}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mbuw",
        description="Fit the median-based unit Weibull distribution by probability-weighted moments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", help="estimate parameters and report goodness of fit")
    _add_input(p)
    _add_moment_spec(p)
    _add_fit_options(p)
    _add_format(p)
    p.add_argument("--plot-out", default=None, help="also write plot CSVs with this path prefix")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("describe", help="descriptive statistics of a data file")
    _add_input(p)
    _add_format(p)
    p.set_defaults(func=cmd_describe)

    p = sub.add_parser("moments", help="sample PWMs, optionally next to population values")
    _add_input(p)
    _add_moment_spec(p)
    p.add_argument("--theta", type=float, default=None,
                   help="also print the population PWM pair at this theta")
    _add_format(p)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("plotdata", help="write ECDF/CDF and density CSV tables for a fit")
    _add_input(p)
    _add_moment_spec(p)
    _add_fit_options(p)
    p.add_argument("--plot-out", required=True, help="output path prefix for the CSV tables")
    p.set_defaults(func=cmd_plotdata)

    p = sub.add_parser("compare", help="Monte Carlo comparison of moment orders")
    p.add_argument("--theta", type=float, required=True, help="generating theta")
    p.add_argument("--n", type=int, default=50, help="sample size per replicate (default: 50)")
    p.add_argument("--replicates", type=int, default=1000,
                   help="number of replicates (default: 1000)")
    p.add_argument("--seed", type=int, default=0, help="base seed (default: 0)")
    _add_format(p)
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, LmError, ToleranceNotAchieved, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
