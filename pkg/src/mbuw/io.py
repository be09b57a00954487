"""Data-file ingestion and plot-data emission.

Input files hold plain numerics separated by newlines, commas or other
whitespace; ragged rows and empty cells are tolerated.  Plot output is
CSV only (an ECDF-versus-fitted-CDF table and a density-curve table) so
any plotting tool can render the figures.
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .distribution import Params, Sample, cdf, pdf

__all__ = ["load_values", "load_sample", "write_plot_data", "DENSITY_GRID_POINTS"]

DENSITY_GRID_POINTS = 256


def load_values(path) -> np.ndarray:
    """Parse every numeric token in the file, in reading order.

    Raises ValueError naming the line and token on the first unparsable
    token; empty lines and empty (blank-cell) tokens are skipped.
    """
    text = Path(path).read_text(encoding="utf-8")
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        for token in line.replace(",", " ").split():
            try:
                values.append(float(token))
            except ValueError:
                raise ValueError(f"{path}: line {lineno}: cannot parse {token!r} as a number") from None
    return np.asarray(values, dtype=float)


def load_sample(path) -> Sample:
    """Load a file into a validated Sample, reporting offending values."""
    values = load_values(path)
    if values.size == 0:
        raise ValueError(f"{path}: no numeric values found")
    bad = values[(values <= 0.0) | (values >= 1.0) | ~np.isfinite(values)]
    if bad.size:
        raise ValueError(
            f"{path}: values must lie strictly inside (0, 1); "
            f"offending values: {', '.join(str(v) for v in bad)}"
        )
    return Sample(values, source=str(path))


def write_plot_data(data: Sample, params: Params, out_prefix) -> tuple[Path, Path]:
    """Write the two plot tables next to ``out_prefix``.

    ``<prefix>_ecdf.csv`` has one row per sorted observation with the lower
    and upper ECDF step values and the fitted CDF; ``<prefix>_density.csv``
    has the fitted density over a uniform interior grid.
    Returns the two paths.
    """
    prefix = Path(out_prefix)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    ecdf_path = prefix.with_name(prefix.name + "_ecdf.csv")
    density_path = prefix.with_name(prefix.name + "_density.csv")

    n = data.n
    fitted = cdf(data.values, params)
    with open(ecdf_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["y", "ecdf_lo", "ecdf_hi", "fitted_cdf"])
        for i, (y, F) in enumerate(zip(data.values, fitted), start=1):
            writer.writerow([repr(float(y)), repr((i - 1) / n), repr(i / n), repr(float(F))])

    grid = np.linspace(0.0, 1.0, DENSITY_GRID_POINTS + 2)[1:-1]
    dens = pdf(grid, params)
    with open(density_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["y_grid", "fitted_pdf"])
        for y, f in zip(grid, dens):
            writer.writerow([repr(float(y)), repr(float(f))])

    return ecdf_path, density_path
