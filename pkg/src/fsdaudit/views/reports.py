"""Render report tables, JSON documents and plot data."""

import json
import math
from decimal import ROUND_HALF_EVEN, Decimal

import numpy as np
import pandas as pd

from fsdaudit.constants import (
    BENFORD_ROW_LABEL,
    DIGITS,
    MAX_HISTOGRAM_BINS,
    MEASURE_DECIMALS,
    STATS_DECIMALS,
    TableFormat,
    Variant,
)
from fsdaudit.models import (
    BarChartRow,
    BenfordReference,
    FsdDistribution,
    HistogramSpec,
    PooledSample,
    ReportBundle,
    SectorAnalysis,
)
from fsdaudit.utils.errors import EmptyDistributionError, EmptySampleError, InputError, ReportError

NOT_AVAILABLE = "n/a"


def format_fixed(value: float | None, places: int = MEASURE_DECIMALS, missing: str = "") -> str:
    """Fixed-point rendering with round-half-to-even on the shortest decimal repr.

    >>> format_fixed(0.00125, 4)
    '0.0012'
    >>> format_fixed(None, 4, missing="n/a")
    'n/a'
    """
    if value is None or not math.isfinite(value):
        return missing
    quantum = Decimal(1).scaleb(-places)
    rendered = Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_EVEN)
    if rendered.is_zero():
        rendered = abs(rendered)
    return f"{rendered:f}"


def _emit(frame: pd.DataFrame, fmt: TableFormat) -> str:
    if fmt is TableFormat.TEXT:
        return frame.to_string(index=False) + "\n"
    return frame.to_csv(index=False, lineterminator="\n")


def _sector_rows(bundle: ReportBundle, variant: Variant) -> list[SectorAnalysis]:
    """Analyses of one variant in sector order; every bundle sector must be present."""
    results = bundle.variant(variant)
    missing = [s for s in bundle.sectors if s not in results]
    if missing:
        msg = f"{variant.value} results are missing sector(s): {', '.join(missing)}"
        raise ReportError(msg)
    return [results[s] for s in bundle.sectors]


def render_frequency_table(
    bundle: ReportBundle,
    variant: Variant,
    ref: BenfordReference,
    fmt: TableFormat = TableFormat.CSV,
) -> str:
    """First digit frequencies per sector in percent, closed by the Benford reference row.

    Args:
        bundle: Analysis results.
        variant: Raw or adapted.
        ref: The Benford reference for the last row.
        fmt: CSV or aligned text.

    Returns:
        str: The rendered table.

    Raises:
        ReportError: If a sector of the bundle is missing from `variant`.
    """
    columns = ["sector", "obs", *(str(d) for d in DIGITS)]
    rows = []
    for analysis in _sector_rows(bundle, variant):
        freqs = analysis.distribution.frequencies or (None,) * len(DIGITS)
        rows.append(
            [
                analysis.sector,
                str(analysis.distribution.total),
                *(format_fixed(None if f is None else f * 100) for f in freqs),
            ]
        )
    rows.append([BENFORD_ROW_LABEL, "", *(format_fixed(b * 100) for b in ref.b)])
    return _emit(pd.DataFrame(rows, columns=columns), fmt)


def render_conformance_table(
    bundle: ReportBundle, variant: Variant, fmt: TableFormat = TableFormat.CSV
) -> str:
    """Correlation, chi-square, M, d* and a* per sector.

    CSV carries n and the three verdict flags after the measures; text marks chi-square with
    ``**`` when significant at 1%. M is in percentage points.

    Raises:
        ReportError: If a sector of the bundle is missing from `variant`.
    """
    text = fmt is TableFormat.TEXT
    missing = NOT_AVAILABLE if text else ""
    rows = []
    for analysis in _sector_rows(bundle, variant):
        report = analysis.report
        if report is None:
            rows.append([analysis.sector, *([missing] * 5), "0", *([missing] * 3)])
            continue
        chi = report.chi_square
        rows.append(
            [
                report.sector,
                format_fixed(report.correlation, missing=missing),
                format_fixed(chi.statistic) + (chi.marker if text else ""),
                format_fixed(report.m_deviation),
                format_fixed(report.d_star),
                format_fixed(report.a_star),
                str(report.n),
                str(chi.significant_10).lower(),
                str(chi.significant_5).lower(),
                str(chi.significant_1).lower(),
            ]
        )
    columns = [
        "sector",
        "corr",
        "chi2",
        "M",
        "d_star",
        "a_star",
        "n",
        "significant_10",
        "significant_5",
        "significant_1",
    ]
    frame = pd.DataFrame(rows, columns=columns)
    if text:
        frame = frame[["sector", "corr", "chi2", "M", "d_star", "a_star", "n"]]
    return _emit(frame, fmt)


def render_descriptive_table(
    bundle: ReportBundle, variant: Variant, fmt: TableFormat = TableFormat.CSV
) -> str:
    """N, mean, standard deviation, min, max, spread and coefficient of variation per sector."""
    missing = NOT_AVAILABLE if fmt is TableFormat.TEXT else ""
    rows = []
    for analysis in _sector_rows(bundle, variant):
        stats = analysis.stats
        if stats is None:
            rows.append([analysis.sector, "0", *([missing] * 6)])
            continue
        rows.append(
            [
                analysis.sector,
                str(stats.n),
                *(
                    format_fixed(v, STATS_DECIMALS, missing)
                    for v in (
                        stats.mean,
                        stats.std_dev,
                        stats.min,
                        stats.max,
                        stats.spread,
                        stats.coefficient_of_variation,
                    )
                ),
            ]
        )
    columns = ["sector", "n", "mean", "std_dev", "min", "max", "spread", "cv"]
    return _emit(pd.DataFrame(rows, columns=columns), fmt)


def render_comparison_table(bundle: ReportBundle, fmt: TableFormat = TableFormat.CSV) -> str:
    """Raw against adapted conformance measures for sectors scored in both variants."""
    rows = bundle.comparison()
    columns = [
        "sector",
        "n_raw",
        "n_adapted",
        "chi2_raw",
        "chi2_adapted",
        "M_raw",
        "M_adapted",
        "d_star_raw",
        "d_star_adapted",
        "a_star_raw",
        "a_star_adapted",
    ]
    rendered = [
        [
            str(row[c]) if c in {"sector", "n_raw", "n_adapted"} else format_fixed(row[c])
            for c in columns
        ]
        for row in rows
    ]
    return _emit(pd.DataFrame(rendered, columns=columns), fmt)


def histogram_data(sample: PooledSample, bin_width: float = 1.0) -> HistogramSpec:
    """Bin a return sample into contiguous fixed-width bins.

    The first left edge is the multiple of `bin_width` at or below the sample minimum; a value
    on an edge belongs to the bin on its right.

    Args:
        sample: A non-empty pooled sample.
        bin_width: Width of each bin in percent.

    Returns:
        HistogramSpec: The filled histogram.

    Raises:
        EmptySampleError: If the sample is empty.
        ValueError: If `bin_width` is not positive.
        InputError: If `bin_width` would need more than `MAX_HISTOGRAM_BINS` bins to cover the sample.
    """
    if sample.n == 0:
        msg = f"cannot bin the empty sample of sector {sample.sector}"
        raise EmptySampleError(msg)
    if not bin_width > 0:
        msg = f"bin width must be positive, got {bin_width}"
        raise ValueError(msg)

    values = sample.as_array()
    scaled = (float(values.min()) / bin_width, float(values.max()) / bin_width)
    # Bin indices must stay exact integers in float64.
    if not all(math.isfinite(s) and abs(s) < 2**52 for s in scaled) or (
        math.floor(scaled[1]) - math.floor(scaled[0]) + 1 > MAX_HISTOGRAM_BINS
    ):
        msg = (
            f"{sample.sector}: bin width {bin_width} is too small for values in "
            f"[{values.min()}, {values.max()}] (at most {MAX_HISTOGRAM_BINS} bins); use a larger bin width"
        )
        raise InputError(msg)
    first = math.floor(scaled[0])
    index = np.floor(values / bin_width).astype(np.int64) - first
    index = np.clip(index, 0, None)
    counts = np.bincount(index)
    lo = first * bin_width
    bins = tuple(((first + i) * bin_width, int(c)) for i, c in enumerate(counts))
    return HistogramSpec(bin_width=bin_width, lo=lo, hi=lo + len(counts) * bin_width, bins=bins)


def bar_chart_data(dist: FsdDistribution, ref: BenfordReference) -> tuple[BarChartRow, ...]:
    """Observed and Benford percentages for digits 1..9.

    Raises:
        EmptyDistributionError: If the distribution is empty.
    """
    if dist.frequencies is None:
        msg = "bar chart needs a non-empty distribution"
        raise EmptyDistributionError(msg)
    return tuple(
        BarChartRow(digit=d, observed_percent=e * 100, benford_percent=b * 100)
        for d, e, b in zip(DIGITS, dist.frequencies, ref.b, strict=True)
    )


def render_histogram_csv(bundle: ReportBundle, variant: Variant) -> str:
    """Histogram bins of every sector as ``sector,left_edge,count`` rows."""
    rows = [
        [analysis.sector, format_fixed(edge), str(count)]
        for analysis in _sector_rows(bundle, variant)
        if analysis.histogram is not None
        for edge, count in analysis.histogram.bins
    ]
    return _emit(pd.DataFrame(rows, columns=["sector", "left_edge", "count"]), TableFormat.CSV)


def render_bar_chart_csv(bundle: ReportBundle, variant: Variant, ref: BenfordReference) -> str:
    """Bar chart rows of every non-empty sector as ``sector,digit,observed_percent,benford_percent``."""
    rows = [
        [
            analysis.sector,
            str(row.digit),
            format_fixed(row.observed_percent),
            format_fixed(row.benford_percent),
        ]
        for analysis in _sector_rows(bundle, variant)
        if not analysis.distribution.is_empty
        for row in bar_chart_data(analysis.distribution, ref)
    ]
    columns = ["sector", "digit", "observed_percent", "benford_percent"]
    return _emit(pd.DataFrame(rows, columns=columns), TableFormat.CSV)


def _json(document: object) -> str:
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_frequency_json(bundle: ReportBundle, variant: Variant, ref: BenfordReference) -> str:
    """First digit tallies per sector plus the Benford reference."""
    return _json(
        {
            "benford": {str(d): b for d, b in zip(DIGITS, ref.b, strict=True)},
            "sectors": {a.sector: a.distribution.to_dict() for a in _sector_rows(bundle, variant)},
        }
    )


def render_conformance_json(bundle: ReportBundle, variant: Variant) -> str:
    """Conformance reports of every scored sector."""
    return _json(
        [a.report.to_dict() for a in _sector_rows(bundle, variant) if a.report is not None]
    )


def render_screening_json(bundle: ReportBundle) -> str:
    """The screening summary."""
    return _json(bundle.screening.to_dict())
