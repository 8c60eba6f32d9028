"""Score first digit distributions against Benford's law."""

import functools
import math
from collections.abc import Sequence

import numpy as np
from loguru import logger

from fsdaudit.constants import DIGITS, DStarMode
from fsdaudit.models import (
    BenfordReference,
    ChiSquareResult,
    ConformanceReport,
    DescriptiveStats,
    FsdDistribution,
    PooledSample,
)

from .errors import EmptyDistributionError, EmptySampleError


@functools.cache
def benford_reference() -> BenfordReference:
    """Benford's first digit probabilities ``b_d = log10(1 + 1/d)`` and derived constants.

    >>> round(benford_reference().b[0], 6)
    0.30103
    """
    digits = np.asarray(DIGITS, dtype=float)
    b = np.log10(1.0 + 1.0 / digits)
    farthest = np.zeros(len(DIGITS))
    farthest[-1] = 1.0
    return BenfordReference(
        b=tuple(float(x) for x in b),
        mean_digit=float(np.dot(digits, b)),
        d_star_normalizer=float(np.sum((farthest - b) ** 2)),
    )


def _frequencies(dist: FsdDistribution) -> np.ndarray:
    frequencies = dist.frequencies_array()
    if frequencies is None:
        msg = f"distribution is empty ({dist.excluded} values without a first significant digit)"
        raise EmptyDistributionError(msg)
    return frequencies


def chi_square(dist: FsdDistribution, ref: BenfordReference) -> ChiSquareResult:
    """Pearson's chi-square on the nine digit counts, ``sum((O - E)^2 / E)`` with ``E = N * b``.

    Args:
        dist: Observed tally with N > 0.
        ref: The Benford reference.

    Returns:
        ChiSquareResult: Statistic with 8 degrees of freedom and verdicts at 10%, 5% and 1%.

    Raises:
        EmptyDistributionError: If N = 0.
    """
    if dist.is_empty:
        msg = "chi-square needs at least one value with a first significant digit"
        raise EmptyDistributionError(msg)
    observed = dist.counts_array()
    expected = dist.total * ref.as_array()
    return ChiSquareResult(statistic=float(np.sum((observed - expected) ** 2 / expected)))


def correlate(x: Sequence[float] | np.ndarray, y: Sequence[float] | np.ndarray) -> float | None:
    """Pearson product-moment correlation of two equal-length vectors.

    Returns:
        float | None: The coefficient, or ``None`` when either vector has zero variance.
    """
    xs = np.asarray(x, dtype=float)
    ys = np.asarray(y, dtype=float)
    dx = xs - xs.mean()
    dy = ys - ys.mean()
    denominator = math.sqrt(float(np.dot(dx, dx)) * float(np.dot(dy, dy)))
    if denominator == 0:
        return None
    return float(np.clip(np.dot(dx, dy) / denominator, -1.0, 1.0))


def pearson_correlation(dist: FsdDistribution, ref: BenfordReference) -> float | None:
    """Correlation between the observed frequencies and Benford's probabilities.

    Returns:
        float | None: The coefficient, or ``None`` when every observed frequency is equal.

    Raises:
        EmptyDistributionError: If N = 0.
    """
    corr = correlate(_frequencies(dist), ref.as_array())
    if corr is None:
        logger.warning("Correlation is undefined: all observed digit frequencies are equal")
    return corr


def max_deviation(dist: FsdDistribution, ref: BenfordReference) -> float:
    """``M = max_d |e_d - b_d|`` in percentage points.

    Raises:
        EmptyDistributionError: If N = 0.
    """
    return float(np.max(np.abs(_frequencies(dist) - ref.as_array()))) * 100.0


def d_star(
    dist: FsdDistribution,
    ref: BenfordReference,
    mode: DStarMode = DStarMode.TABLE_CONSISTENT,
) -> float:
    """Normalized Euclidean distance between observed frequencies and Benford's law.

    The numerator is ``sqrt(sum((e_d - b_d)^2))`` with both vectors as fractions. In
    table-consistent mode it is divided by ``ref.d_star_normalizer``; in max-deviation mode by
    M (as a fraction), where M = 0 gives 0.

    Raises:
        EmptyDistributionError: If N = 0.
    """
    deviations = _frequencies(dist) - ref.as_array()
    distance = float(np.sqrt(np.sum(deviations**2)))
    if mode is DStarMode.TABLE_CONSISTENT:
        return distance / ref.d_star_normalizer

    m = float(np.max(np.abs(deviations)))
    if m == 0:
        logger.warning("d* with max-deviation normalizer: M = 0, reporting perfect conformance")
        return 0.0
    return distance / m


def a_star(dist: FsdDistribution, ref: BenfordReference) -> float:
    """``|m_e - m_b| / (9 - m_b)``, the mean digit distance scaled to [0, 1].

    Raises:
        EmptyDistributionError: If N = 0.
    """
    mean_digit = float(np.dot(DIGITS, _frequencies(dist)))
    return abs(mean_digit - ref.mean_digit) / ref.max_mean_difference


def descriptive_stats(sample: PooledSample) -> DescriptiveStats:
    """Count, mean, sample standard deviation (n - 1), min and max.

    The standard deviation is ``None`` for a single value.

    Raises:
        EmptySampleError: If the sample holds no values.
    """
    if sample.n == 0:
        msg = f"sector {sample.sector} has no returns"
        raise EmptySampleError(msg)
    values = sample.as_array()
    return DescriptiveStats(
        n=sample.n,
        mean=float(np.mean(values)),
        std_dev=float(np.std(values, ddof=1)) if sample.n > 1 else None,
        min=float(values.min()),
        max=float(values.max()),
    )


def conformance_report(
    dist: FsdDistribution,
    ref: BenfordReference,
    stats: DescriptiveStats | None = None,
    *,
    sector: str = "",
    mode: DStarMode = DStarMode.TABLE_CONSISTENT,
) -> ConformanceReport:
    """Bundle chi-square, correlation, M, d* and a* for one sector.

    Args:
        dist: Observed tally with N > 0.
        ref: The Benford reference.
        stats: Descriptive statistics of the underlying sample, logged alongside the scores.
        sector: Sector identifier for the report.
        mode: Normalizer for d*.

    Returns:
        ConformanceReport: The scores.

    Raises:
        EmptyDistributionError: If N = 0.
    """
    chi = chi_square(dist, ref)
    m = max_deviation(dist, ref)
    report = ConformanceReport(
        sector=sector,
        n=dist.total,
        chi_square=chi,
        correlation=pearson_correlation(dist, ref),
        m_deviation=m,
        d_star=d_star(dist, ref, mode),
        a_star=a_star(dist, ref),
        dstar_mode=mode,
        perfect_conformance=mode is DStarMode.MAX_DEVIATION and m == 0,
    )
    logger.debug(
        f"{sector or 'sample'}: N={report.n} chi2={chi.statistic:.4f}{chi.marker} "
        f"M={m:.4f} d*={report.d_star:.5f} a*={report.a_star:.5f}"
        + (f" mean={stats.mean:.6f}" if stats else "")
    )
    return report
