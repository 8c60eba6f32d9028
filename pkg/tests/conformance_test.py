# type: ignore
"""Tests for utils/conformance.py."""

import math

import numpy as np
import pytest
from scipy import stats

from fsdaudit.constants import DStarMode
from fsdaudit.models import ChiSquareResult, FsdDistribution, PooledSample
from fsdaudit.utils.conformance import (
    a_star,
    benford_reference,
    chi_square,
    conformance_report,
    correlate,
    d_star,
    descriptive_stats,
    max_deviation,
    pearson_correlation,
)
from fsdaudit.utils.errors import EmptyDistributionError, EmptySampleError
from tests.helpers import PUBLISHED_FREQUENCIES, PUBLISHED_MEASURES

MATS_COUNTS_1080 = (250, 198, 194, 143, 93, 60, 53, 48, 41)
ALL_NINES = FsdDistribution(counts=(0, 0, 0, 0, 0, 0, 0, 0, 1))


def test_benford_reference():
    """Test the reference probabilities and derived constants."""
    ref = benford_reference()

    assert sum(ref.b) == pytest.approx(1.0, abs=1e-12)
    assert [round(b * 100, 4) for b in ref.b] == [
        30.1030,
        17.6091,
        12.4939,
        9.6910,
        7.9181,
        6.6947,
        5.7992,
        5.1153,
        4.5757,
    ]
    assert ref.mean_digit == pytest.approx(3.440237, abs=1e-6)
    assert ref.d_star_normalizer == pytest.approx(1.0739384, abs=1e-7)
    assert ref.max_mean_difference == pytest.approx(9 - ref.mean_digit)
    assert benford_reference() is ref


@pytest.mark.parametrize("sector", sorted(PUBLISHED_FREQUENCIES))
def test_published_frequencies_reproduce_published_measures(sector):
    """Test correlation, M, d* and a* of each published frequency row."""
    # GIVEN a published frequency row
    total, percentages = PUBLISHED_FREQUENCIES[sector]
    distribution = FsdDistribution.from_frequencies(percentages, total)
    corr, m, dstar, astar = PUBLISHED_MEASURES[sector]

    # WHEN scoring it
    report = conformance_report(distribution, benford_reference(), sector=sector)

    # THEN the published measures come back
    assert report.sector == sector
    assert report.n == total
    assert report.correlation == pytest.approx(corr, abs=5e-4)
    assert report.m_deviation == pytest.approx(m, abs=5e-4)
    assert report.d_star == pytest.approx(dstar, abs=5e-4)
    assert report.a_star == pytest.approx(astar, abs=5e-4)


def test_chi_square_matches_independent_oracle():
    """Test chi-square against scipy on the MATS counts."""
    # GIVEN MATS-shaped counts at N = 1080
    distribution = FsdDistribution(counts=MATS_COUNTS_1080)
    ref = benford_reference()

    # WHEN computing chi-square
    result = chi_square(distribution, ref)

    # THEN it agrees with scipy and flags a departure at 1%
    expected = stats.chisquare(MATS_COUNTS_1080, f_exp=np.asarray(ref.b) * 1080).statistic
    assert result.statistic == pytest.approx(expected, rel=1e-12)
    assert result.statistic == pytest.approx(64.187067, abs=1e-5)
    assert result.df == 8
    assert result.significant_1
    # The published MATS statistic (40.5876) is not reachable from the published frequencies.
    assert abs(result.statistic - 40.5876) > 10


def test_chi_square_all_mass_on_one():
    """Test a sample of 100 values all led by 1."""
    result = chi_square(FsdDistribution(counts=(100, 0, 0, 0, 0, 0, 0, 0, 0)), benford_reference())

    assert result.statistic == pytest.approx(232.19, abs=0.01)
    assert result.significant_1


@pytest.mark.parametrize(
    ("statistic", "expected"),
    [
        # (significant_10, significant_5, significant_1)
        (0.0, (False, False, False)),
        (13.35, (False, False, False)),
        (13.36, (False, False, False)),
        (13.37, (True, False, False)),
        (15.50, (True, False, False)),
        (15.51, (True, False, False)),
        (15.52, (True, True, False)),
        (20.08, (True, True, False)),
        (20.09, (True, True, False)),
        (20.10, (True, True, True)),
    ],
)
def test_chi_square_verdicts(statistic, expected):
    """Test verdicts flip strictly above each critical value."""
    result = ChiSquareResult(statistic)

    assert (result.significant_10, result.significant_5, result.significant_1) == expected
    assert result.marker == ("**" if expected[2] else "")


def test_chi_square_critical_values_match_distribution():
    """Test the fixed critical values against the chi-square quantiles."""
    for level, critical in ((0.10, 13.36), (0.05, 15.51), (0.01, 20.09)):
        assert stats.chi2.ppf(1 - level, 8) == pytest.approx(critical, abs=0.01)


def test_correlation_matches_independent_oracle():
    """Test correlation against scipy."""
    distribution = FsdDistribution(counts=MATS_COUNTS_1080)
    ref = benford_reference()

    expected = stats.pearsonr(distribution.frequencies, ref.b).statistic

    assert pearson_correlation(distribution, ref) == pytest.approx(expected, abs=1e-12)
    assert pearson_correlation(distribution, ref) == pytest.approx(0.908773, abs=1e-6)


def test_correlation_undefined_for_flat_frequencies():
    """Test equal frequencies have no correlation but still score otherwise."""
    distribution = FsdDistribution(counts=(3,) * 9)

    report = conformance_report(distribution, benford_reference())

    assert report.correlation is None
    assert report.m_deviation > 0
    assert correlate([1, 2, 3], [5, 5, 5]) is None
    assert correlate([1, 2, 3], [2, 4, 6]) == pytest.approx(1.0)
    assert correlate([1, 2, 3], [3, 2, 1]) == pytest.approx(-1.0)


def test_measures_on_mats_counts():
    """Test M, d* and a* of the MATS counts."""
    distribution = FsdDistribution(counts=MATS_COUNTS_1080)
    ref = benford_reference()

    assert max_deviation(distribution, ref) == pytest.approx(6.954851, abs=1e-6)
    assert d_star(distribution, ref) == pytest.approx(0.090775, abs=1e-6)
    assert a_star(distribution, ref) == pytest.approx(0.005586, abs=1e-6)


def test_d_star_maximum():
    """Test all mass on digit 9 attains the largest d*."""
    ref = benford_reference()

    dstar = d_star(ALL_NINES, ref)

    assert dstar == pytest.approx(1 / math.sqrt(ref.d_star_normalizer), abs=1e-12)
    assert dstar == pytest.approx(0.964962, abs=1e-6)
    assert dstar <= 0.96505
    assert a_star(ALL_NINES, ref) == pytest.approx(1.0, abs=1e-12)


def test_d_star_max_deviation_mode():
    """Test the max-deviation normalizer and its perfect conformance case."""
    ref = benford_reference()
    distribution = FsdDistribution(counts=MATS_COUNTS_1080)
    m = max_deviation(distribution, ref) / 100
    distance = math.sqrt(sum((e - b) ** 2 for e, b in zip(distribution.frequencies, ref.b)))

    assert d_star(distribution, ref, DStarMode.MAX_DEVIATION) == pytest.approx(distance / m)

    # GIVEN frequencies exactly equal to Benford's law
    perfect = FsdDistribution.from_frequencies(ref.b, 1000)

    # WHEN scoring with the max-deviation normalizer
    report = conformance_report(perfect, ref, mode=DStarMode.MAX_DEVIATION)

    # THEN d* is 0 and the report says why
    assert report.m_deviation == 0
    assert report.d_star == 0
    assert report.perfect_conformance
    assert report.a_star == pytest.approx(0, abs=1e-12)
    assert report.correlation == pytest.approx(1.0)
    assert not conformance_report(perfect, ref).perfect_conformance


@pytest.mark.parametrize("measure", [chi_square, pearson_correlation, max_deviation, d_star, a_star])
def test_measures_reject_empty_distribution(measure):
    """Test every measure raises on an empty distribution."""
    with pytest.raises(EmptyDistributionError):
        measure(FsdDistribution(counts=(0,) * 9, excluded=3), benford_reference())


def test_descriptive_stats():
    """Test sample statistics with the n - 1 standard deviation."""
    result = descriptive_stats(PooledSample("X", (4.0, 1.0, 3.0, 2.0)))

    assert result.n == 4
    assert result.mean == pytest.approx(2.5)
    assert result.std_dev == pytest.approx(math.sqrt(5 / 3))
    assert (result.min, result.max) == (1.0, 4.0)
    assert result.spread == pytest.approx(3.0)
    assert result.coefficient_of_variation == pytest.approx(math.sqrt(5 / 3) / 2.5)


def test_descriptive_stats_edge_cases():
    """Test a single value has no standard deviation and an empty sample raises."""
    single = descriptive_stats(PooledSample("X", (7.0,)))

    assert single.std_dev is None
    assert single.coefficient_of_variation is None
    assert single.spread == 0
    with pytest.raises(EmptySampleError):
        descriptive_stats(PooledSample("X", ()))


def test_conformance_report_to_dict():
    """Test the JSON representation of a report."""
    report = conformance_report(
        FsdDistribution(counts=MATS_COUNTS_1080), benford_reference(), sector="MATS"
    )

    document = report.to_dict()

    assert document["sector"] == "MATS"
    assert document["n"] == 1080
    assert document["dstar_mode"] == "table-consistent"
    assert document["significant_1"] is True
    assert document["chi2"] == report.chi_square.statistic


def _seeded_counts(seed: int, draws: int):
    """Yield `draws` random nine-digit count vectors with N >= 1."""
    rng = np.random.default_rng(seed)
    for _ in range(draws):
        weights = rng.dirichlet(np.ones(9))
        yield tuple(int(c) for c in rng.multinomial(int(rng.integers(1, 3000)), weights))


def test_chi_square_matches_digit_by_digit_sum():
    """Test chi-square against a plain per-digit sum over many count vectors."""
    ref = benford_reference()

    for counts in _seeded_counts(seed=31, draws=100):
        # GIVEN a random tally
        total = sum(counts)

        # WHEN summing (O - E)^2 / E one digit at a time
        expected = 0.0
        for d, observed in enumerate(counts, start=1):
            e = total * math.log10(1 + 1 / d)
            expected += (observed - e) ** 2 / e

        # THEN the vectorized statistic agrees
        assert chi_square(FsdDistribution(counts=counts), ref).statistic == pytest.approx(expected, rel=1e-9)


@pytest.mark.parametrize("k", [2, 3, 10, 250])
def test_chi_square_scales_with_counts(k):
    """Test multiplying every count by k multiplies chi-square by k."""
    ref = benford_reference()

    for counts in _seeded_counts(seed=32 + k, draws=20):
        base = chi_square(FsdDistribution(counts=counts), ref).statistic
        scaled = chi_square(FsdDistribution(counts=tuple(k * c for c in counts)), ref).statistic

        assert scaled == pytest.approx(k * base, rel=1e-12)


@pytest.mark.parametrize(("scale", "shift"), [(2.0, 0.0), (0.5, -0.1), (100.0, 7.0), (-3.0, 1.0)])
def test_correlation_is_affine_invariant(scale, shift):
    """Test correlation is unchanged by a positive affine map and flips sign under a negative one."""
    ref = benford_reference()
    frequencies = FsdDistribution(counts=MATS_COUNTS_1080).frequencies_array()

    corr = correlate(frequencies, ref.b)
    moved = correlate(scale * frequencies + shift, ref.b)

    assert moved == pytest.approx(math.copysign(corr, scale), abs=1e-12)


def test_a_star_zero_without_benford():
    """Test a* can vanish while the frequencies still differ from Benford's law."""
    # GIVEN Benford's frequencies moved along a direction with zero sum and zero mean digit
    ref = benford_reference()
    frequencies = np.asarray(ref.b) + 0.02 * np.array([1, -2, 1, 0, 0, 0, 0, 0, 0])
    distribution = FsdDistribution.from_frequencies(frequencies, 1000)

    # WHEN scoring it
    # THEN the mean digit matches but the distance does not vanish
    assert a_star(distribution, ref) == pytest.approx(0.0, abs=1e-12)
    assert d_star(distribution, ref) > 0.01
    assert max_deviation(distribution, ref) == pytest.approx(4.0, abs=1e-9)
