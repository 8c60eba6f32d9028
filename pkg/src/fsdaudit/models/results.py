"""Result types produced by screening, conformance scoring and reporting."""

from dataclasses import dataclass, field
from pathlib import Path

from fsdaudit.constants import (
    CHI_SQUARE_CRITICAL_1,
    CHI_SQUARE_CRITICAL_5,
    CHI_SQUARE_CRITICAL_10,
    CHI_SQUARE_DF,
    DStarMode,
    ScreeningPolicy,
    Variant,
)

from .dates import ObservationDate
from .digits import FsdDistribution
from .panel import PanelSchema, SeriesKey


@dataclass(frozen=True)
class ScreeningConfig:
    """How repetition runs are detected and removed."""

    min_run: int = 4
    policy: ScreeningPolicy = ScreeningPolicy.DROP_RUN_TAIL

    def __post_init__(self) -> None:
        """Reject runs shorter than two."""
        if self.min_run < 2:  # noqa: PLR2004
            msg = f"min_run must be at least 2, got {self.min_run}"
            raise ValueError(msg)


@dataclass(frozen=True)
class RepetitionFlag:
    """A maximal run of identical consecutive index levels."""

    country: str
    sector: str
    start_date: ObservationDate
    run_length: int
    value: float
    dates: tuple[ObservationDate, ...] = ()

    @property
    def key(self) -> SeriesKey:
        """The (country, sector) key of the flagged series."""
        return (self.country, self.sector)

    def audit_line(self) -> str:
        """One human readable line for the audit log."""
        end = self.dates[-1] if self.dates else self.start_date
        return (
            f"{self.country}\t{self.sector}\t{self.start_date}..{end}\t"
            f"run_length={self.run_length}\tvalue={self.value!r}"
        )

    def to_dict(self) -> dict:
        """JSON-ready representation."""
        return {
            "country": self.country,
            "sector": self.sector,
            "start_date": str(self.start_date),
            "run_length": self.run_length,
            "value": self.value,
        }


@dataclass(frozen=True)
class ScreeningSummary:
    """What screening found and how many returns survived, per sector."""

    flags: tuple[RepetitionFlag, ...] = ()
    removed_observations: dict[SeriesKey, int] = field(default_factory=dict)
    n_before: dict[str, int] = field(default_factory=dict)
    n_after: dict[str, int] = field(default_factory=dict)

    def audit_log(self) -> str:
        """One line per flag, in flag order."""
        return "".join(f"{flag.audit_line()}\n" for flag in self.flags)

    def to_dict(self) -> dict:
        """JSON-ready representation."""
        return {
            "flags": [flag.to_dict() for flag in self.flags],
            "removed_observations": {
                f"{country}/{sector}": n
                for (country, sector), n in sorted(self.removed_observations.items())
            },
            "n_before": dict(sorted(self.n_before.items())),
            "n_after": dict(sorted(self.n_after.items())),
        }


@dataclass(frozen=True)
class ChiSquareResult:
    """Pearson chi-square statistic against Benford's law with fixed-threshold verdicts."""

    statistic: float
    df: int = CHI_SQUARE_DF

    @property
    def significant_10(self) -> bool:
        """Departure from Benford's law at the 10% level."""
        return self.statistic > CHI_SQUARE_CRITICAL_10

    @property
    def significant_5(self) -> bool:
        """Departure from Benford's law at the 5% level."""
        return self.statistic > CHI_SQUARE_CRITICAL_5

    @property
    def significant_1(self) -> bool:
        """Departure from Benford's law at the 1% level."""
        return self.statistic > CHI_SQUARE_CRITICAL_1

    @property
    def marker(self) -> str:
        """``**`` when significant at 1%."""
        return "**" if self.significant_1 else ""


@dataclass(frozen=True)
class DescriptiveStats:
    """Sample statistics of a pooled return sample, in percent."""

    n: int
    mean: float
    std_dev: float | None
    min: float
    max: float

    @property
    def spread(self) -> float:
        """``max - min``."""
        return self.max - self.min

    @property
    def coefficient_of_variation(self) -> float | None:
        """``std_dev / mean``, undefined for a zero mean or a single value."""
        if self.std_dev is None or self.mean == 0:
            return None
        return self.std_dev / self.mean


@dataclass(frozen=True)
class ConformanceReport:
    """Every conformance measure for one sector.

    Attributes:
        m_deviation: Largest ``|e_d - b_d|`` in percentage points.
        perfect_conformance: Set when the max-deviation normalized d* met M = 0.
    """

    sector: str
    n: int
    chi_square: ChiSquareResult
    correlation: float | None
    m_deviation: float
    d_star: float
    a_star: float
    dstar_mode: DStarMode = DStarMode.TABLE_CONSISTENT
    perfect_conformance: bool = False

    def to_dict(self) -> dict:
        """JSON-ready representation, in the column order of the conformance table."""
        return {
            "sector": self.sector,
            "n": self.n,
            "corr": self.correlation,
            "chi2": self.chi_square.statistic,
            "M": self.m_deviation,
            "d_star": self.d_star,
            "a_star": self.a_star,
            "dstar_mode": self.dstar_mode.value,
            "significant_10": self.chi_square.significant_10,
            "significant_5": self.chi_square.significant_5,
            "significant_1": self.chi_square.significant_1,
        }


@dataclass(frozen=True)
class HistogramSpec:
    """Fixed-width histogram of a return sample.

    Attributes:
        bin_width: Width of every bin, in percent.
        lo: Left edge of the first bin.
        hi: Right edge of the last bin.
        bins: ``(left_edge, count)`` for each contiguous bin.
    """

    bin_width: float
    lo: float
    hi: float
    bins: tuple[tuple[float, int], ...]

    @property
    def total(self) -> int:
        """Sum of the bin counts."""
        return sum(count for _, count in self.bins)


@dataclass(frozen=True)
class BarChartRow:
    """Observed and expected frequency of one digit, in percent."""

    digit: int
    observed_percent: float
    benford_percent: float


@dataclass(frozen=True)
class SectorAnalysis:
    """Everything computed for one sector of one panel variant.

    `stats` is ``None`` when the sector has no returns; `report` is ``None`` when none of the
    returns has a first significant digit.
    """

    sector: str
    sample_size: int
    stats: DescriptiveStats | None
    distribution: FsdDistribution
    report: ConformanceReport | None
    histogram: HistogramSpec | None = None


@dataclass(frozen=True)
class ReportBundle:
    """Per sector results for the raw and adapted panels plus the screening summary."""

    raw: dict[str, SectorAnalysis] = field(default_factory=dict)
    adapted: dict[str, SectorAnalysis] = field(default_factory=dict)
    screening: ScreeningSummary = field(default_factory=ScreeningSummary)

    def variant(self, variant: Variant) -> dict[str, SectorAnalysis]:
        """Sector results of one concrete variant."""
        if variant is Variant.BOTH:
            msg = "pick raw or adapted"
            raise ValueError(msg)
        return self.raw if variant is Variant.RAW else self.adapted

    @property
    def sectors(self) -> tuple[str, ...]:
        """Every sector in either variant, sorted."""
        return tuple(sorted(set(self.raw) | set(self.adapted)))

    def comparison(self) -> list[dict]:
        """Raw versus adapted measures per sector, where both were scored."""
        rows = []
        for sector in self.sectors:
            before = self.raw.get(sector)
            after = self.adapted.get(sector)
            if not before or not after or not before.report or not after.report:
                continue
            rows.append(
                {
                    "sector": sector,
                    "n_raw": before.report.n,
                    "n_adapted": after.report.n,
                    "chi2_raw": before.report.chi_square.statistic,
                    "chi2_adapted": after.report.chi_square.statistic,
                    "M_raw": before.report.m_deviation,
                    "M_adapted": after.report.m_deviation,
                    "d_star_raw": before.report.d_star,
                    "d_star_adapted": after.report.d_star,
                    "a_star_raw": before.report.a_star,
                    "a_star_adapted": after.report.a_star,
                }
            )
        return rows


@dataclass(frozen=True)
class RunConfig:
    """Validated settings for one CLI run."""

    inputs: tuple[Path, ...]
    schema: PanelSchema
    screening: ScreeningConfig
    dstar_mode: DStarMode
    output_dir: Path
    sectors: tuple[str, ...]
    variant: Variant
    workers: int
    bin_width: float
