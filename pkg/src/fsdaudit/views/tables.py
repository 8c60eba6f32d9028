"""Rich tables for the console summary."""

from rich import box
from rich.table import Table

from fsdaudit.constants import DIGITS, Variant
from fsdaudit.models import FsdDistribution, RepetitionFlag, SectorAnalysis

from .reports import NOT_AVAILABLE, format_fixed


def conformance_table(analyses: list[SectorAnalysis], variant: Variant) -> Table:
    """Conformance measures per sector, chi-square marked ``**`` when significant at 1%.

    Args:
        analyses (list[SectorAnalysis]): Sector results in display order.
        variant (Variant): Raw or adapted, used in the title.

    Returns:
        Table: Conformance table.
    """
    table = Table(
        box=box.SIMPLE,
        show_header=True,
        header_style="bold",
        min_width=40,
        title=f"Benford conformance ({variant.value})",
    )
    for column in ("Sector", "N", "Corr.", "χ²", "M (pp)", "d*", "a*"):
        table.add_column(column, justify="left" if column == "Sector" else "right")

    for analysis in analyses:
        report = analysis.report
        if report is None:
            table.add_row(analysis.sector, "0", *([f"[dim]{NOT_AVAILABLE}[/]"] * 5))
            continue
        chi = report.chi_square
        table.add_row(
            report.sector,
            str(report.n),
            format_fixed(report.correlation, missing=NOT_AVAILABLE),
            f"[bold red]{format_fixed(chi.statistic)}{chi.marker}[/]"
            if chi.significant_1
            else format_fixed(chi.statistic),
            format_fixed(report.m_deviation),
            format_fixed(report.d_star),
            format_fixed(report.a_star),
        )

    return table


def frequency_table(distribution: FsdDistribution, benford: tuple[float, ...]) -> Table:
    """Observed against expected first digit frequencies of one sample.

    Args:
        distribution (FsdDistribution): The observed tally.
        benford (tuple[float, ...]): Benford probabilities.

    Returns:
        Table: One row per digit.
    """
    table = Table(
        "Digit",
        "Count",
        "Observed %",
        "Benford %",
        box=box.SIMPLE,
        header_style="bold",
        title=f"First significant digits (N={distribution.total}, excluded={distribution.excluded})",
    )
    freqs = distribution.frequencies or (None,) * len(DIGITS)
    for d, count, e, b in zip(DIGITS, distribution.counts, freqs, benford, strict=True):
        table.add_row(
            str(d),
            str(count),
            format_fixed(None if e is None else e * 100, missing=NOT_AVAILABLE),
            format_fixed(b * 100),
        )
    return table


def flags_table(flags: list[RepetitionFlag]) -> Table:
    """Repetition runs found by screening.

    Args:
        flags (list[RepetitionFlag]): Flags in audit order.

    Returns:
        Table: One row per flag.
    """
    table = Table(
        "#",
        "Country",
        "Sector",
        "Start",
        "Run",
        "Value",
        box=None,
        show_header=True,
        header_style="bold",
        title_style="yellow",
        title_justify="left",
        title="Abnormal repetitions",
        min_width=64,
    )
    for n, flag in enumerate(flags, start=1):
        table.add_row(
            str(n),
            flag.country,
            flag.sector,
            str(flag.start_date),
            str(flag.run_length),
            f"[bold]{flag.value!r}[/]",
        )
    return table


def comparison_table(rows: list[dict]) -> Table:
    """Raw against adapted conformance, one row per sector scored in both."""
    table = Table(
        box=box.SIMPLE,
        header_style="bold",
        title="Raw → adapted",
    )
    table.add_column("Sector")
    for column in ("N", "χ²", "M (pp)", "d*", "a*"):
        table.add_column(column, justify="right")

    for row in rows:
        table.add_row(
            row["sector"],
            f"{row['n_raw']} → {row['n_adapted']}",
            *(
                f"{format_fixed(row[f'{key}_raw'])} → {format_fixed(row[f'{key}_adapted'])}"
                for key in ("chi2", "M", "d_star", "a_star")
            ),
        )
    return table
