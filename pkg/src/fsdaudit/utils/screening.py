"""Find and delete stale runs of identical index levels."""

from collections import defaultdict

from loguru import logger

from fsdaudit.constants import ScreeningPolicy
from fsdaudit.models import (
    ObservationDate,
    PricePanel,
    PriceSeries,
    RepetitionFlag,
    ScreeningConfig,
    ScreeningSummary,
)

from .common import count_noun
from .errors import ScreeningError
from .ingest import panel_returns


def detect_repetitions(series: PriceSeries, config: ScreeningConfig) -> list[RepetitionFlag]:
    """Flag every maximal run of identical levels in consecutive months.

    Levels are compared exactly, as parsed. A missing month ends a run.

    Args:
        series: The price series to scan.
        config: Screening configuration; runs shorter than `config.min_run` are ignored.

    Returns:
        list[RepetitionFlag]: One flag per qualifying run, ordered by start date.
    """
    flags: list[RepetitionFlag] = []
    run: list[tuple[ObservationDate, float]] = []

    def close_run() -> None:
        if len(run) >= config.min_run:
            flags.append(
                RepetitionFlag(
                    country=series.country,
                    sector=series.sector,
                    start_date=run[0][0],
                    run_length=len(run),
                    value=run[0][1],
                    dates=tuple(d for d, _ in run),
                )
            )

    for date, level in series.points:
        if run and level == run[-1][1] and run[-1][0].is_followed_by(date):
            run.append((date, level))
            continue
        close_run()
        run = [(date, level)]
    close_run()

    if flags:
        logger.debug(f"{series.country}/{series.sector}: {count_noun(len(flags), 'repetition run')}")
    return flags


def screen_panel(panel: PricePanel, config: ScreeningConfig) -> list[RepetitionFlag]:
    """Run `detect_repetitions` over every series, ordered by (country, sector, start date)."""
    return [flag for series in panel for flag in detect_repetitions(series, config)]


def _flagged_dates(series: PriceSeries, flag: RepetitionFlag) -> tuple[ObservationDate, ...]:
    """Dates covered by `flag`, checked against the series."""
    dates = series.dates
    if flag.start_date not in dates:
        msg = f"flag {flag.country}/{flag.sector} starts at {flag.start_date}, which the series does not hold"
        raise ScreeningError(msg)
    start = dates.index(flag.start_date)
    run = series.points[start : start + flag.run_length]
    if len(run) != flag.run_length or any(level != flag.value for _, level in run):
        msg = f"flag {flag.country}/{flag.sector} at {flag.start_date} does not match the series levels"
        raise ScreeningError(msg)
    return tuple(d for d, _ in run)


def _return_counts(panel: PricePanel) -> dict[str, int]:
    counts: dict[str, int] = dict.fromkeys(panel.sectors, 0)
    for returns in panel_returns(panel):
        counts[returns.sector] += len(returns)
    return counts


def adapt_panel(
    panel: PricePanel, flags: list[RepetitionFlag], config: ScreeningConfig
) -> tuple[PricePanel, ScreeningSummary]:
    """Delete flagged observations and report the effect on return counts.

    With `drop-run-tail` the first observation of each run stays and the repeats go; with
    `drop-entire-run` the whole run goes. Deleted months become gaps, so no return bridges them.

    Args:
        panel: The panel the flags were detected on.
        flags: Repetition flags for this panel.
        config: Screening configuration; only `policy` is used here.

    Returns:
        tuple[PricePanel, ScreeningSummary]: The adapted panel and the per sector summary.

    Raises:
        ScreeningError: If a flag names a series or dates the panel does not hold.
    """
    to_drop: dict[tuple[str, str], set[ObservationDate]] = defaultdict(set)
    for flag in flags:
        series = panel.series.get(flag.key)
        if series is None:
            msg = f"flag references {flag.country}/{flag.sector}, which is not in the panel"
            raise ScreeningError(msg)
        dates = _flagged_dates(series, flag)
        to_drop[flag.key].update(dates[1:] if config.policy is ScreeningPolicy.DROP_RUN_TAIL else dates)

    adapted = panel
    for key, dates in to_drop.items():
        adapted = adapted.replace(panel.series[key].without(dates))

    summary = ScreeningSummary(
        flags=tuple(flags),
        removed_observations={key: len(dates) for key, dates in sorted(to_drop.items())},
        n_before=_return_counts(panel),
        n_after=_return_counts(adapted),
    )
    logger.debug(
        f"Adapted panel: {count_noun(sum(summary.removed_observations.values()), 'observation')} removed"
    )
    return adapted, summary
