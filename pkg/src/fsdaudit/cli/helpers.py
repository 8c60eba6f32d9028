"""Helpers for the fsdaudit cli."""

import math
import os
import tempfile
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from enum import Enum
from pathlib import Path

import typer
from dynaconf import ValidationError
from loguru import logger

from fsdaudit import settings
from fsdaudit.config import to_enum, to_str_list
from fsdaudit.constants import (
    DateFormat,
    DStarMode,
    PanelLayout,
    ScreeningPolicy,
    Variant,
)
from fsdaudit.models import (
    BenfordReference,
    PanelSchema,
    PooledSample,
    PricePanel,
    ReportBundle,
    RunConfig,
    ScreeningConfig,
    SectorAnalysis,
)
from fsdaudit.utils import count_noun
from fsdaudit.utils.conformance import benford_reference, conformance_report, descriptive_stats
from fsdaudit.utils.digits import fsd_distribution
from fsdaudit.utils.errors import InputError, ParseError
from fsdaudit.utils.ingest import parse_price_panel, pool_panel
from fsdaudit.utils.screening import adapt_panel, screen_panel
from fsdaudit.views import (
    histogram_data,
    render_bar_chart_csv,
    render_comparison_table,
    render_conformance_json,
    render_conformance_table,
    render_descriptive_table,
    render_frequency_json,
    render_frequency_table,
    render_histogram_csv,
    render_screening_json,
)


def load_configuration(cli_overrides: dict, config_file: Path | None = None) -> RunConfig:
    """Load and validate the configuration, letting non-None CLI options win.

    Args:
        cli_overrides (dict): Setting name to CLI value; ``None`` means not given.
        config_file (Path | None): Config file to layer over the defaults.

    Returns:
        RunConfig: The validated run configuration.

    Raises:
        typer.Exit: If the configuration file is missing or invalid.
    """
    settings.reload()
    if config_file:
        if not config_file.is_file():
            logger.error(f"Config file not found: {config_file}")
            raise typer.Exit(1)
        settings.load_file(path=str(config_file))

    for option, value in cli_overrides.items():
        if value is None:
            continue
        if isinstance(value, Enum):
            value = value.value
        elif isinstance(value, list | tuple):
            value = [str(v) for v in value]
        elif isinstance(value, Path):
            value = str(value)
        settings.set(option, value)

    try:
        settings.validators.validate_all()
        run_config = RunConfig(
            inputs=tuple(Path(p) for p in to_str_list(settings.input)),
            schema=PanelSchema(
                layout=to_enum(PanelLayout)(settings.layout),
                delimiter=str(settings.delimiter),
                date_format=to_enum(DateFormat)(settings.date_format),
                date_column=str(settings.date_column),
                country_column=str(settings.country_column),
                sector_column=str(settings.sector_column),
                level_column=str(settings.level_column),
                country=str(settings.country),
            ),
            screening=ScreeningConfig(
                min_run=int(settings.min_run),
                policy=to_enum(ScreeningPolicy)(settings.policy),
            ),
            dstar_mode=to_enum(DStarMode)(settings.dstar_mode),
            output_dir=Path(str(settings.output_dir)),
            sectors=tuple(to_str_list(settings.sectors)),
            variant=to_enum(Variant)(settings.variant),
            workers=int(settings.workers) or os.cpu_count() or 1,
            bin_width=float(settings.bin_width),
        )
    except (ValidationError, KeyError, ValueError) as e:
        logger.error(f"Invalid configuration: {e}")
        raise typer.Exit(1) from e

    logger.debug(f"Run configuration: {run_config}")
    return run_config


def load_panel(config: RunConfig) -> PricePanel:
    """Parse and merge every configured input file.

    Raises:
        InputError: If no input is configured, a file is unreadable, or two files hold the same series.
    """
    if not config.inputs:
        msg = "no input file given (use --input or the 'input' config key)"
        raise InputError(msg)

    series = []
    for path in config.inputs:
        if not path.is_file():
            raise ParseError("cannot read input file", source=str(path))
        series.extend(parse_price_panel(path, config.schema))
    try:
        return PricePanel.from_series(series, provenance=", ".join(p.name for p in config.inputs))
    except ValueError as e:
        raise InputError(str(e)) from e


def analyze_sector(
    sample: PooledSample,
    ref: BenfordReference,
    mode: DStarMode = DStarMode.TABLE_CONSISTENT,
    bin_width: float = 1.0,
) -> SectorAnalysis:
    """Descriptive statistics, digit tally, conformance scores and histogram of one sector."""
    distribution = fsd_distribution(sample)
    stats = descriptive_stats(sample) if sample.n else None
    report = None
    if distribution.is_empty:
        logger.warning(f"{sample.sector}: no returns with a first significant digit, not scored")
    else:
        report = conformance_report(
            distribution, ref, stats, sector=sample.sector, mode=mode
        )
    return SectorAnalysis(
        sector=sample.sector,
        sample_size=sample.n,
        stats=stats,
        distribution=distribution,
        report=report,
        histogram=histogram_data(sample, bin_width) if sample.n else None,
    )


def analyze_panel(panel: PricePanel, config: RunConfig) -> dict[str, SectorAnalysis]:
    """Analyze every sector of the panel, up to `config.workers` at a time.

    The result is keyed and ordered by sector whatever the scheduling.
    """
    ref = benford_reference()
    samples = pool_panel(panel, config.sectors)
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        futures = {
            sector: pool.submit(analyze_sector, sample, ref, config.dstar_mode, config.bin_width)
            for sector, sample in samples.items()
        }
        return {sector: futures[sector].result() for sector in sorted(futures)}


def build_bundle(panel: PricePanel, config: RunConfig) -> ReportBundle:
    """Screen the panel and analyze the requested variants."""
    flags = screen_panel(panel, config.screening)
    adapted, summary = adapt_panel(panel, flags, config.screening)
    logger.info(f"Screening found {count_noun(len(flags), 'repetition run')}")

    variants = config.variant.expand()
    return ReportBundle(
        raw=analyze_panel(panel, config) if Variant.RAW in variants else {},
        adapted=analyze_panel(adapted, config) if Variant.ADAPTED in variants else {},
        screening=summary,
    )


def atomic_write(path: Path, text: str) -> Path:
    """Write `text` to a temporary sibling of `path`, then rename it into place.

    Returns:
        Path: The written path.
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        Path(tmp).replace(path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
    return path


def write_screening(bundle: ReportBundle, output_dir: Path) -> list[Path]:
    """Write the screening summary JSON and the audit log."""
    return [
        atomic_write(output_dir / "screening_summary.json", render_screening_json(bundle)),
        atomic_write(output_dir / "screening_audit.log", bundle.screening.audit_log()),
    ]


def write_variant(bundle: ReportBundle, variant: Variant, out: Path) -> list[Path]:
    """Write the tables and plot data of one variant."""
    ref = benford_reference()
    v = variant.value
    return [
        atomic_write(out / f"table_descriptive_{v}.csv", render_descriptive_table(bundle, variant)),
        atomic_write(out / f"table_frequency_{v}.csv", render_frequency_table(bundle, variant, ref)),
        atomic_write(out / f"table_frequency_{v}.json", render_frequency_json(bundle, variant, ref)),
        atomic_write(out / f"table_conformance_{v}.csv", render_conformance_table(bundle, variant)),
        atomic_write(out / f"table_conformance_{v}.json", render_conformance_json(bundle, variant)),
        atomic_write(out / f"fig_histogram_{v}.csv", render_histogram_csv(bundle, variant)),
        atomic_write(out / f"fig_barchart_{v}.csv", render_bar_chart_csv(bundle, variant, ref)),
    ]


def write_bundle(bundle: ReportBundle, config: RunConfig) -> list[Path]:
    """Write the screening files and every table and plot data file of the bundle.

    Returns:
        list[Path]: Written files, in write order.
    """
    out = config.output_dir
    written = write_screening(bundle, out)
    for variant in config.variant.expand():
        written += write_variant(bundle, variant, out)
    if config.variant is Variant.BOTH:
        written.append(atomic_write(out / "table_comparison_both.csv", render_comparison_table(bundle)))

    logger.debug(f"Wrote {count_noun(len(written), 'file')} to {out}")
    return written


def read_number_lines(path: Path) -> list[float]:
    """Read one number per line; blank lines are skipped.

    Raises:
        ParseError: On a non-numeric or non-finite line, naming the line number.
    """
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"cannot read input file: {e}", source=str(path)) from e

    values = []
    for n, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            value = float(text)
        except ValueError as e:
            raise ParseError(f"'{text}' is not a number", row=n, source=str(path)) from e
        if not math.isfinite(value):
            raise ParseError(f"'{text}' is not finite", row=n, source=str(path))
        values.append(value)
    return values


@contextmanager
def exit_on_error() -> Iterator[None]:
    """Map exceptions to exit codes: 1 for input faults, 2 for anything else.

    Raises:
        typer.Exit: With the exit code of the caught exception.
    """
    try:
        yield
    except typer.Exit:
        raise
    except InputError as e:
        logger.error(str(e))
        raise typer.Exit(1) from e
    except Exception as e:
        logger.opt(exception=e).debug("Traceback")
        logger.error(f"Internal error: {e}")
        raise typer.Exit(2) from e
