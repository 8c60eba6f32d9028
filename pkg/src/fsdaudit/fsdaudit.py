"""fsdaudit CLI."""

from pathlib import Path
from typing import Annotated, Optional

import typer
import typer.rich_utils
from loguru import logger

from fsdaudit.cli import (
    analyze_sector,
    build_bundle,
    exit_on_error,
    load_configuration,
    load_panel,
    read_number_lines,
    write_bundle,
    write_screening,
    write_variant,
)
from fsdaudit.constants import (
    SPINNER,
    STATE_DIR,
    VERSION,
    DateFormat,
    DStarMode,
    PanelLayout,
    ScreeningPolicy,
    Variant,
)
from fsdaudit.models import PooledSample, ReportBundle
from fsdaudit.utils import console, count_noun, instantiate_logger
from fsdaudit.utils.conformance import benford_reference
from fsdaudit.utils.screening import adapt_panel, screen_panel
from fsdaudit.views import comparison_table, conformance_table, flags_table, frequency_table

app = typer.Typer(
    add_completion=False,
    no_args_is_help=True,
    rich_markup_mode="rich",
    context_settings={"help_option_names": ["-h", "--help"]},
)
typer.rich_utils.STYLE_HELPTEXT = ""

ConfigOption = Annotated[
    Optional[Path],
    typer.Option(
        "--config",
        envvar="FSDAUDIT_CONFIG",
        help="Path to a TOML config file layered over the defaults",
        dir_okay=False,
        show_default=False,
    ),
]
InputOption = Annotated[
    Optional[list[Path]],
    typer.Option(
        "--input",
        "-i",
        help="Price panel CSV file. Repeat for several files.",
        dir_okay=False,
        show_default=False,
        rich_help_panel="Input Options",
    ),
]
LayoutOption = Annotated[
    Optional[PanelLayout],
    typer.Option(
        "--layout",
        case_sensitive=False,
        help="Input layout. [dim](default: long)[/dim]",
        show_default=False,
        rich_help_panel="Input Options",
    ),
]
DateFormatOption = Annotated[
    Optional[DateFormat],
    typer.Option(
        "--date-format",
        help="Format of the date column. [dim](default: YYYY-MM)[/dim]",
        show_default=False,
        rich_help_panel="Input Options",
    ),
]
DelimiterOption = Annotated[
    Optional[str],
    typer.Option(
        "--delimiter",
        help="Field delimiter of the input. [dim](default: ,)[/dim]",
        show_default=False,
        rich_help_panel="Input Options",
    ),
]
CountryOption = Annotated[
    Optional[str],
    typer.Option(
        "--country",
        help="Country of every series in a wide layout file",
        show_default=False,
        rich_help_panel="Input Options",
    ),
]
DateColumnOption = Annotated[
    Optional[str],
    typer.Option(
        "--date-column",
        help="Name of the date column. [dim](default: date)[/dim]",
        show_default=False,
        rich_help_panel="Input Options",
    ),
]
CountryColumnOption = Annotated[
    Optional[str],
    typer.Option(
        "--country-column",
        help="Name of the country column of a long layout file. [dim](default: country)[/dim]",
        show_default=False,
        rich_help_panel="Input Options",
    ),
]
SectorColumnOption = Annotated[
    Optional[str],
    typer.Option(
        "--sector-column",
        help="Name of the sector column of a long layout file. [dim](default: sector)[/dim]",
        show_default=False,
        rich_help_panel="Input Options",
    ),
]
LevelColumnOption = Annotated[
    Optional[str],
    typer.Option(
        "--level-column",
        help="Name of the index level column of a long layout file. [dim](default: level)[/dim]",
        show_default=False,
        rich_help_panel="Input Options",
    ),
]
MinRunOption = Annotated[
    Optional[int],
    typer.Option(
        "--min-run",
        help="Shortest run of identical monthly levels flagged as abnormal. [dim](default: 4)[/dim]",
        show_default=False,
        rich_help_panel="Screening Options",
    ),
]
PolicyOption = Annotated[
    Optional[ScreeningPolicy],
    typer.Option(
        "--policy",
        case_sensitive=False,
        help="Which observations of a flagged run are deleted. [dim](default: drop-run-tail)[/dim]",
        show_default=False,
        rich_help_panel="Screening Options",
    ),
]
DStarModeOption = Annotated[
    Optional[DStarMode],
    typer.Option(
        "--dstar-mode",
        case_sensitive=False,
        help="Normalizer of the d* distance. [dim](default: table-consistent)[/dim]",
        show_default=False,
        rich_help_panel="Scoring Options",
    ),
]
OutOption = Annotated[
    Optional[Path],
    typer.Option(
        "--out",
        "--output-dir",
        "-o",
        help="Output directory. [dim](default: fsdaudit-output)[/dim]",
        file_okay=False,
        show_default=False,
        rich_help_panel="Output Options",
    ),
]


def version_callback(value: bool) -> None:
    """Print version and exit.

    Args:
        value (bool): The value.

    Raises:
        typer.Exit: Always, once the version is printed.
    """
    if value:
        console.print(f"{__package__} version: {VERSION}")
        raise typer.Exit()


@app.callback()
def main(
    log_file: Annotated[
        Path,
        typer.Option(
            help="Path to log file",
            show_default=True,
            dir_okay=False,
            file_okay=True,
            exists=False,
        ),
    ] = STATE_DIR / "fsdaudit.log",
    log_to_file: Annotated[
        bool,
        typer.Option(
            "--log-to-file",
            help="Log to file",
            show_default=True,
        ),
    ] = False,
    verbosity: Annotated[
        int,
        typer.Option(
            "-v",
            "--verbose",
            show_default=True,
            help="""Set verbosity level(0=INFO, 1=DEBUG, 2=TRACE)""",
            count=True,
        ),
    ] = 0,
    version: Annotated[  # noqa: ARG001
        Optional[bool],
        typer.Option(
            "--version",
            is_eager=True,
            callback=version_callback,
            help="Print version and exit",
        ),
    ] = None,
) -> None:
    """[bold]fsdaudit[/] audits price index panels for conformance with Benford's law of first significant digits.

    [bold underline]Example Usage:[/]

    [dim]Screen, score and report a long layout panel[/]
    $ fsdaudit analyze --input=ftse.csv --out=report

    [dim]Only list abnormal repetitions, with runs of three already flagged[/]
    $ fsdaudit screen --input=ftse.csv --min-run=3

    [dim]Score a plain list of numbers, one per line[/]
    $ fsdaudit fsd numbers.txt
    """
    instantiate_logger(verbosity, log_file, log_to_file)


@app.command()
def analyze(
    config_file: ConfigOption = None,
    inputs: InputOption = None,
    layout: LayoutOption = None,
    date_format: DateFormatOption = None,
    delimiter: DelimiterOption = None,
    country: CountryOption = None,
    date_column: DateColumnOption = None,
    country_column: CountryColumnOption = None,
    sector_column: SectorColumnOption = None,
    level_column: LevelColumnOption = None,
    min_run: MinRunOption = None,
    policy: PolicyOption = None,
    dstar_mode: DStarModeOption = None,
    out: OutOption = None,
    sectors: Annotated[
        Optional[list[str]],
        typer.Option(
            "--sectors",
            "-s",
            help="Only analyze these sectors. Repeat the flag or separate with commas.",
            show_default=False,
            rich_help_panel="Scoring Options",
        ),
    ] = None,
    variant: Annotated[
        Optional[Variant],
        typer.Option(
            "--variant",
            case_sensitive=False,
            help="Score the raw panel, the adapted panel or both. [dim](default: both)[/dim]",
            show_default=False,
            rich_help_panel="Scoring Options",
        ),
    ] = None,
    workers: Annotated[
        Optional[int],
        typer.Option(
            "--workers",
            help="Sectors analyzed in parallel, 0 for one per CPU. [dim](default: 0)[/dim]",
            show_default=False,
            rich_help_panel="Scoring Options",
        ),
    ] = None,
    bin_width: Annotated[
        Optional[float],
        typer.Option(
            "--bin-width",
            help="Histogram bin width in percent. [dim](default: 1.0)[/dim]",
            show_default=False,
            rich_help_panel="Output Options",
        ),
    ] = None,
) -> None:
    """Screen a price panel for repetitions, then score raw and adapted returns against Benford's law.

    Writes frequency, conformance and descriptive tables plus histogram and bar chart data for each variant, and the screening summary with its audit log.
    """
    config = load_configuration(
        {
            "input": inputs or None,
            "layout": layout,
            "date_format": date_format,
            "delimiter": delimiter,
            "country": country,
            "date_column": date_column,
            "country_column": country_column,
            "sector_column": sector_column,
            "level_column": level_column,
            "min_run": min_run,
            "policy": policy,
            "dstar_mode": dstar_mode,
            "output_dir": out,
            "sectors": sectors or None,
            "variant": variant,
            "workers": workers,
            "bin_width": bin_width,
        },
        config_file,
    )

    with exit_on_error():
        panel = load_panel(config)
        logger.info(
            f"Loaded {count_noun(len(panel.series), 'series')} with "
            f"{count_noun(panel.observation_count, 'observation')} from {panel.provenance}"
        )
        with console.status("Analyzing sectors…", spinner=SPINNER):
            bundle = build_bundle(panel, config)
        written = write_bundle(bundle, config)

    if bundle.screening.flags:
        console.print(flags_table(list(bundle.screening.flags)))
    for v in config.variant.expand():
        results = bundle.variant(v)
        console.print(conformance_table([results[s] for s in sorted(results)], v))
    if config.variant is Variant.BOTH and (rows := bundle.comparison()):
        console.print(comparison_table(rows))

    logger.success(f"Wrote {count_noun(len(written), 'file')} to {config.output_dir}")


@app.command()
def screen(
    config_file: ConfigOption = None,
    inputs: InputOption = None,
    layout: LayoutOption = None,
    date_format: DateFormatOption = None,
    delimiter: DelimiterOption = None,
    country: CountryOption = None,
    date_column: DateColumnOption = None,
    country_column: CountryColumnOption = None,
    sector_column: SectorColumnOption = None,
    level_column: LevelColumnOption = None,
    min_run: MinRunOption = None,
    policy: PolicyOption = None,
    out: OutOption = None,
) -> None:
    """Flag runs of identical index levels and write the screening summary and audit log."""
    config = load_configuration(
        {
            "input": inputs or None,
            "layout": layout,
            "date_format": date_format,
            "delimiter": delimiter,
            "country": country,
            "date_column": date_column,
            "country_column": country_column,
            "sector_column": sector_column,
            "level_column": level_column,
            "min_run": min_run,
            "policy": policy,
            "output_dir": out,
        },
        config_file,
    )

    with exit_on_error():
        panel = load_panel(config)
        flags = screen_panel(panel, config.screening)
        _, summary = adapt_panel(panel, flags, config.screening)
        written = write_screening(ReportBundle(screening=summary), config.output_dir)

    if flags:
        console.print(flags_table(flags))
    removed = sum(summary.removed_observations.values())
    logger.info(
        f"Found {count_noun(len(flags), 'repetition run')}; "
        f"{count_noun(removed, 'observation')} would be deleted"
    )
    logger.success(f"Wrote {count_noun(len(written), 'file')} to {config.output_dir}")


@app.command()
def fsd(
    numbers: Annotated[
        Path,
        typer.Argument(
            help="Text file with one number per line",
            dir_okay=False,
            show_default=False,
        ),
    ],
    config_file: ConfigOption = None,
    dstar_mode: DStarModeOption = None,
    out: Annotated[
        Optional[Path],
        typer.Option(
            "--out",
            "-o",
            help="Also write the tables of the sample to this directory",
            file_okay=False,
            show_default=False,
            rich_help_panel="Output Options",
        ),
    ] = None,
    label: Annotated[
        str,
        typer.Option(
            "--label",
            help="Name of the sample in the tables",
            show_default=True,
            rich_help_panel="Output Options",
        ),
    ] = "sample",
) -> None:
    """Score a plain sample of numbers against Benford's law, skipping price ingestion and screening."""
    config = load_configuration({"dstar_mode": dstar_mode}, config_file)

    with exit_on_error():
        values = read_number_lines(numbers)
        ref = benford_reference()
        analysis = analyze_sector(
            PooledSample(sector=label, values=tuple(values)), ref, config.dstar_mode, config.bin_width
        )
        if analysis.report is None:
            logger.error(
                f"{numbers}: empty distribution after excluding "
                f"{count_noun(analysis.distribution.excluded, 'zero')}"
            )
            raise typer.Exit(1)

        console.print(frequency_table(analysis.distribution, ref.b))
        console.print(conformance_table([analysis], Variant.RAW))
        if out:
            written = write_variant(ReportBundle(raw={label: analysis}), Variant.RAW, out)
            logger.success(f"Wrote {count_noun(len(written), 'file')} to {out}")


if __name__ == "__main__":  # pragma: no cover
    app()
