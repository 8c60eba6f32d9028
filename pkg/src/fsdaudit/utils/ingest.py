"""Read price panels and turn them into pooled percentage log-returns."""

import io
import math
from collections.abc import Iterable
from pathlib import Path
from typing import BinaryIO

import numpy as np
import pandas as pd
from loguru import logger

from fsdaudit.constants import PanelLayout
from fsdaudit.models import (
    ObservationDate,
    PanelSchema,
    PooledSample,
    PricePanel,
    PriceSeries,
    ReturnSeries,
    SeriesKey,
    parse_observation_date,
)

from .common import count_noun
from .errors import InputError, ParseError, SchemaError, SectorMismatchError

HEADER_LINES = 1


def _read_table(source: BinaryIO | Path, schema: PanelSchema, name: str) -> pd.DataFrame:
    """Read the whole source as strings, one row per line, blank lines kept as empty rows."""
    try:
        frame = pd.read_csv(
            source,
            sep=schema.delimiter,
            dtype=str,
            keep_default_na=False,
            na_filter=False,
            skip_blank_lines=False,
            encoding="utf-8",
            engine="python" if len(schema.delimiter) > 1 else "c",
        )
    except pd.errors.EmptyDataError as e:
        raise ParseError("input is empty, a header row is required", source=name) from e
    except (pd.errors.ParserError, UnicodeDecodeError) as e:
        raise ParseError(str(e).strip(), source=name) from e

    frame.columns = [str(c).strip() for c in frame.columns]
    missing = [c for c in schema.required_columns if c not in frame.columns]
    if missing:
        msg = f"{name}: missing column(s) {', '.join(missing)}; header has {', '.join(frame.columns)}"
        raise SchemaError(msg)
    return frame


def _cell(value: object) -> str:
    """Cell text; blank lines and short rows come back from pandas as NaN."""
    return value.strip() if isinstance(value, str) else ""


def _parse_level(text: str, row: int, name: str) -> float | None:
    """Parse an index level cell. Blank cells are gaps."""
    if not text:
        return None
    try:
        level = float(text)
    except ValueError as e:
        raise ParseError(f"index level '{text}' is not a number", row=row, source=name) from e
    if not math.isfinite(level) or level <= 0:
        raise ParseError(f"index level must be positive, got '{text}'", row=row, source=name)
    return level


def _long_cells(frame: pd.DataFrame, schema: PanelSchema) -> Iterable[tuple[int, str, str, str, str]]:
    """Yield ``(row, date, country, sector, level)`` for a long panel."""
    columns = [schema.date_column, schema.country_column, schema.sector_column, schema.level_column]
    for i, (date, country, sector, level) in enumerate(frame[columns].itertuples(index=False)):
        yield i + HEADER_LINES + 1, _cell(date), _cell(country), _cell(sector), _cell(level)


def _wide_cells(frame: pd.DataFrame, schema: PanelSchema, name: str) -> Iterable[tuple[int, str, str, str, str]]:
    """Yield ``(row, date, country, sector, level)`` for a wide panel, one column per sector."""
    if not schema.country:
        msg = f"{name}: the wide layout needs a country in the configuration"
        raise SchemaError(msg)
    sectors = [c for c in frame.columns if c != schema.date_column and not c.startswith("Unnamed:")]
    for i, record in enumerate(frame.to_dict("records")):
        for sector in sectors:
            yield (
                i + HEADER_LINES + 1,
                _cell(record[schema.date_column]),
                schema.country,
                sector,
                _cell(record[sector]),
            )


def parse_price_panel(
    source: BinaryIO | Path | str,
    schema: PanelSchema,
    provenance: str | None = None,
) -> PricePanel:
    """Parse a delimiter separated price panel.

    Blank level cells are gaps. Rows may come in any order; each series is sorted by date.

    Args:
        source: A path or a binary stream of UTF-8 text with a header row.
        schema: Column mapping, layout and date format.
        provenance: Free text source label. Defaults to the file name.

    Returns:
        PricePanel: One series per (country, sector) seen in the input, even if every level was blank.

    Raises:
        ParseError: On a malformed date, a non-positive or non-numeric level, or a duplicate
            (country, sector, date).
        SchemaError: When a configured column is missing from the header.
    """
    if isinstance(source, str):
        source = Path(source)
    name = source.name if isinstance(source, Path) else (provenance or "<stream>")
    if isinstance(source, Path):
        source = io.BytesIO(source.read_bytes())

    frame = _read_table(source, schema, name)
    cells = _wide_cells(frame, schema, name) if schema.layout is PanelLayout.WIDE else _long_cells(frame, schema)

    points: dict[SeriesKey, dict[ObservationDate, float | None]] = {}
    for row, date_text, country, sector, level_text in cells:
        if not date_text and not level_text and (schema.layout is PanelLayout.WIDE or not (country or sector)):
            continue
        if not country or not sector:
            raise ParseError("country and sector must not be blank", row=row, source=name)
        try:
            date = parse_observation_date(date_text, schema.date_format)
        except ValueError as e:
            raise ParseError(str(e), row=row, source=name) from e

        series_points = points.setdefault((country, sector), {})
        if date in series_points:
            msg = f"duplicate observation for {country}/{sector} at {date}"
            raise ParseError(msg, row=row, source=name)
        series_points[date] = _parse_level(level_text, row, name)

    panel = PricePanel.from_series(
        (
            PriceSeries(
                country,
                sector,
                tuple((d, v) for d, v in sorted(by_date.items()) if v is not None),
            )
            for (country, sector), by_date in points.items()
        ),
        provenance=provenance or name,
    )
    logger.debug(
        f"Parsed {count_noun(len(panel), 'series')} with "
        f"{count_noun(panel.observation_count, 'observation')} from {name}"
    )
    return panel


def compute_log_returns(series: PriceSeries) -> ReturnSeries:
    """Compute ``100 * ln(P_t / P_t-1)`` for every pair of consecutive months.

    No return spans a missing month. Each return is dated at the later month of its pair.

    Args:
        series: A valid price series.

    Returns:
        ReturnSeries: The percentage log-returns.
    """
    if len(series) < 2:  # noqa: PLR2004
        return ReturnSeries(series.country, series.sector, ())

    levels = series.levels
    dates = series.dates
    ordinals = np.array([d.ordinal for d in dates])
    consecutive = np.diff(ordinals) == 1
    returns = 100.0 * np.log(levels[1:] / levels[:-1])

    points = tuple(
        (dates[i + 1], float(returns[i])) for i in np.flatnonzero(consecutive)
    )
    logger.trace(f"{series.country}/{series.sector}: {count_noun(len(points), 'return')}")
    return ReturnSeries(series.country, series.sector, points)


def pool_sector(returns: Iterable[ReturnSeries], sector: str) -> PooledSample:
    """Pool every return of one sector across countries and months.

    Args:
        returns: Return series that all belong to `sector`.
        sector: The sector identifier.

    Returns:
        PooledSample: The union, with multiplicity, of all return values.

    Raises:
        SectorMismatchError: If a series belongs to another sector.
    """
    values: list[float] = []
    for series in returns:
        if series.sector != sector:
            msg = f"cannot pool {series.country}/{series.sector} into sector {sector}"
            raise SectorMismatchError(msg)
        values.extend(r for _, r in series.points)
    return PooledSample(sector=sector, values=tuple(values))


def panel_returns(panel: PricePanel) -> list[ReturnSeries]:
    """Log-returns of every series in the panel, ordered by (country, sector)."""
    return [compute_log_returns(series) for series in panel]


def pool_panel(panel: PricePanel, sectors: Iterable[str] = ()) -> dict[str, PooledSample]:
    """Pooled return samples per sector, optionally restricted to `sectors`.

    Args:
        panel: The price panel.
        sectors: Sectors to keep. Empty keeps every sector in the panel.

    Returns:
        dict[str, PooledSample]: Samples keyed and ordered by sector.

    Raises:
        InputError: If a requested sector is not in the panel.
    """
    known = set(panel.sectors)
    wanted = set(sectors) or known
    if unknown := sorted(wanted - known):
        msg = f"unknown sector(s) {', '.join(unknown)}; the panel has {', '.join(sorted(known)) or 'none'}"
        raise InputError(msg)
    returns = panel_returns(panel)
    return {
        sector: pool_sector((r for r in returns if r.sector == sector), sector)
        for sector in sorted(wanted)
    }
