"""Price panels, return series and pooled samples."""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

import numpy as np

from fsdaudit.constants import DateFormat, PanelLayout

from .dates import ObservationDate

SeriesKey = tuple[str, str]


@dataclass(frozen=True)
class PanelSchema:
    """Column mapping for a delimiter separated price panel.

    Attributes:
        layout: Long (one level per row) or wide (one column per sector).
        delimiter: Field separator.
        date_format: Format of the date column.
        date_column: Header of the date column.
        country_column: Header of the country column (long layout).
        sector_column: Header of the sector column (long layout).
        level_column: Header of the index level column (long layout).
        country: Country assigned to every series (wide layout).
    """

    layout: PanelLayout = PanelLayout.LONG
    delimiter: str = ","
    date_format: DateFormat = DateFormat.YYYY_MM
    date_column: str = "date"
    country_column: str = "country"
    sector_column: str = "sector"
    level_column: str = "level"
    country: str = ""

    @property
    def required_columns(self) -> tuple[str, ...]:
        """Columns that must appear in the header."""
        if self.layout is PanelLayout.WIDE:
            return (self.date_column,)
        return (self.date_column, self.country_column, self.sector_column, self.level_column)


@dataclass(frozen=True)
class PriceSeries:
    """Monthly index levels for one (country, sector).

    Dates are strictly increasing and every level is positive. Missing months are simply absent.
    """

    country: str
    sector: str
    points: tuple[tuple[ObservationDate, float], ...] = ()

    def __post_init__(self) -> None:
        """Check the series invariants."""
        dates = self.dates
        if any(b <= a for a, b in zip(dates, dates[1:], strict=False)):
            msg = f"{self.key}: dates must be strictly increasing"
            raise ValueError(msg)
        if any(not level > 0 for _, level in self.points):
            msg = f"{self.key}: index levels must be positive"
            raise ValueError(msg)

    def __len__(self) -> int:
        """Number of observations."""
        return len(self.points)

    @property
    def key(self) -> SeriesKey:
        """The (country, sector) key."""
        return (self.country, self.sector)

    @property
    def dates(self) -> tuple[ObservationDate, ...]:
        """Observation dates in order."""
        return tuple(d for d, _ in self.points)

    @property
    def levels(self) -> np.ndarray:
        """Index levels as a float array."""
        return np.array([level for _, level in self.points], dtype=float)

    def scaled(self, factor: float) -> "PriceSeries":
        """Return the series with every level multiplied by `factor`."""
        return PriceSeries(self.country, self.sector, tuple((d, level * factor) for d, level in self.points))

    def without(self, dates: Iterable[ObservationDate]) -> "PriceSeries":
        """Return the series with the given dates removed."""
        drop = set(dates)
        return PriceSeries(
            self.country, self.sector, tuple((d, v) for d, v in self.points if d not in drop)
        )


@dataclass(frozen=True)
class PricePanel:
    """A set of price series, at most one per (country, sector)."""

    series: dict[SeriesKey, PriceSeries] = field(default_factory=dict)
    provenance: str = ""

    def __post_init__(self) -> None:
        """Check that each series is stored under its own key."""
        for key, series in self.series.items():
            if key != series.key:
                msg = f"series {series.key} stored under key {key}"
                raise ValueError(msg)

    def __iter__(self) -> Iterator[PriceSeries]:
        """Iterate series ordered by (country, sector)."""
        return iter(self.series[key] for key in sorted(self.series))

    def __len__(self) -> int:
        """Number of series."""
        return len(self.series)

    @classmethod
    def from_series(cls, series: Iterable[PriceSeries], provenance: str = "") -> "PricePanel":
        """Build a panel from series with distinct keys.

        Raises:
            ValueError: If two series share a key.
        """
        by_key: dict[SeriesKey, PriceSeries] = {}
        for s in series:
            if s.key in by_key:
                msg = f"duplicate series for {s.key}"
                raise ValueError(msg)
            by_key[s.key] = s
        return cls(series=by_key, provenance=provenance)

    @property
    def sectors(self) -> tuple[str, ...]:
        """Sorted distinct sectors."""
        return tuple(sorted({sector for _, sector in self.series}))

    @property
    def observation_count(self) -> int:
        """Total observations across all series."""
        return sum(len(s) for s in self.series.values())

    def for_sector(self, sector: str) -> tuple[PriceSeries, ...]:
        """Series of one sector, ordered by country."""
        return tuple(s for s in self if s.sector == sector)

    def replace(self, series: PriceSeries) -> "PricePanel":
        """Return a panel with one series swapped for `series` (same key)."""
        return PricePanel(series={**self.series, series.key: series}, provenance=self.provenance)


@dataclass(frozen=True)
class ReturnSeries:
    """Percentage log-returns, each dated at the later month of its pair."""

    country: str
    sector: str
    points: tuple[tuple[ObservationDate, float], ...] = ()

    def __len__(self) -> int:
        """Number of returns."""
        return len(self.points)

    @property
    def values(self) -> np.ndarray:
        """Return values in percent."""
        return np.array([r for _, r in self.points], dtype=float)


@dataclass(frozen=True)
class PooledSample:
    """All returns of one sector, across countries and months.

    Values are kept sorted so the pooling order never shows downstream.
    """

    sector: str
    values: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        """Normalize value order."""
        object.__setattr__(self, "values", tuple(sorted(float(v) for v in self.values)))

    @property
    def n(self) -> int:
        """Number of values."""
        return len(self.values)

    def as_array(self) -> np.ndarray:
        """Values as a float array."""
        return np.asarray(self.values, dtype=float)
