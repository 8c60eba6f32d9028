"""Models package for fsdaudit."""

from .dates import ObservationDate, parse_observation_date  # isort:skip
from .digits import BenfordReference, FsdDistribution
from .panel import PanelSchema, PooledSample, PriceSeries, PricePanel, ReturnSeries, SeriesKey
from .results import (
    BarChartRow,
    ChiSquareResult,
    ConformanceReport,
    DescriptiveStats,
    HistogramSpec,
    RepetitionFlag,
    ReportBundle,
    RunConfig,
    ScreeningConfig,
    ScreeningSummary,
    SectorAnalysis,
)

__all__ = [
    "BarChartRow",
    "BenfordReference",
    "ChiSquareResult",
    "ConformanceReport",
    "DescriptiveStats",
    "FsdDistribution",
    "HistogramSpec",
    "ObservationDate",
    "PanelSchema",
    "PooledSample",
    "PriceSeries",
    "PricePanel",
    "RepetitionFlag",
    "ReportBundle",
    "ReturnSeries",
    "RunConfig",
    "ScreeningConfig",
    "ScreeningSummary",
    "SectorAnalysis",
    "SeriesKey",
    "parse_observation_date",
]
