"""Constants for the fsdaudit package."""

import os
from enum import Enum
from pathlib import Path

PACKAGE_NAME = "fsdaudit"
CONFIG_DIR = Path(os.getenv("XDG_CONFIG_HOME", "~/.config")).expanduser().absolute() / PACKAGE_NAME
STATE_DIR = (
    Path(os.getenv("XDG_STATE_HOME", "~/.local/state")).expanduser().absolute() / PACKAGE_NAME
)
CONFIG_PATH = Path(os.getenv("FSDAUDIT_CONFIG", str(CONFIG_DIR / "config.toml"))).expanduser()

VERSION = "1.0.0"
SPINNER = "bouncingBall"

DIGITS = tuple(range(1, 10))
CHI_SQUARE_DF = 8
# Upper-tail critical values of chi-square with 8 degrees of freedom.
CHI_SQUARE_CRITICAL_10 = 13.36
CHI_SQUARE_CRITICAL_5 = 15.51
CHI_SQUARE_CRITICAL_1 = 20.09

MEASURE_DECIMALS = 4
STATS_DECIMALS = 6
BENFORD_ROW_LABEL = "FSD BL"
MAX_HISTOGRAM_BINS = 100_000


class PanelLayout(str, Enum):
    """Shape of the price panel input file."""

    LONG = "long"  # one row per (date, country, sector, level)
    WIDE = "wide"  # one row per date, one column per sector


class DateFormat(str, Enum):
    """Supported date formats for the date column."""

    DD_MM_YY = "DD/MM/YY"
    YYYY_MM = "YYYY-MM"
    YYYY_MM_DD = "YYYY-MM-DD"


class ScreeningPolicy(str, Enum):
    """Which observations of a flagged repetition run are deleted."""

    DROP_RUN_TAIL = "drop-run-tail"
    DROP_ENTIRE_RUN = "drop-entire-run"


class DStarMode(str, Enum):
    """Normalizer used for the Euclidean distance measure."""

    TABLE_CONSISTENT = "table-consistent"
    MAX_DEVIATION = "max-deviation"


class Variant(str, Enum):
    """Which panel variant(s) to analyze."""

    RAW = "raw"
    ADAPTED = "adapted"
    BOTH = "both"

    def expand(self) -> tuple["Variant", ...]:
        """Return the concrete variants this choice stands for."""
        if self is Variant.BOTH:
            return (Variant.RAW, Variant.ADAPTED)
        return (self,)


class TableFormat(str, Enum):
    """Rendering target for report tables."""

    CSV = "csv"
    TEXT = "text"
