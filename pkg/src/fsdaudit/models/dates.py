"""Monthly observation dates."""

import re
from dataclasses import dataclass
from functools import total_ordering

from fsdaudit.constants import DateFormat

# Two-digit years follow the POSIX strptime pivot: 69-99 -> 19xx, 00-68 -> 20xx.
TWO_DIGIT_YEAR_PIVOT = 69


@total_ordering
@dataclass(frozen=True, slots=True)
class ObservationDate:
    """A calendar month. Day-of-month is not part of the identity.

    >>> ObservationDate(2000, 12).next_month()
    ObservationDate(year=2001, month=1)
    """

    year: int
    month: int

    def __post_init__(self) -> None:
        """Validate the month."""
        if not 1 <= self.month <= 12:  # noqa: PLR2004
            msg = f"month must be in 1..12, got {self.month}"
            raise ValueError(msg)

    def __lt__(self, other: object) -> bool:
        """Chronological order."""
        if not isinstance(other, ObservationDate):
            return NotImplemented
        return (self.year, self.month) < (other.year, other.month)

    def __str__(self) -> str:
        """Render as ``YYYY-MM``."""
        return f"{self.year:04d}-{self.month:02d}"

    @property
    def ordinal(self) -> int:
        """Months since year 0, so consecutive months differ by exactly one."""
        return self.year * 12 + self.month - 1

    def next_month(self) -> "ObservationDate":
        """Return the following calendar month."""
        return ObservationDate(self.year + self.month // 12, self.month % 12 + 1)

    def is_followed_by(self, other: "ObservationDate") -> bool:
        """Whether `other` is the month directly after this one."""
        return other.ordinal - self.ordinal == 1


@dataclass(frozen=True)
class DatePattern:
    """Regex patterns for the supported date formats."""

    pattern_day = r"0?[1-9]|[12][0-9]|3[01]"
    pattern_month = r"0?[1-9]|1[012]"

    @staticmethod
    def compile(date_format: DateFormat) -> re.Pattern[str]:
        """Return the anchored pattern for a date format.

        Args:
            date_format (DateFormat): The configured format.

        Returns:
            re.Pattern[str]: Pattern with ``year`` and ``month`` groups.
        """
        match date_format:
            case DateFormat.DD_MM_YY:
                return re.compile(
                    rf"^(?P<day>{DatePattern.pattern_day})/(?P<month>{DatePattern.pattern_month})/(?P<year>\d{{2}})$"
                )
            case DateFormat.YYYY_MM:
                return re.compile(rf"^(?P<year>\d{{4}})-(?P<month>{DatePattern.pattern_month})$")
            case DateFormat.YYYY_MM_DD:
                return re.compile(
                    rf"^(?P<year>\d{{4}})-(?P<month>{DatePattern.pattern_month})-(?P<day>{DatePattern.pattern_day})$"
                )


def parse_observation_date(text: str, date_format: DateFormat) -> ObservationDate:
    """Parse a date cell into its calendar month.

    Args:
        text (str): The raw cell.
        date_format (DateFormat): Expected format.

    Returns:
        ObservationDate: The month the date falls in.

    Raises:
        ValueError: If the text does not match the format.

    >>> parse_observation_date("19/06/00", DateFormat.DD_MM_YY)
    ObservationDate(year=2000, month=6)
    """
    found = DatePattern.compile(date_format).match(text.strip())
    if not found:
        msg = f"'{text}' does not match date format {date_format.value}"
        raise ValueError(msg)

    year = int(found.group("year"))
    if date_format is DateFormat.DD_MM_YY:
        year += 1900 if year >= TWO_DIGIT_YEAR_PIVOT else 2000

    return ObservationDate(year, int(found.group("month")))
