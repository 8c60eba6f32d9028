"""Instantiate the fsdaudit settings object and register validators."""

from collections.abc import Callable
from enum import Enum
from pathlib import Path
from typing import TypeVar

from dynaconf import Dynaconf, Validator

from fsdaudit.constants import (
    CONFIG_PATH,
    DateFormat,
    DStarMode,
    PanelLayout,
    ScreeningPolicy,
    Variant,
)

E = TypeVar("E", bound=Enum)

settings = Dynaconf(
    envvar_prefix="FSDAUDIT",
    settings_files=[
        Path(__file__).parents[0].absolute() / "defaults.toml",
        CONFIG_PATH,
    ],
    environments=False,
)


def to_enum(enum_cls: type[E]) -> Callable[[object], E]:
    """Build a caster accepting either an enum member or its value (case-insensitive).

    Args:
        enum_cls: The enum to cast into.

    Returns:
        Callable[[object], E]: The caster.
    """

    def _cast(value: object) -> E:
        if isinstance(value, enum_cls):
            return value
        text = str(value).strip()
        for member in enum_cls:
            if text.lower() in {str(member.value).lower(), member.name.lower()}:
                return member
        msg = f"'{value}' is not one of {[m.value for m in enum_cls]}"
        raise ValueError(msg)

    return _cast


def to_str_list(value: object) -> list[str]:
    """Accept a list or a comma separated string; list items may hold commas too.

    Args:
        value: Raw configuration value.

    Returns:
        list[str]: Items as strings, stripped, empty entries removed.
    """
    if value is None:
        return []
    items = [value] if isinstance(value, str) else list(value)
    return [part.strip() for item in items for part in str(item).split(",") if part.strip()]


settings.validators.register(
    Validator("bin_width", cast=float, default=1.0, gt=0),
    Validator("country", cast=str, default=""),
    Validator("country_column", cast=str, default="country"),
    Validator("date_column", cast=str, default="date"),
    Validator("date_format", cast=to_enum(DateFormat), default="YYYY-MM"),
    Validator("delimiter", cast=str, default=",", len_min=1),
    Validator("dstar_mode", cast=to_enum(DStarMode), default="table-consistent"),
    Validator("input", cast=to_str_list, default=[]),
    Validator("layout", cast=to_enum(PanelLayout), default="long"),
    Validator("level_column", cast=str, default="level"),
    Validator("min_run", cast=int, default=4, gte=2),
    Validator("output_dir", cast=str, default="fsdaudit-output"),
    Validator("policy", cast=to_enum(ScreeningPolicy), default="drop-run-tail"),
    Validator("sector_column", cast=str, default="sector"),
    Validator("sectors", cast=to_str_list, default=[]),
    Validator("variant", cast=to_enum(Variant), default="both"),
    Validator("workers", cast=int, default=0, gte=0),
)
