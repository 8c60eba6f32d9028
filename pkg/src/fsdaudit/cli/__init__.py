"""CLI helpers for fsdaudit."""

from .helpers import (
    analyze_panel,
    analyze_sector,
    atomic_write,
    build_bundle,
    exit_on_error,
    load_configuration,
    load_panel,
    read_number_lines,
    write_bundle,
    write_screening,
    write_variant,
)

__all__ = [
    "analyze_panel",
    "analyze_sector",
    "atomic_write",
    "build_bundle",
    "exit_on_error",
    "load_configuration",
    "load_panel",
    "read_number_lines",
    "write_bundle",
    "write_screening",
    "write_variant",
]
