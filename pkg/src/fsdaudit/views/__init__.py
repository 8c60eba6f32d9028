"""Views for the fsdaudit app."""

from .reports import (
    bar_chart_data,
    format_fixed,
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
from .tables import comparison_table, conformance_table, flags_table, frequency_table

__all__ = [
    "bar_chart_data",
    "comparison_table",
    "conformance_table",
    "flags_table",
    "format_fixed",
    "frequency_table",
    "histogram_data",
    "render_bar_chart_csv",
    "render_comparison_table",
    "render_conformance_json",
    "render_conformance_table",
    "render_descriptive_table",
    "render_frequency_json",
    "render_frequency_table",
    "render_histogram_csv",
    "render_screening_json",
]
