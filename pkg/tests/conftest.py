# type: ignore
"""Shared fixtures for tests."""

from pathlib import Path

import pytest

from fsdaudit.constants import DateFormat, PanelLayout
from fsdaudit.models import PanelSchema
from fsdaudit.utils import console
from fsdaudit.utils.ingest import parse_price_panel

FIXTURES = Path(__file__).resolve().parent / "fixtures"
FIXTURE_CONFIG = FIXTURES / "fixture_config.toml"
CHINA_PANEL = FIXTURES / "china_2000_2001.csv"
LONG_PANEL = FIXTURES / "long_panel.csv"
MATS_COUNTS = FIXTURES / "mats_counts_1080.txt"
LOG_UNIFORM_SAMPLE = FIXTURES / "log_uniform_sample.txt"

CHINA_SCHEMA = PanelSchema(
    layout=PanelLayout.WIDE, date_format=DateFormat.DD_MM_YY, country="China"
)


@pytest.fixture
def china_panel():
    """The twelve month China panel, one column per sector."""
    return parse_price_panel(CHINA_PANEL, CHINA_SCHEMA)


@pytest.fixture
def long_panel():
    """A small long layout panel with two countries and one stale run."""
    return parse_price_panel(LONG_PANEL, PanelSchema())


@pytest.fixture
def create_file(tmp_path):
    """Create a file for testing."""

    def _inner(name: str, content: str = "") -> Path:
        """Create a file with the provided name and content.

        Args:
            name (str): The name of the file to create.
            content (str, optional): The content to write to the file.
        """
        file_path = tmp_path / name
        file_path.parent.mkdir(parents=True, exist_ok=True)
        file_path.write_text(content, encoding="utf-8")
        return file_path

    return _inner


@pytest.fixture
def debug():
    """Print debug information to the console. This is used to debug tests while writing them."""

    def _debug_inner(label: str, value: str | Path, stop: bool = False):
        """Print debug information to the console. This is used to debug tests while writing them.

        Args:
            label (str): The label to print above the debug information.
            value (str | Path): The value to print. When this is a path, prints all files in the path.
            stop (bool, optional): Whether to break after printing. Defaults to False.

        Returns:
            bool: Whether to break after printing.
        """
        console.rule(label)
        if not isinstance(value, Path) or not value.is_dir():
            console.print(value)
        else:
            for p in sorted(value.rglob("*")):
                console.print(p)

        console.rule()

        if stop:
            return pytest.fail("Breakpoint")

        return True

    return _debug_inner


@pytest.fixture(autouse=True)
def _wide_console(monkeypatch):
    """Keep long temporary paths on one line in captured output."""
    monkeypatch.setattr(console, "width", 250)
