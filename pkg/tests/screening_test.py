# type: ignore
"""Tests for utils/screening.py."""

import pytest

from fsdaudit.constants import ScreeningPolicy
from fsdaudit.models import ObservationDate, PricePanel, PriceSeries, RepetitionFlag, ScreeningConfig
from fsdaudit.utils.errors import ScreeningError
from fsdaudit.utils.ingest import pool_panel
from fsdaudit.utils.screening import adapt_panel, detect_repetitions, screen_panel


def _series(levels, start=(2000, 1), country="UK", sector="TECH"):
    """Consecutive monthly levels from `start`; None leaves a gap."""
    date = ObservationDate(*start)
    points = []
    for level in levels:
        if level is not None:
            points.append((date, level))
        date = date.next_month()
    return PriceSeries(country, sector, tuple(points))


@pytest.mark.parametrize(
    ("levels", "min_run", "expected"),
    [
        # (start index, run length)
        ([1, 2, 2, 2, 2, 3], 4, [(1, 4)]),
        ([1, 2, 2, 2, 3], 4, []),
        ([1, 2, 2, 2, 3], 3, [(1, 3)]),
        ([5, 5, 5, 5, 5, 5], 4, [(0, 6)]),
        ([5, 5, 5, 5, 1, 1, 1, 1], 4, [(0, 4), (4, 4)]),
        ([5, 5, 1, 5, 5, 5], 2, [(0, 2), (3, 3)]),
        ([5, 5, None, 5, 5], 3, []),
        ([5, 5, 5, None, 5, 5, 5], 3, [(0, 3), (4, 3)]),
        ([5.0, 5.0000001, 5.0, 5.0], 3, []),
        ([], 2, []),
    ],
)
def test_detect_repetitions(levels, min_run, expected):
    """Test maximal runs of identical levels in consecutive months."""
    # GIVEN a monthly series
    series = _series(levels)

    # WHEN detecting runs
    flags = detect_repetitions(series, ScreeningConfig(min_run=min_run))

    # THEN each flag marks one maximal run
    start = ObservationDate(2000, 1)
    months = [start]
    for _ in range(len(levels)):
        months.append(months[-1].next_month())
    assert [(f.start_date, f.run_length) for f in flags] == [(months[i], n) for i, n in expected]
    for flag in flags:
        assert flag.run_length >= min_run
        assert len(flag.dates) == flag.run_length


def test_screening_config_validates_min_run():
    """Test runs shorter than two cannot be configured."""
    with pytest.raises(ValueError, match="at least 2"):
        ScreeningConfig(min_run=1)


@pytest.mark.parametrize("min_run", [2, 4, 7])
def test_china_panel_single_health_flag(china_panel, min_run):
    """Test the China panel has one stale HEA run up to min_run 7."""
    flags = screen_panel(china_panel, ScreeningConfig(min_run=min_run))

    assert len(flags) == 1
    flag = flags[0]
    assert flag.key == ("China", "HEA")
    assert flag.value == 444.19
    assert flag.run_length == 7
    assert flag.start_date == ObservationDate(2000, 9)
    assert flag.dates[-1] == ObservationDate(2001, 3)


def test_china_panel_no_flag_above_run_length(china_panel):
    """Test min_run above the longest run flags nothing and adapts nothing."""
    config = ScreeningConfig(min_run=8)

    flags = screen_panel(china_panel, config)
    adapted, summary = adapt_panel(china_panel, flags, config)

    assert flags == []
    assert adapted == china_panel
    assert summary.n_before == summary.n_after


def test_adapt_drop_run_tail(china_panel):
    """Test the default policy keeps the first level of the run."""
    # GIVEN the flagged China panel
    config = ScreeningConfig()
    flags = screen_panel(china_panel, config)

    # WHEN adapting
    adapted, summary = adapt_panel(china_panel, flags, config)

    # THEN six repeats go and HEA keeps four returns
    hea = adapted.series[("China", "HEA")]
    assert len(hea) == 6
    assert hea.dates[3] == ObservationDate(2000, 9)
    assert hea.dates[4] == ObservationDate(2001, 4)
    assert summary.removed_observations == {("China", "HEA"): 6}
    assert summary.n_before["HEA"] == 11
    assert summary.n_after["HEA"] == 4
    assert summary.n_before["TELE"] == summary.n_after["TELE"] == 0
    assert summary.n_after["OIL"] == 8
    assert pool_panel(adapted)["HEA"].n == 4
    for sector in ("MATS", "GDS", "FIN"):
        assert adapted.series[("China", sector)] == china_panel.series[("China", sector)]


def test_adapt_drop_entire_run(china_panel):
    """Test the stricter policy removes every level of the run."""
    config = ScreeningConfig(policy=ScreeningPolicy.DROP_ENTIRE_RUN)
    flags = screen_panel(china_panel, config)

    adapted, summary = adapt_panel(china_panel, flags, config)

    assert len(adapted.series[("China", "HEA")]) == 5
    assert summary.removed_observations == {("China", "HEA"): 7}
    assert summary.n_after["HEA"] == 3


def test_adapted_panel_rescreens_clean(china_panel):
    """Test adaptation leaves no flaggable run and is idempotent."""
    config = ScreeningConfig()
    adapted, _ = adapt_panel(china_panel, screen_panel(china_panel, config), config)

    assert screen_panel(adapted, config) == []
    again, summary = adapt_panel(adapted, screen_panel(adapted, config), config)
    assert again == adapted
    assert summary.removed_observations == {}


def test_adapt_rejects_foreign_flags(china_panel):
    """Test flags that do not match the panel raise ScreeningError."""
    config = ScreeningConfig()
    unknown = RepetitionFlag("Japan", "HEA", ObservationDate(2000, 9), 7, 444.19)
    wrong_value = RepetitionFlag("China", "HEA", ObservationDate(2000, 9), 7, 1.0)
    too_long = RepetitionFlag("China", "HEA", ObservationDate(2000, 9), 9, 444.19)
    wrong_start = RepetitionFlag("China", "HEA", ObservationDate(1999, 9), 7, 444.19)

    for flag in (unknown, wrong_value, too_long, wrong_start):
        with pytest.raises(ScreeningError):
            adapt_panel(china_panel, [flag], config)


def test_screening_summary_outputs(china_panel):
    """Test the audit log and JSON representation of the summary."""
    config = ScreeningConfig()
    _, summary = adapt_panel(china_panel, screen_panel(china_panel, config), config)

    assert summary.audit_log() == (
        "China\tHEA\t2000-09..2001-03\trun_length=7\tvalue=444.19\n"
    )
    document = summary.to_dict()
    assert document["flags"] == [
        {
            "country": "China",
            "sector": "HEA",
            "start_date": "2000-09",
            "run_length": 7,
            "value": 444.19,
        }
    ]
    assert document["removed_observations"] == {"China/HEA": 6}
    assert list(document["n_before"]) == sorted(document["n_before"])


def test_flags_ordered_by_series(long_panel):
    """Test panel screening walks series in (country, sector) order."""
    panel = PricePanel.from_series(
        [
            _series([3, 3, 3], country="ZA"),
            *long_panel,
        ]
    )
    flags = screen_panel(panel, ScreeningConfig(min_run=3))

    assert [f.key for f in flags] == [("UK", "TECH"), ("ZA", "TECH")]
