# type: ignore
"""Helper functions for tests."""

import re

# Published first digit frequencies in percent, digits 1..9, with observation counts.
PUBLISHED_FREQUENCIES = {
    "MATS": (1086, (23.2044, 18.3241, 17.9558, 13.2597, 8.6556, 5.5249, 4.8803, 4.4199, 3.7753)),
    "GDS": (1013, (35.5380, 14.1165, 7.5025, 8.1935, 12.4383, 4.7384, 5.4294, 6.1204, 5.9230)),
    "SVS": (1086, (33.0571, 14.5488, 10.9576, 7.7348, 12.2468, 5.5249, 5.9853, 6.9061, 3.0387)),
    "FIN": (1086, (36.2799, 24.1252, 9.0239, 4.6961, 3.9595, 5.8932, 6.2615, 4.9724, 4.7882)),
    "HEA": (1066, (21.8574, 4.2214, 9.5685, 9.0056, 9.1932, 7.4109, 12.2889, 10.9756, 15.4784)),
    "INDUS": (1086, (20.9024, 17.6796, 22.5599, 4.7882, 5.2486, 9.1160, 10.4052, 5.3407, 3.9595)),
    "OIL": (969, (23.4262, 26.4190, 12.6935, 8.5655, 8.2559, 4.8504, 8.3591, 3.7152, 3.7152)),
    "TECH": (568, (41.7254, 16.0211, 11.9718, 11.6197, 9.1549, 4.5775, 1.7606, 1.4085, 1.7606)),
    "TELE": (1042, (39.4434, 15.6430, 4.7985, 5.5662, 6.1420, 4.9904, 7.2937, 8.6372, 7.4856)),
    "UTIL": (920, (32.5000, 9.8913, 8.0435, 19.0217, 4.8913, 9.0217, 4.5652, 6.4130, 5.6522)),
}

# Published correlation, M (percentage points), d* and a* for the frequencies above.
PUBLISHED_MEASURES = {
    "MATS": (0.9092, 6.8986, 0.09054, 0.00479),
    "GDS": (0.9383, 5.4350, 0.09129, 0.01066),
    "SVS": (0.9616, 4.3287, 0.06584, 0.00147),
    "FIN": (0.9614, 6.5161, 0.10787, 0.05716),
    "HEA": (0.4426, 13.3877, 0.19834, 0.27801),
    "INDUS": (0.7543, 10.0660, 0.14565, 0.05613),
    "OIL": (0.8765, 8.8099, 0.10870, 0.00605),
    "TECH": (0.9814, 11.6224, 0.12685, 0.13523),
    "TELE": (0.9113, 9.3404, 0.13053, 0.02076),
    "UTIL": (0.8469, 9.3307, 0.12873, 0.03812),
}


class Regex:
    """Assert that a given string meets some expectations.

    Usage:
        from tests.helpers import Regex

        assert caplog.text == Regex(r"^.*$", re.I)
    """

    def __init__(self, pattern, flags=0):
        self._regex = re.compile(pattern, flags)

    def __eq__(self, actual):
        """Define equality.

        Args:
            actual (str): String to be matched to the regex

        Returns:
            bool: True if the actual string matches the regex, False otherwise.
        """
        return bool(self._regex.search(actual))

    def __repr__(self):
        """Error printed on failed tests."""
        return f"Regex: '{self._regex.pattern}'"


def strip_ansi(text) -> str:
    """Remove ANSI escape sequences from a string.

    Args:
        text (str): String to remove ANSI escape sequences from.

    Returns:
        str: String without ANSI escape sequences.
    """
    ansi_chars = re.compile(r"(\x9B|\x1B\[)[0-?]*[ -\/]*[@-~]")
    return ansi_chars.sub("", text)
