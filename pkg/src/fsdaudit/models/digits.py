"""First significant digit distributions and the Benford reference."""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from fsdaudit.constants import DIGITS


@dataclass(frozen=True)
class BenfordReference:
    """Benford's first digit probabilities and the constants derived from them.

    Attributes:
        b: ``log10(1 + 1/d)`` for d = 1..9.
        mean_digit: Expected first digit under Benford's law.
        d_star_normalizer: Squared Euclidean distance from `b` to the distribution with all
            mass on digit 9, the farthest a digit distribution can be from `b`.
    """

    b: tuple[float, ...]
    mean_digit: float
    d_star_normalizer: float

    def as_array(self) -> np.ndarray:
        """Probabilities as a float array."""
        return np.asarray(self.b, dtype=float)

    @property
    def max_mean_difference(self) -> float:
        """Largest possible ``|m_e - m_b|``, reached with all mass on digit 9."""
        return DIGITS[-1] - self.mean_digit


@dataclass(frozen=True)
class FsdDistribution:
    """First significant digit tally of a sample.

    Attributes:
        counts: Number of values whose first significant digit is d, for d = 1..9.
        excluded: Values without a first significant digit (exact zeros).
        frequencies: ``counts / total``, or ``None`` when nothing was counted.
    """

    counts: tuple[int, ...]
    excluded: int = 0
    frequencies: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        """Validate the counts and derive frequencies when not given."""
        if len(self.counts) != len(DIGITS):
            msg = f"expected 9 digit counts, got {len(self.counts)}"
            raise ValueError(msg)
        if any(c < 0 for c in self.counts) or self.excluded < 0:
            msg = "counts must be non-negative"
            raise ValueError(msg)
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if self.frequencies is None and self.total > 0:
            freqs = np.asarray(self.counts, dtype=float) / self.total
            object.__setattr__(self, "frequencies", tuple(float(f) for f in freqs))

    @classmethod
    def from_frequencies(cls, frequencies: Sequence[float], total: int) -> "FsdDistribution":
        """Build a distribution from published frequencies.

        Frequencies may be fractions or percentages; they are rescaled to sum to one and kept
        as given otherwise. Counts are the rounded ``frequency * total`` with the rounding
        residual assigned to digit 1.

        Args:
            frequencies: Nine non-negative frequencies.
            total: Number of observations the frequencies were computed from.

        Returns:
            FsdDistribution: The distribution.
        """
        freqs = np.array(frequencies, dtype=float)
        if freqs.shape != (len(DIGITS),) or (freqs < 0).any() or freqs.sum() <= 0:
            msg = "need nine non-negative frequencies with a positive sum"
            raise ValueError(msg)
        if total <= 0:
            msg = f"total must be positive, got {total}"
            raise ValueError(msg)

        if abs(freqs.sum() - 1.0) > 1e-12:  # noqa: PLR2004
            freqs /= freqs.sum()
        counts = np.rint(freqs * total).astype(int)
        counts[0] += total - counts.sum()
        counts[0] = max(counts[0], 0)
        return cls(
            counts=tuple(int(c) for c in counts),
            frequencies=tuple(float(f) for f in freqs),
        )

    @property
    def total(self) -> int:
        """N, the number of values with a first significant digit."""
        return sum(self.counts)

    @property
    def sample_size(self) -> int:
        """All values tallied, including the excluded zeros."""
        return self.total + self.excluded

    @property
    def is_empty(self) -> bool:
        """True when no value had a first significant digit."""
        return self.total == 0

    @property
    def mean_digit(self) -> float | None:
        """Mean first digit ``sum(d * e_d)``."""
        if self.frequencies is None:
            return None
        return float(np.dot(DIGITS, self.frequencies))

    def counts_array(self) -> np.ndarray:
        """Counts as a float array."""
        return np.asarray(self.counts, dtype=float)

    def frequencies_array(self) -> np.ndarray | None:
        """Frequencies as a float array, or ``None`` when empty."""
        return None if self.frequencies is None else np.asarray(self.frequencies, dtype=float)

    def merge(self, other: "FsdDistribution") -> "FsdDistribution":
        """Combine two tallies. Associative and commutative."""
        return FsdDistribution(
            counts=tuple(a + b for a, b in zip(self.counts, other.counts, strict=True)),
            excluded=self.excluded + other.excluded,
        )

    def to_dict(self) -> dict:
        """JSON-ready representation."""
        return {
            "counts": {str(d): c for d, c in zip(DIGITS, self.counts, strict=True)},
            "excluded": self.excluded,
            "total": self.total,
            "frequencies": None
            if self.frequencies is None
            else {str(d): f for d, f in zip(DIGITS, self.frequencies, strict=True)},
        }
