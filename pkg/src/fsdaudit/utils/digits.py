"""First significant digit extraction and tallies."""

from collections.abc import Iterable
from decimal import Decimal

import numpy as np
from loguru import logger

from fsdaudit.models import FsdDistribution, PooledSample

from .common import count_noun
from .errors import NonFiniteValueError

# 10.0 ** 308 is the largest finite power of ten; smaller magnitudes are pre-scaled in two steps.
_MAX_POW10 = 300
# Mantissas this close to an integer are re-checked against the exact binary value.
_BOUNDARY_TOLERANCE = 1e-9


def _scale(x: np.ndarray, exponents: np.ndarray) -> np.ndarray:
    """Divide `x` by ``10 ** exponents``, multiplying by the reciprocal power for negative exponents.

    Powers of ten up to 1e22 are exact doubles, so in that range each mantissa is correctly rounded.
    """
    mantissas = np.empty_like(x)
    up = exponents < 0
    mantissas[up] = x[up] * np.power(10.0, -exponents[up])
    mantissas[~up] = x[~up] / np.power(10.0, exponents[~up])
    return mantissas


def _exact_first_digit(x: float) -> int:
    """Leading digit of the exact decimal expansion of a nonzero double."""
    return Decimal(x).as_tuple().digits[0]


def first_significant_digits(values: Iterable[float] | np.ndarray) -> np.ndarray:
    """Leading digits of many values at once; 0 marks exact zeros.

    Each magnitude is scaled into ``[1, 10)`` by a power of ten, re-normalized once if `log10` put
    it just outside that interval, and floored. Values are taken at full binary precision: where the
    scaled mantissa lies within rounding distance of an integer, the digit is read from the exact
    value of the double instead. The double nearest 0.3 lies just below it, so its digit is 2.

    Args:
        values: Finite reals.

    Returns:
        np.ndarray: Integer array of digits in 1..9, or 0 where the value was 0.

    Raises:
        NonFiniteValueError: If any value is NaN or infinite.

    >>> first_significant_digits([393.85, -0.00479, 0.0, 2.9999999999999996]).tolist()
    [3, 4, 0, 2]
    """
    magnitudes = np.abs(np.asarray(values, dtype=float)).ravel()
    if not np.isfinite(magnitudes).all():
        msg = "first significant digit of a non-finite value is undefined"
        raise NonFiniteValueError(msg)

    digits = np.zeros(magnitudes.shape, dtype=int)
    nonzero = magnitudes > 0
    if not nonzero.any():
        return digits

    x = magnitudes[nonzero]
    exponents = np.floor(np.log10(x))
    # Subnormal magnitudes: 10 ** -exponent would overflow, so scale up first.
    tiny = exponents < -_MAX_POW10
    x[tiny] *= 10.0**_MAX_POW10
    exponents[tiny] += _MAX_POW10

    mantissas = _scale(x, exponents)
    exponents += (mantissas >= 10.0).astype(float) - (mantissas < 1.0).astype(float)  # noqa: PLR2004
    mantissas = _scale(x, exponents)

    found = np.clip(np.floor(mantissas).astype(int), 1, 9)
    boundary = np.flatnonzero(np.abs(mantissas - np.rint(mantissas)) <= _BOUNDARY_TOLERANCE * mantissas)
    originals = magnitudes[nonzero]
    for i in boundary:
        found[i] = _exact_first_digit(float(originals[i]))
    if boundary.size:
        logger.trace(f"Read {count_noun(boundary.size, 'digit')} from exact binary values")

    digits[nonzero] = found
    return digits


def first_significant_digit(x: float) -> int | None:
    """Leading nonzero digit of `x`, ignoring sign and leading zeros.

    Args:
        x: A finite real.

    Returns:
        int | None: The digit in 1..9, or ``None`` for zero.

    Raises:
        NonFiniteValueError: If `x` is NaN or infinite.

    >>> first_significant_digit(393.85)
    3
    >>> first_significant_digit(-0.00479)
    4
    >>> first_significant_digit(0.0) is None
    True
    """
    digit = int(first_significant_digits([x])[0])
    return digit or None


def fsd_distribution(sample: PooledSample | Iterable[float]) -> FsdDistribution:
    """Tally first significant digits of a sample.

    Zeros have no first significant digit; they are counted in `excluded` and left out of N.
    The result `is_empty` when nothing is left.

    Args:
        sample: A pooled sample or any iterable of finite reals.

    Returns:
        FsdDistribution: Counts, exclusions and frequencies.
    """
    values = sample.as_array() if isinstance(sample, PooledSample) else np.asarray(list(sample), dtype=float)
    digits = first_significant_digits(values)
    tally = np.bincount(digits, minlength=10)
    distribution = FsdDistribution(counts=tuple(int(c) for c in tally[1:]), excluded=int(tally[0]))

    if distribution.is_empty:
        logger.debug(f"No first significant digits among {count_noun(len(values), 'value')}")
    return distribution
