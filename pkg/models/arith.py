"""Exact rational helpers for the symbolic backend."""
import math
from fractions import Fraction
from functools import reduce
from typing import Any, Iterable, Union

from models.errors import InvalidPiece
from spaces.ext_real import INF

Count = Union[int, float]


def parse_rational(value: Any, field: str = 'value') -> Fraction:
    """Read "p/q", "-3", "0.25" or an int; floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidPiece(f"{field} must be an exact rational string, got {value!r}", field=field)
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise InvalidPiece(f"{field} is not a rational: {value!r}", field=field)


def parse_count(value: Any, field: str = 'count') -> Count:
    if value == "inf" or value == INF:
        return INF
    if isinstance(value, str) and value.strip().isdigit():
        value = int(value)
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise InvalidPiece(f"{field} must be a positive integer or \"inf\", got {value!r}", field=field)
    return value


def rational_lcm(a: Fraction, b: Fraction) -> Fraction:
    """Smallest positive common multiple of two positive rationals."""
    return Fraction(math.lcm(a.numerator, b.numerator), math.gcd(a.denominator, b.denominator))


def common_period(steps: Iterable[Fraction]) -> Fraction:
    steps = list(steps)
    if not steps:
        return Fraction(0)
    return reduce(rational_lcm, steps)


def floor_div(x: Fraction, step: Fraction) -> int:
    return math.floor(x / step)


def ceil_div(x: Fraction, step: Fraction) -> int:
    return math.ceil(x / step)
