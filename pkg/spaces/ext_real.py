"""Values in [0, inf].

Finite-backend values are floats taken verbatim from stored distances,
model values are exact ``Fraction`` objects, and infinity is ``math.inf``
in both backends (it orders correctly against either type).
"""
import math
from fractions import Fraction
from numbers import Real
from typing import Iterable, Union

INF = math.inf

ExtReal = Union[int, float, Fraction]


def is_infinite(value: ExtReal) -> bool:
    return value == INF


def ext_max(values: Iterable[ExtReal], default: ExtReal = 0) -> ExtReal:
    result = default
    for value in values:
        if value > result:
            result = value
    return result


def ext_min(values: Iterable[ExtReal], default: ExtReal = INF) -> ExtReal:
    result = default
    for value in values:
        if value < result:
            result = value
    return result


def check_ext(value: ExtReal) -> ExtReal:
    if isinstance(value, float) and math.isnan(value):
        raise ValueError("NaN is not an extended real in [0, inf]")
    if value < 0:
        raise ValueError(f"Extended reals are non-negative, got {value}")
    return value


def format_ext(value: ExtReal) -> Union[str, int, float]:
    """JSON form: ``"inf"`` for infinity, ``"p/q"`` for exact rationals."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if value == INF:
        return "inf"
    if isinstance(value, bool):
        raise TypeError("booleans are not extended reals")
    if isinstance(value, int):
        return value
    if isinstance(value, Real):
        return float(value)
    raise TypeError(f"Cannot format {value!r} as an extended real")


def format_rational(value: Union[Fraction, float]) -> str:
    if value == INF:
        return "inf"
    if value == -INF:
        return "-inf"
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
