"""Convex pieces: bounded intervals, closed half-lines and the whole line."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional

from models.arith import parse_rational
from models.errors import InvalidPiece
from models.pieces.base_piece import Piece, Segment
from models.pieces.points import Points
from spaces.ext_real import INF, ExtReal, format_rational

DIRECTIONS = ('left', 'right')


def span(lo: ExtReal, hi: ExtReal) -> Optional[Piece]:
    """The closed convex set [lo, hi] in its canonical encoding."""
    if lo > hi:
        return None
    if lo == hi:
        return Points((lo,))
    if lo == -INF and hi == INF:
        return FullLine()
    if lo == -INF:
        return Ray('left', hi)
    if hi == INF:
        return Ray('right', lo)
    return Interval(lo, hi)


class ConvexPiece(Piece):
    is_convex = True

    def contains(self, x: Fraction) -> bool:
        return self.lower <= x <= self.upper

    def successor(self, r: Fraction) -> Optional[ExtReal]:
        if r < self.lower:
            return self.lower
        if r < self.upper:
            return r
        return None

    def predecessor(self, r: Fraction) -> Optional[ExtReal]:
        if r > self.upper:
            return self.upper
        if r > self.lower:
            return r
        return None

    def clip(self, lo: ExtReal, hi: ExtReal) -> Optional[Piece]:
        return span(max(self.lower, lo), min(self.upper, hi))

    def count_in(self, lo: Fraction, hi: Fraction) -> int:
        return 1 if max(self.lower, lo) <= min(self.upper, hi) else 0

    def segments(self, lo: Fraction, hi: Fraction) -> List[Segment]:
        a, b = max(self.lower, lo), min(self.upper, hi)
        return [(a, b)] if a <= b else []

    def reflect(self) -> Piece:
        return span(-self.upper, -self.lower)


@dataclass(frozen=True)
class Interval(ConvexPiece):
    a: Fraction
    b: Fraction

    kind = 'interval'

    def __post_init__(self):
        if not self.a < self.b:
            raise InvalidPiece(f"Interval needs a < b, got [{self.a}, {self.b}]; use a points piece for a single point")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Interval':
        return cls(parse_rational(data.get('a'), 'a'), parse_rational(data.get('b'), 'b'))

    @property
    def lower(self) -> Fraction:
        return self.a

    @property
    def upper(self) -> Fraction:
        return self.b

    def to_dict(self) -> Dict[str, Any]:
        return {'type': self.kind, 'a': format_rational(self.a), 'b': format_rational(self.b)}


@dataclass(frozen=True)
class Ray(ConvexPiece):
    """(-inf, end] for dir "left", [end, inf) for dir "right"."""

    dir: str
    end: Fraction

    kind = 'ray'

    def __post_init__(self):
        if self.dir not in DIRECTIONS:
            raise InvalidPiece(f"Ray direction must be left or right, got {self.dir!r}", field='dir')

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Ray':
        return cls(data.get('dir'), parse_rational(data.get('end'), 'end'))

    @property
    def lower(self) -> ExtReal:
        return -INF if self.dir == 'left' else self.end

    @property
    def upper(self) -> ExtReal:
        return self.end if self.dir == 'left' else INF

    def to_dict(self) -> Dict[str, Any]:
        return {'type': self.kind, 'dir': self.dir, 'end': format_rational(self.end)}


@dataclass(frozen=True)
class FullLine(ConvexPiece):
    kind = 'fullline'

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'FullLine':
        return cls()

    @property
    def lower(self) -> float:
        return -INF

    @property
    def upper(self) -> float:
        return INF

    def to_dict(self) -> Dict[str, Any]:
        return {'type': self.kind}
