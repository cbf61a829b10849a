import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from models.arith import parse_rational
from models.errors import InvalidPiece
from models.pieces.base_piece import Piece, Segment
from spaces.ext_real import ExtReal, format_rational


@dataclass(frozen=True)
class Points(Piece):
    """A finite set of isolated points."""

    xs: Tuple[Fraction, ...]

    kind = 'points'

    def __post_init__(self):
        xs = tuple(sorted(set(Fraction(x) for x in self.xs)))
        if not xs:
            raise InvalidPiece("A points piece needs at least one point")
        object.__setattr__(self, 'xs', xs)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Points':
        xs = data.get('xs')
        if not isinstance(xs, list):
            raise InvalidPiece("points piece needs a list field 'xs'", field='xs')
        parsed = [parse_rational(x, 'xs') for x in xs]
        if len(set(parsed)) != len(parsed):
            raise InvalidPiece("points piece lists a point twice", field='xs')
        return cls(tuple(parsed))

    @property
    def lower(self) -> Fraction:
        return self.xs[0]

    @property
    def upper(self) -> Fraction:
        return self.xs[-1]

    def contains(self, x: Fraction) -> bool:
        i = bisect.bisect_left(self.xs, x)
        return i < len(self.xs) and self.xs[i] == x

    def successor(self, r: Fraction) -> Optional[Fraction]:
        i = bisect.bisect_right(self.xs, r)
        return self.xs[i] if i < len(self.xs) else None

    def predecessor(self, r: Fraction) -> Optional[Fraction]:
        i = bisect.bisect_left(self.xs, r)
        return self.xs[i - 1] if i > 0 else None

    def _window(self, lo: ExtReal, hi: ExtReal) -> Tuple[int, int]:
        return bisect.bisect_left(self.xs, lo), bisect.bisect_right(self.xs, hi)

    def clip(self, lo: ExtReal, hi: ExtReal) -> Optional['Points']:
        a, b = self._window(lo, hi)
        return Points(self.xs[a:b]) if a < b else None

    def count_in(self, lo: Fraction, hi: Fraction) -> int:
        a, b = self._window(lo, hi)
        return max(0, b - a)

    def segments(self, lo: Fraction, hi: Fraction) -> List[Segment]:
        a, b = self._window(lo, hi)
        return [(x, x) for x in self.xs[a:b]]

    def reflect(self) -> 'Points':
        return Points(tuple(-x for x in self.xs))

    def to_dict(self) -> Dict[str, Any]:
        return {'type': self.kind, 'xs': [format_rational(x) for x in self.xs]}
