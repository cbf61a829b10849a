from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from models.arith import Count, ceil_div, floor_div, parse_count, parse_rational
from models.errors import InvalidPiece
from models.pieces.base_piece import Piece, Segment
from models.pieces.convex import DIRECTIONS
from spaces.ext_real import INF, ExtReal, format_rational

Index = Union[int, float]


@dataclass(frozen=True)
class Lattice(Piece):
    """Arithmetic progression start, start +- step, ... with ``count`` terms.

    Terms run towards +inf for dir "right" and towards -inf for dir "left";
    an infinite lattice is therefore unbounded on one side only.
    """

    start: Fraction
    step: Fraction
    count: Count = INF
    dir: str = 'right'

    kind = 'lattice'

    def __post_init__(self):
        if not self.step > 0:
            raise InvalidPiece(f"Lattice step must be positive, got {self.step}", field='step')
        if self.dir not in DIRECTIONS:
            raise InvalidPiece(f"Lattice direction must be left or right, got {self.dir!r}", field='dir')
        parse_count(self.count)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Lattice':
        return cls(
            parse_rational(data.get('start'), 'start'),
            parse_rational(data.get('step'), 'step'),
            parse_count(data.get('count', 'inf')),
            data.get('dir', 'right'),
        )

    @classmethod
    def from_range(cls, base: Fraction, step: Fraction, a: Index, b: Index) -> Piece:
        """Terms base + n*step for a <= n <= b (a or b may be infinite)."""
        if a == -INF:
            return cls(base + b * step, step, INF, 'left')
        if b == INF:
            return cls(base + a * step, step, INF, 'right')
        return cls(base + a * step, step, b - a + 1, 'right')

    @property
    def _range(self) -> Tuple[Index, Index]:
        last = self.count - 1
        return (0, last) if self.dir == 'right' else (-last, 0)

    def at(self, n: int) -> Fraction:
        return self.start + n * self.step

    @property
    def lower(self) -> ExtReal:
        a, _ = self._range
        return -INF if a == -INF else self.at(a)

    @property
    def upper(self) -> ExtReal:
        _, b = self._range
        return INF if b == INF else self.at(b)

    @property
    def infinite_step(self) -> Optional[Fraction]:
        return self.step if self.count == INF else None

    def contains(self, x: Fraction) -> bool:
        q = (x - self.start) / self.step
        a, b = self._range
        return q.denominator == 1 and a <= q <= b

    def successor(self, r: Fraction) -> Optional[Fraction]:
        a, b = self._range
        n = max(floor_div(r - self.start, self.step) + 1, a)
        return self.at(n) if n <= b else None

    def predecessor(self, r: Fraction) -> Optional[Fraction]:
        a, b = self._range
        n = min(ceil_div(r - self.start, self.step) - 1, b)
        return self.at(n) if n >= a else None

    def _indices(self, lo: ExtReal, hi: ExtReal) -> Tuple[Index, Index]:
        a, b = self._range
        if lo > -INF:
            a = max(a, ceil_div(lo - self.start, self.step))
        if hi < INF:
            b = min(b, floor_div(hi - self.start, self.step))
        return a, b

    def clip(self, lo: ExtReal, hi: ExtReal) -> Optional[Piece]:
        a, b = self._indices(lo, hi)
        if a > b:
            return None
        return Lattice.from_range(self.start, self.step, a, b)

    def count_in(self, lo: Fraction, hi: Fraction) -> int:
        a, b = self._indices(lo, hi)
        return max(0, b - a + 1)

    def segments(self, lo: Fraction, hi: Fraction) -> List[Segment]:
        a, b = self._indices(lo, hi)
        return [(self.at(n), self.at(n)) for n in range(a, b + 1)]

    def reflect(self) -> Piece:
        a, b = self._range
        return Lattice.from_range(-self.start, self.step, -b, -a)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'type': self.kind,
            'start': format_rational(self.start),
            'step': format_rational(self.step),
            'count': 'inf' if self.count == INF else self.count,
            'dir': self.dir,
        }
