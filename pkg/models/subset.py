import bisect
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence

from models.arith import common_period
from models.errors import InvalidPiece, SubsetNotContained
from models.model import Model1D
from models.pieces import Lattice, Piece, piece_from_dict
from models.region import SymbolicRegion
from models.walk import collect_segments
from spaces.ext_real import INF, ExtReal, format_rational


def _missing_right(M: Model1D, x: Fraction, limit: ExtReal) -> Optional[Fraction]:
    """A point of [x, limit] outside M, or None when M covers [x, limit]."""
    if not M.contains(x):
        return x
    y = max((p.upper for p in M.pieces if p.is_convex and p.contains(x)), default=x)
    if y >= limit:
        return None
    nxt = M.successor(y)
    bound = min(v for v in (nxt, limit, y + 1) if v is not None)
    return y + (bound - y) / 2


def _escape_in_window(M: Model1D, piece: Piece, lo: Fraction, hi: Fraction) -> Optional[Fraction]:
    """A point of a discrete ``piece`` in [lo, hi] outside M, walking M run by run."""
    runs = M.runs(lo, hi)
    firsts = [run.first for run in runs]
    x = lo if piece.contains(lo) else piece.successor(lo)
    while x is not None and x <= hi:
        i = bisect.bisect_right(firsts, x) - 1
        if i < 0 or runs[i].last < x:
            return x
        run = runs[i]
        if run.is_progression:
            if ((x - run.first) / run.period).denominator != 1:
                return x
            if isinstance(piece, Lattice) and (piece.step / run.period).denominator == 1:
                x = piece.successor(run.last)
            else:
                x = piece.successor(x)
            continue
        if run.period > 0:
            end = run.last
            if isinstance(piece, Lattice):
                end = min(end, x + common_period((run.period, piece.step)))
            for y, _ in collect_segments([piece], x, end):
                if not M.contains(y):
                    return y
        x = piece.successor(run.last)
    return None


def escape_point(M: Model1D, piece: Piece) -> Optional[Fraction]:
    """A point of ``piece`` outside M, None when the piece lies in M."""
    if piece.is_convex:
        x = piece.anchor_point
        missing = _missing_right(M, x, piece.upper)
        if missing is None:
            left = _missing_right(M.mirror, -x, -piece.lower)
            missing = None if left is None else -left
        return missing
    # past the core window both the model and the piece only repeat
    return _escape_in_window(M, piece, *M.core_window([piece]))


class SubsetSpec:
    """A closed subset given as a union of pieces; pieces may overlap."""

    def __init__(self, pieces: Sequence[Piece]):
        if not pieces:
            raise InvalidPiece("A subset needs at least one piece")
        self.pieces = tuple(pieces)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SubsetSpec':
        pieces = data.get('subset', data.get('pieces'))
        if not isinstance(pieces, list):
            raise InvalidPiece("subset needs a list field 'subset'", field='subset')
        return cls([piece_from_dict(p, i) for i, p in enumerate(pieces)])

    def __repr__(self) -> str:
        return f"SubsetSpec({list(self.pieces)!r})"

    @property
    def region(self) -> SymbolicRegion:
        return SymbolicRegion(self.pieces)

    @property
    def lower(self) -> ExtReal:
        return min(p.lower for p in self.pieces)

    @property
    def upper(self) -> ExtReal:
        return max(p.upper for p in self.pieces)

    @property
    def is_bounded(self) -> bool:
        return self.lower > -INF and self.upper < INF

    def union(self, other: 'SubsetSpec') -> 'SubsetSpec':
        return SubsetSpec(self.pieces + other.pieces)

    def check_in(self, M: Model1D) -> None:
        for i, piece in enumerate(self.pieces):
            point = escape_point(M, piece)
            if point is not None:
                raise SubsetNotContained(i, format_rational(point))

    def to_dict(self) -> Dict[str, Any]:
        return {'subset': [p.to_dict() for p in self.pieces]}
