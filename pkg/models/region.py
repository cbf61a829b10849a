from fractions import Fraction
from typing import Any, Dict, List, Sequence

from models.pieces import Piece
from spaces.ext_real import INF, ExtReal


class SymbolicRegion:
    """A finite union of closed pieces, possibly empty."""

    def __init__(self, pieces: Sequence[Piece] = ()):
        self.pieces = tuple(sorted(pieces, key=lambda p: (p.lower, p.upper)))

    def __bool__(self) -> bool:
        return bool(self.pieces)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SymbolicRegion) and self.pieces == other.pieces

    def __hash__(self) -> int:
        return hash(self.pieces)

    def __repr__(self) -> str:
        return f"SymbolicRegion({list(self.pieces)!r})"

    @property
    def is_empty(self) -> bool:
        return not self.pieces

    @property
    def lower(self) -> ExtReal:
        return min((p.lower for p in self.pieces), default=INF)

    @property
    def upper(self) -> ExtReal:
        return max((p.upper for p in self.pieces), default=-INF)

    @property
    def is_bounded(self) -> bool:
        return all(p.is_bounded for p in self.pieces)

    @property
    def is_compact(self) -> bool:
        # finitely many closed pieces
        return self.is_bounded

    def contains(self, x: Fraction) -> bool:
        return any(p.contains(x) for p in self.pieces)

    def clip(self, lo: ExtReal, hi: ExtReal) -> 'SymbolicRegion':
        clipped = (p.clip(lo, hi) for p in self.pieces)
        return SymbolicRegion([p for p in clipped if p is not None])

    def meet_convex(self, convex: Sequence[Piece]) -> 'SymbolicRegion':
        """Intersection with a union of convex pieces."""
        parts: List[Piece] = []
        for piece in self.pieces:
            for c in convex:
                part = piece.clip(c.lower, c.upper)
                if part is not None:
                    parts.append(part)
        return SymbolicRegion(parts)

    def to_list(self) -> List[Dict[str, Any]]:
        return [p.to_dict() for p in self.pieces]
