import hashlib
import json
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Tuple

from models.arith import common_period, parse_rational
from models.errors import InvalidPiece, OverlappingPieces, PointNotInModel
from models.pieces import Lattice, Piece, Segment, piece_from_dict
from models.region import SymbolicRegion
from models.walk import Run, collect_segments, walk_runs, widest_gap
from spaces.ext_real import INF, ExtReal, format_rational

logger = logging.getLogger(__name__)


class TailKind(str, Enum):
    NONE = "none"
    RAY = "ray"
    PERIODIC = "periodic"


@dataclass(frozen=True)
class Tail:
    """What the model looks like beyond ``anchor`` on one side.

    ``anchor`` is the right-most point where anything other than the tail
    lives (the supremum for a bounded side). A periodic tail repeats with
    ``period``; ``gap`` is the largest gap it contains.
    """

    kind: TailKind
    anchor: Fraction
    period: Fraction
    gap: ExtReal

    def to_dict(self) -> Dict[str, Any]:
        result = {'kind': self.kind.value}
        if self.kind is TailKind.PERIODIC:
            result.update(period=format_rational(self.period), gap=format_rational(self.gap))
        return result


def right_anchor(piece: Piece) -> Fraction:
    if piece.upper < INF:
        return piece.upper
    if piece.lower > -INF:
        return piece.lower
    return Fraction(0)


def left_anchor(piece: Piece) -> Fraction:
    return -right_anchor(piece.reflect())


def _finite_window(p: Piece, q: Piece) -> Optional[Tuple[Fraction, Fraction]]:
    lo, hi = max(p.lower, q.lower), min(p.upper, q.upper)
    if lo > hi:
        return None
    period = common_period(s.infinite_step for s in (p, q) if s.infinite_step is not None)
    if lo == -INF:
        lo = hi - period
    elif hi == INF:
        hi = lo + period
    return lo, hi


def shared_point(p: Piece, q: Piece) -> Optional[Fraction]:
    """Some point lying in both pieces, or None when they are disjoint."""
    if p.is_convex and q.is_convex:
        lo, hi = max(p.lower, q.lower), min(p.upper, q.upper)
        if lo > hi:
            return None
        return next((v for v in (lo, hi) if -INF < v < INF), Fraction(0))
    window = _finite_window(p, q)
    if window is None:
        return None
    lo, hi = window
    if q.is_convex:
        p, q = q, p
    if p.is_convex:
        x = lo if q.contains(lo) else q.successor(lo)
        return x if x is not None and x <= hi else None
    if isinstance(p, Lattice) and isinstance(q, Lattice):
        # common points of two progressions repeat with their joint period
        hi = min(hi, lo + common_period((p.step, q.step)))
    if q.count_in(lo, hi) < p.count_in(lo, hi):
        p, q = q, p
    for x, _ in collect_segments([p], lo, hi):
        if q.contains(x):
            return x
    return None


class Model1D:
    """A closed subset of the line given as finitely many disjoint pieces.

    Walks scan the model left to right over runs, with every lattice
    stretch kept as one progression. Lattice tails are periodic, so
    every walk stops two periods past the anchor of the tail it enters.
    Everything on the left side is computed on the mirror image.
    """

    def __init__(self, pieces: Sequence[Piece], validated: bool = False):
        self.pieces: Tuple[Piece, ...] = tuple(pieces)
        if not validated:
            self._validate()

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Model1D':
        pieces = data.get('pieces')
        if not isinstance(pieces, list):
            raise InvalidPiece("model needs a list field 'pieces'", field='pieces')
        return cls([piece_from_dict(p, i) for i, p in enumerate(pieces)])

    def _validate(self) -> None:
        if not self.pieces:
            raise InvalidPiece("A model needs at least one piece")
        for i in range(len(self.pieces)):
            for j in range(i + 1, len(self.pieces)):
                x = shared_point(self.pieces[i], self.pieces[j])
                if x is not None:
                    raise OverlappingPieces(i, j, format_rational(x))
        if not any(p.is_convex for p in self.pieces):
            size = sum(p.count if isinstance(p, Lattice) else len(p.xs) for p in self.pieces)
            if size < 2:
                raise InvalidPiece("A model needs at least two points", points=size)

    def __repr__(self) -> str:
        return f"Model1D({list(self.pieces)!r})"

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': 'model1d', 'pieces': [p.to_dict() for p in self.pieces]}

    @cached_property
    def digest(self) -> str:
        return hashlib.sha256(json.dumps(self.to_dict(), sort_keys=True).encode('utf-8')).hexdigest()

    @property
    def lower(self) -> ExtReal:
        return min(p.lower for p in self.pieces)

    @property
    def upper(self) -> ExtReal:
        return max(p.upper for p in self.pieces)

    @property
    def is_bounded(self) -> bool:
        return self.lower > -INF and self.upper < INF

    def contains(self, x: Fraction) -> bool:
        return any(p.contains(x) for p in self.pieces)

    def require_point(self, x: Any) -> Fraction:
        x = parse_rational(x, 'point')
        if not self.contains(x):
            raise PointNotInModel(format_rational(x))
        return x

    def successor(self, r: Fraction) -> Optional[ExtReal]:
        found = [s for s in (p.successor(r) for p in self.pieces) if s is not None]
        return min(found) if found else None

    def predecessor(self, r: Fraction) -> Optional[ExtReal]:
        found = [s for s in (p.predecessor(r) for p in self.pieces) if s is not None]
        return max(found) if found else None

    def in_convex_piece(self, x: Fraction) -> bool:
        return any(p.is_convex and p.contains(x) for p in self.pieces)

    def segments(self, lo: Fraction, hi: Fraction) -> List[Segment]:
        """Every point and convex segment in [lo, hi], bounded by configuration."""
        return collect_segments(self.pieces, lo, hi)

    def runs(self, lo: Fraction, hi: Fraction) -> List[Run]:
        return walk_runs(self.pieces, lo, hi)

    def restrict(self, lo: ExtReal, hi: ExtReal) -> SymbolicRegion:
        return SymbolicRegion(self.pieces).clip(lo, hi)

    @cached_property
    def mirror(self) -> 'Model1D':
        return Model1D([p.reflect() for p in self.pieces], validated=True)

    @cached_property
    def right_tail(self) -> Tail:
        if self.upper < INF:
            return Tail(TailKind.NONE, self.upper, Fraction(0), INF)
        anchor = max(right_anchor(p) for p in self.pieces)
        unbounded = [p for p in self.pieces if p.upper == INF]
        if any(p.is_convex for p in unbounded):
            return Tail(TailKind.RAY, anchor, Fraction(0), Fraction(0))
        period = common_period(p.infinite_step for p in unbounded)
        gap = widest_gap(self.runs(anchor, anchor + 2 * period))
        logger.debug(f"Periodic right tail from {anchor}: period {period}, largest gap {gap}")
        return Tail(TailKind.PERIODIC, anchor, period, gap)

    @property
    def left_tail(self) -> Tail:
        """Left tail in mirrored coordinates (anchor negated)."""
        return self.mirror.right_tail

    def _walk_window(self, x: Fraction) -> List[Run]:
        tail = self.right_tail
        hi = tail.anchor if tail.kind is TailKind.NONE else max(x, tail.anchor) + 2 * tail.period
        return self.runs(x, hi)

    def right_gap_sup(self, x: Fraction) -> Fraction:
        """Largest gap of the model to the right of x (0 when there is none)."""
        gap = widest_gap(self._walk_window(x))
        if self.right_tail.kind is TailKind.PERIODIC:
            gap = max(gap, self.right_tail.gap)
        return gap

    def left_gap_sup(self, x: Fraction) -> Fraction:
        return self.mirror.right_gap_sup(-x)

    def right_end(self, x: Fraction, eps: Fraction) -> ExtReal:
        """Supremum of the eps-chainable component of x."""
        runs = self._walk_window(x)
        for run, following in zip(runs, runs[1:] + [None]):
            if run.widest >= eps:
                # interleaved runs repeat gaps already walked, so this is a progression
                return run.first
            if following is not None and following.first - run.last >= eps:
                return run.last
        if self.right_tail.kind is TailKind.NONE:
            return runs[-1].last
        return INF

    def left_end(self, x: Fraction, eps: Fraction) -> ExtReal:
        return -self.mirror.right_end(-x, eps)

    def core_window(self, extra: Sequence[Piece] = ()) -> Tuple[Fraction, Fraction]:
        """A finite window outside of which the model and ``extra`` only repeat.

        Extends two joint periods past the tail anchors, and one unit into
        half-lines.
        """
        pieces = self.pieces + tuple(extra)
        lo = min(left_anchor(p) for p in pieces)
        hi = max(right_anchor(p) for p in pieces)
        hi += 2 * common_period(p.infinite_step for p in pieces if p.upper == INF and p.infinite_step)
        lo -= 2 * common_period(p.infinite_step for p in pieces if p.lower == -INF and p.infinite_step)
        if any(p.is_convex and p.upper == INF for p in pieces):
            hi += 1
        if any(p.is_convex and p.lower == -INF for p in pieces):
            lo -= 1
        return lo, hi

    def representative_points(self) -> List[Fraction]:
        """Run ends over the core window, with convex midpoints and the second term of progressions."""
        lo, hi = self.core_window()
        points = set()
        for run in self.runs(lo, hi):
            points.update((run.first, run.last))
            if run.is_convex:
                points.add((run.first + run.last) / 2)
            elif run.is_progression:
                points.add(run.first + run.period)
        return sorted(points)
