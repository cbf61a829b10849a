"""Walks over the points of a model inside a finite window.

A walk lists the model as runs ordered by their first point. Lattice
stretches stay symbolic, so a walk costs one run per piece and
breakpoint, however many lattice points the window holds. Consecutive
runs may share an endpoint; distinct model points are a positive
distance apart, so a zero gap between runs only repeats a point.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import chain
from typing import Iterable, List

from config.config_manager import ConfigManager
from models.arith import common_period
from models.errors import ModelTooLarge
from models.pieces import Lattice, Piece, Segment
from spaces.ext_real import format_rational

logger = logging.getLogger(__name__)


def count_limit() -> int:
    return ConfigManager.get_max_model_points()


def collect_segments(pieces: Iterable[Piece], lo: Fraction, hi: Fraction) -> List[Segment]:
    """Sorted segments of every piece inside [lo, hi], bounded by configuration."""
    pieces = list(pieces)
    bound = count_limit()
    total = sum(p.count_in(lo, hi) for p in pieces)
    if total > bound:
        raise ModelTooLarge(total, bound)
    segments: List[Segment] = []
    for piece in pieces:
        segments.extend(piece.segments(lo, hi))
    segments.sort()
    return segments


@dataclass(frozen=True, order=True)
class Run:
    """Model points from ``first`` to ``last`` taken as one step of a walk.

    ``period`` is 0 for a single point or a convex segment. Otherwise the
    points of the run repeat with ``period`` and consecutive ones lie at
    most ``widest`` apart.
    """

    first: Fraction
    last: Fraction
    period: Fraction = Fraction(0)
    widest: Fraction = Fraction(0)

    @classmethod
    def progression(cls, first: Fraction, last: Fraction, step: Fraction) -> 'Run':
        if first == last:
            return cls(first, last)
        return cls(first, last, step, step)

    @property
    def is_convex(self) -> bool:
        return self.period == 0 and self.first < self.last

    @property
    def is_progression(self) -> bool:
        """A gap as long as the period leaves one point per period."""
        return self.period > 0 and self.widest == self.period


def _progression(piece: Lattice, lo: Fraction, hi: Fraction) -> List[Run]:
    part = piece.clip(lo, hi)
    if part is None:
        return []
    return [Run.progression(part.lower, part.upper, part.step)]


def _interleaved(active: List[Lattice], u: Fraction, v: Fraction) -> List[Run]:
    """Several lattices spanning all of [u, v]; their union repeats with the joint period.

    Every gap of the union shows up within two periods of u, so only both
    ends are enumerated and the stretch between them becomes one run.
    """
    period = common_period(p.step for p in active)
    if v - u <= 4 * period:
        return [Run(a, a) for a, _ in collect_segments(active, u, v)]
    head = collect_segments(active, u, u + 2 * period)
    tail = collect_segments(active, v - 2 * period, v)
    gaps = [b[0] - a[0] for a, b in zip(head, head[1:])]
    middle = Run(head[-1][0], tail[0][0], period, max(gaps))
    logger.debug(f"Interleaved lattices on [{format_rational(u)}, {format_rational(v)}] "
                 f"repeat every {format_rational(period)}")
    return [Run(a, a) for a, _ in head] + [middle] + [Run(a, a) for a, _ in tail]


def walk_runs(pieces: Iterable[Piece], lo: Fraction, hi: Fraction) -> List[Run]:
    """Runs covering the pieces inside the finite window [lo, hi], in order."""
    runs: List[Run] = []
    lattices: List[Lattice] = []
    for piece in pieces:
        part = piece.clip(lo, hi)
        if part is None:
            continue
        if isinstance(part, Lattice) and part.count > 1:
            lattices.append(part)
        else:
            runs.extend(Run(a, b) for a, b in part.segments(lo, hi))
    if lattices:
        # between consecutive breakpoints the set of lattices present is fixed
        breaks = sorted(set(chain.from_iterable((r.first, r.last) for r in runs))
                        | set(chain.from_iterable((p.lower, p.upper) for p in lattices)))
        for u, v in zip(breaks, breaks[1:]):
            active = [p for p in lattices if p.lower <= u and v <= p.upper]
            if len(active) == 1:
                runs.extend(_progression(active[0], u, v))
            elif active:
                runs.extend(_interleaved(active, u, v))
    runs.sort()
    return runs


def widest_gap(runs: List[Run]) -> Fraction:
    """Largest distance between consecutive model points along a walk."""
    between = (b.first - a.last for a, b in zip(runs, runs[1:]))
    return max(chain((r.widest for r in runs), between), default=Fraction(0))
