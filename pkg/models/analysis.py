"""Exact pointwise functionals and regions on a Model1D.

For x in M let G_R(x) be the largest gap of M to the right of x (inf when
M is bounded above) and G_L(x) the same to the left. The eps-component of
x is bounded iff eps <= min(G_L(x), G_R(x)), and components are closed in
a closed subset of the line, so f_c(x) = min(G_L(x), G_R(x)). G_R is
non-increasing and G_L non-decreasing along M.
"""
import logging
from fractions import Fraction
from typing import Any, Optional, Tuple

from models.arith import common_period, parse_rational
from models.model import Model1D, TailKind
from models.pieces import Lattice, Piece
from models.region import SymbolicRegion
from models.walk import Run, collect_segments
from spaces.errors import NonpositiveScale
from spaces.ext_real import INF, ExtReal

logger = logging.getLogger(__name__)


def require_model_scale(eps: Any) -> Fraction:
    try:
        value = parse_rational(eps, 'scale')
    except ValueError:
        raise NonpositiveScale(eps)
    if value <= 0:
        raise NonpositiveScale(eps)
    return value


def reach_right(M: Model1D, x: Fraction) -> ExtReal:
    """G_R(x)."""
    if M.upper < INF:
        return INF
    return M.right_gap_sup(x)


def reach_left(M: Model1D, x: Fraction) -> ExtReal:
    if M.lower > -INF:
        return INF
    return M.left_gap_sup(x)


def f_c(M: Model1D, x: Any) -> ExtReal:
    x = M.require_point(x)
    return min(reach_left(M, x), reach_right(M, x))


def nu(M: Model1D, x: Any) -> ExtReal:
    """Closed balls of a closed subset of the line are compact."""
    M.require_point(x)
    return INF


def isolation(M: Model1D, x: Any) -> ExtReal:
    x = M.require_point(x)
    if M.in_convex_piece(x):
        return Fraction(0)
    gaps = []
    above, below = M.successor(x), M.predecessor(x)
    if above is not None:
        gaps.append(above - x)
    if below is not None:
        gaps.append(x - below)
    return min(gaps, default=INF)


def model_component(M: Model1D, x: Any, eps: Any) -> SymbolicRegion:
    """The eps-chainable component of x (steps strictly shorter than eps)."""
    x = M.require_point(x)
    eps = require_model_scale(eps)
    lo, hi = M.left_end(x, eps), M.right_end(x, eps)
    logger.debug(f"Component of {x} at {eps}: [{lo}, {hi}]")
    return M.restrict(lo, hi)


def nslc(M: Model1D) -> SymbolicRegion:
    """Ker f_c: G_R(x) = 0 forces [x, inf) into M, hence into one unbounded convex piece."""
    return SymbolicRegion([p for p in M.pieces if p.is_convex and not p.is_bounded])


def limit_points(M: Model1D) -> SymbolicRegion:
    return SymbolicRegion([p for p in M.pieces if p.is_convex])


def tail_reach(M: Model1D, side: str) -> ExtReal:
    """Limit of G_R at +inf (side "right") or of G_L at -inf."""
    tail = M.right_tail if side == 'right' else M.left_tail
    if tail.kind is TailKind.NONE:
        return INF
    return tail.gap


def inf_fc(M: Model1D, region: SymbolicRegion) -> ExtReal:
    """Exact infimum of f_c over a closed region contained in M (inf when empty)."""
    if region.is_empty:
        return INF
    lo, hi = region.lower, region.upper
    right = tail_reach(M, 'right') if hi == INF else reach_right(M, hi)
    left = tail_reach(M, 'left') if lo == -INF else reach_left(M, lo)
    return min(left, right)


def fc_region_infimum(M: Model1D) -> ExtReal:
    return inf_fc(M, SymbolicRegion(M.pieces))


def outside_unbounded_convex(M: Model1D) -> Optional[Tuple[ExtReal, ExtReal]]:
    """Closed window holding M \\ nslc(M); None when that set is empty.

    nslc is at most a left half-line and a right half-line (or the whole
    line), and the nearest points of M beyond them are isolated from them.
    """
    lo, hi = -INF, INF
    for piece in nslc(M).pieces:
        if piece.lower == -INF and piece.upper == INF:
            return None
        if piece.lower == -INF:
            lo = M.successor(piece.upper)
        else:
            hi = M.predecessor(piece.lower)
        if lo is None or hi is None:
            return None
    return (lo, hi) if lo <= hi else None


def _least_isolation(M: Model1D, piece: Piece, run: Run) -> ExtReal:
    """Infimum of I over the isolated points of ``piece`` that lie in ``run``."""
    best: ExtReal = INF
    for x in {run.first, run.last}:
        if piece.contains(x) and not M.in_convex_piece(x):
            best = min(best, isolation(M, x))
    if run.is_progression:
        # inner terms sit one period from both neighbours
        if piece.clip(run.first + run.period, run.last - run.period) is not None:
            best = min(best, run.period)
    elif run.period > 0:
        lo, hi = max(run.first, piece.lower), run.last
        if isinstance(piece, Lattice):
            hi = min(hi, lo + common_period((run.period, piece.step)))
        for x, _ in collect_segments([piece], lo, hi):
            best = min(best, isolation(M, x))
    return best


def isolation_infimum(M: Model1D, region: Optional[SymbolicRegion] = None) -> ExtReal:
    """Infimum of I over the points of ``region`` (default M) lying off the limit points.

    Only isolated points of M contribute; beyond the core window they repeat
    with the tail periods, so the scan is exhaustive.
    """
    region = region if region is not None else SymbolicRegion(M.pieces)
    lo, hi = M.core_window(region.pieces)
    runs = [run for run in M.runs(lo, hi) if not run.is_convex]
    best: ExtReal = INF
    for piece in region.pieces:
        if piece.is_convex:
            continue
        for run in runs:
            if run.last < piece.lower or run.first > piece.upper:
                continue
            best = min(best, _least_isolation(M, piece, run))
    return best
