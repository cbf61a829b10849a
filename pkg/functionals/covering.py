"""Covering functionals on finite spaces in parametric (k centres, m steps) form.

Every functional reports a critical value v with the contract that the
cover exists at every scale strictly above v. Covers only change at
stored distances, so v is always one of them (or 0). Testing the cover
"just above t" uses the closed relation d <= t.
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from chains.bottleneck import bottleneck_matrix
from chains.merge_tree import merge_tree
from config.config_manager import ConfigManager
from functionals.errors import BudgetInvalid, ExactTooLarge
from spaces.finite_space import FiniteMetricSpace, PointRef, PointSubset

logger = logging.getLogger(__name__)

Budget = Union[int, float]


class Mode(str, Enum):
    EXACT = "exact"
    GREEDY = "greedy"


class Exactness(str, Enum):
    EXACT = "exact"
    GREEDY_UPPER_BOUND = "greedy-upper-bound"


@dataclass(frozen=True)
class CoveringBudget:
    k: Budget = 1
    m: Budget = 1

    def __post_init__(self):
        for name in ('k', 'm'):
            value = getattr(self, name)
            if value == math.inf:
                continue
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 1:
                raise BudgetInvalid(name, value)

    def effective_k(self, subset_size: int) -> int:
        return int(min(self.k, subset_size))

    def effective_m(self, space_size: int) -> int:
        return int(min(self.m, max(space_size - 1, 1)))


@dataclass(frozen=True)
class FunctionalResult:
    functional: str
    value: float
    centers: Tuple[int, ...]
    exactness: Exactness = Exactness.EXACT


def isolation(space: FiniteMetricSpace, x: PointRef) -> float:
    """I(x) = d(x, X \\ {x})."""
    x = space.point(x)
    row = np.delete(space.dist[x], x)
    return float(row.min())


def _reach(space: FiniteMetricSpace, t: float, m: int) -> np.ndarray:
    """Row x holds the closed m-step chain ball of x at threshold t."""
    adjacent = space.dist <= t
    reach = adjacent.copy()
    for _ in range(m - 1):
        grown = reach @ adjacent
        if np.array_equal(grown, reach):
            break
        reach = grown
    return reach


def _cover_masks(reach: np.ndarray, A: PointSubset) -> List[int]:
    columns = reach[:, A.index_array]
    weights = 1 << np.arange(len(A), dtype=object)
    return [int(sum(weights[row])) for row in columns]


def _maximal(masks: Sequence[int]) -> List[int]:
    kept: List[int] = []
    for mask in sorted(set(masks) - {0}, key=lambda s: -bin(s).count('1')):
        if not any(mask | other == other for other in kept):
            kept.append(mask)
    return kept


def _coverable(masks: Sequence[int], target: int, k: int) -> bool:
    """Can at most k of the masks cover target? Layered bitmask search."""
    if target == 0:
        return True
    masks = _maximal([mask & target for mask in masks])
    if k <= 0 or not masks:
        return False
    reached = {0}
    for _ in range(min(k, len(masks))):
        layer = set()
        for partial in reached:
            for mask in masks:
                union = partial | mask
                if union == target:
                    return True
                if union != partial:
                    layer.add(union)
        if not layer:
            return False
        reached = layer
    return False


def _lex_centers(cover: List[int], target: int, k: int) -> Tuple[int, ...]:
    """Lexicographically smallest centre tuple, each centre covering something new."""
    chosen: List[int] = []
    uncovered = target
    start = 0
    while uncovered:
        for x in range(start, len(cover)):
            gained = cover[x] & uncovered
            if not gained:
                continue
            rest = uncovered & ~cover[x]
            if _coverable(cover[x + 1:], rest, k - len(chosen) - 1):
                chosen.append(x)
                uncovered = rest
                start = x + 1
                break
        else:
            raise RuntimeError("No centre completes a cover that was reported feasible")
    return tuple(chosen)


def _greedy_centers(cover: List[int], target: int, k: int) -> Optional[Tuple[int, ...]]:
    chosen: List[int] = []
    uncovered = target
    while uncovered and len(chosen) < k:
        gains = [bin(mask & uncovered).count('1') for mask in cover]
        best = int(np.argmax(gains))
        if gains[best] == 0:
            return None
        chosen.append(best)
        uncovered &= ~cover[best]
    return tuple(sorted(chosen)) if not uncovered else None


def _candidate_scales(space: FiniteMetricSpace, A: PointSubset, m: int) -> List[float]:
    if m == 1:
        values = space.dist[:, A.index_array]
    else:
        values = space.dist
    return sorted(set(float(v) for v in np.unique(values)) | {0.0})


def eta_km(A: PointSubset, k: Budget, m: Budget, mode: Mode = Mode.EXACT,
           functional: str = 'eta_km') -> FunctionalResult:
    """Smallest critical scale at which k chain balls of depth m cover A.

    Args:
        A: subset to cover; centres range over the whole space
        k: number of centres (inf allowed)
        m: chain steps per centre (inf allowed)
        mode: exact bitmask search or greedy set cover

    Returns:
        FunctionalResult; greedy results are labelled as upper bounds

    Raises:
        BudgetInvalid, ExactTooLarge
    """
    budget = CoveringBudget(k, m)
    mode = Mode(mode)
    space = A.space
    k_eff = budget.effective_k(len(A))
    m_eff = budget.effective_m(len(space))

    if k_eff >= len(A):
        return FunctionalResult(functional, 0.0, A.members, Exactness.EXACT)
    if mode is Mode.EXACT and k_eff > 1:
        bound = ConfigManager.get_max_exact()
        if len(A) > bound:
            raise ExactTooLarge(len(A), bound)

    target = (1 << len(A)) - 1
    candidates = _candidate_scales(space, A, m_eff)
    logger.debug(f"{functional}: {len(candidates)} candidate scales, k={k_eff}, m={m_eff}, mode={mode.value}")

    if mode is Mode.GREEDY:
        for t in candidates:
            cover = _cover_masks(_reach(space, t, m_eff), A)
            centers = _greedy_centers(cover, target, k_eff)
            if centers is not None:
                return FunctionalResult(functional, t, centers, Exactness.GREEDY_UPPER_BOUND)
        raise RuntimeError("Greedy cover failed at the diameter")

    def feasible(t: float) -> bool:
        cover = _cover_masks(_reach(space, t, m_eff), A)
        if k_eff == 1:
            return any(mask == target for mask in cover)
        return _coverable(cover, target, k_eff)

    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if feasible(candidates[mid]):
            hi = mid
        else:
            lo = mid + 1
    t = candidates[lo]
    cover = _cover_masks(_reach(space, t, m_eff), A)
    return FunctionalResult(functional, t, _lex_centers(cover, target, k_eff), Exactness.EXACT)


def alpha_k(A: PointSubset, k: Budget, mode: Mode = Mode.EXACT) -> FunctionalResult:
    """k open balls with centres anywhere in X; equals eta_km with m = 1."""
    mode = Mode(mode)
    if mode is Mode.EXACT:
        return eta_km(A, k, 1, Mode.EXACT, functional='alpha_k')
    budget = CoveringBudget(k, 1)
    k_eff = budget.effective_k(len(A))
    # farthest-point traversal over A, at most twice the optimum
    dist = A.space.dist
    members = A.index_array
    centers = [int(members[0])]
    reach = dist[members, centers[0]].copy()
    while len(centers) < k_eff:
        far = int(np.argmax(reach))
        if reach[far] == 0:
            break
        centers.append(int(members[far]))
        reach = np.minimum(reach, dist[members, members[far]])
    return FunctionalResult('alpha_k', float(reach.max()), tuple(sorted(centers)),
                            Exactness.GREEDY_UPPER_BOUND)


def gamma_m(A: PointSubset, m: Budget) -> FunctionalResult:
    return eta_km(A, 1, m, Mode.EXACT, functional='gamma_m')


def gamma_star(A: PointSubset) -> FunctionalResult:
    """min over x of max over a of c(x, a)."""
    c = bottleneck_matrix(A.space).c
    worst = c[:, A.index_array].max(axis=1)
    x = int(np.argmin(worst))
    return FunctionalResult('gamma_star', float(worst[x]), (x,), Exactness.EXACT)


def eta_star_k(A: PointSubset, k: Budget) -> FunctionalResult:
    """Smallest merge scale above which A meets at most k components.

    Exact for every k: components partition X, so k of them cover A
    iff A meets at most k classes.
    """
    budget = CoveringBudget(k, 1)
    tree = merge_tree(A.space)
    for level in range(len(tree.scales) + 1):
        classes = tree.classes_meeting(A, level)
        if len(classes) <= budget.k:
            value = 0.0 if level == 0 else tree.scales[level - 1]
            return FunctionalResult('eta_star_k', value, tuple(classes), Exactness.EXACT)
    raise RuntimeError("Merge tree did not end in a single class")


def unbounded_functionals(A: PointSubset) -> Dict[str, float]:
    """The functionals with both budgets left unbounded.

    On a finite space one centre per point covers at any scale, so alpha,
    eta and eta* vanish; gamma keeps a single centre and equals gamma*.
    """
    return {
        'alpha': 0.0,
        'eta': 0.0,
        'eta_star': 0.0,
        'gamma': gamma_star(A).value,
    }

