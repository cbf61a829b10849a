from itertools import combinations
from typing import Optional

from lab.errors import TooLarge
from lab.oracles.components import oracle_chain_ball, oracle_chain_component
from spaces.finite_space import FiniteMetricSpace, PointSubset

MAX_POINTS = 10
MAX_CENTERS = 3


def oracle_kcenter(X: FiniteMetricSpace, A: PointSubset, k: int, m: Optional[int]) -> float:
    """Exhaustive optimum of the k-centre chain-ball cover of A.

    m = 1 gives alpha_k, finite m gives eta_{k,m} and m = None (unbounded
    chains) gives eta*_k. Every stored distance t is tried in increasing
    order by testing the strict cover at a scale strictly between t and
    the next stored distance.
    """
    if len(X) > MAX_POINTS:
        raise TooLarge('oracle_kcenter points', len(X), MAX_POINTS)
    if k > MAX_CENTERS:
        raise TooLarge('oracle_kcenter centres', k, MAX_CENTERS)
    candidates = sorted(set(float(v) for v in X.dist.ravel()))
    targets = set(A.members)
    for i, t in enumerate(candidates):
        nxt = candidates[i + 1] if i + 1 < len(candidates) else t + 1.0
        eps = (t + nxt) / 2
        if m is None:
            balls = [set(oracle_chain_component(X, c, eps).members) for c in range(len(X))]
        else:
            balls = [set(oracle_chain_ball(X, c, eps, m).members) for c in range(len(X))]
        for size in range(1, min(k, len(X)) + 1):
            for centers in combinations(range(len(X)), size):
                if targets <= set().union(*(balls[c] for c in centers)):
                    return t
    raise RuntimeError("No cover found above the diameter")
