from collections import deque
from numbers import Real

from spaces.finite_space import FiniteMetricSpace, PointRef, PointSubset, require_scale


def oracle_chain_component(X: FiniteMetricSpace, x: PointRef, eps: Real) -> PointSubset:
    """Breadth-first closure of x over the edges d < eps."""
    start = X.point(x)
    eps = require_scale(eps)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in range(len(X)):
            if v not in seen and X.dist[u, v] < eps:
                seen.add(v)
                queue.append(v)
    return PointSubset(X, tuple(seen))


def oracle_chain_ball(X: FiniteMetricSpace, x: PointRef, eps: Real, m: int) -> PointSubset:
    """Points within m breadth-first levels of x over the edges d < eps."""
    start = X.point(x)
    eps = require_scale(eps)
    depth = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        if depth[u] == m:
            continue
        for v in range(len(X)):
            if v not in depth and X.dist[u, v] < eps:
                depth[v] = depth[u] + 1
                queue.append(v)
    return PointSubset(X, tuple(depth))
