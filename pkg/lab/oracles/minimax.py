from config.config_manager import ConfigManager
from lab.errors import TooLarge
from spaces.ext_real import INF, ExtReal
from spaces.finite_space import FiniteMetricSpace, PointRef


def oracle_minimax(X: FiniteMetricSpace, x: PointRef, y: PointRef) -> ExtReal:
    """Smallest possible largest step over all simple paths from x to y.

    Depth-first enumeration of paths. A branch is cut once its running
    maximum reaches the best value found, or reaches a node no lower than
    an earlier visit did; any walk shortens to a simple path with no
    larger step, so neither cut loses the optimum.
    """
    bound = ConfigManager.get_oracle_max_points()
    if len(X) > bound:
        raise TooLarge('oracle_minimax', len(X), bound)
    source, target = X.point(x), X.point(y)
    if source == target:
        return 0.0
    best = [INF]
    reached = [INF] * len(X)

    def walk(u: int, visited: frozenset, worst: float) -> None:
        if worst >= best[0] or worst >= reached[u]:
            return
        reached[u] = worst
        if u == target:
            best[0] = worst
            return
        for v in range(len(X)):
            if v not in visited:
                walk(v, visited | {v}, max(worst, float(X.dist[u, v])))

    walk(source, frozenset({source}), 0.0)
    return best[0]
