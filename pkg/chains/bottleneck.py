import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from scipy.sparse.csgraph import minimum_spanning_tree

from spaces.finite_space import FiniteMetricSpace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TreeEdge:
    weight: float
    u: int
    v: int


class BottleneckMatrix:
    """Minimax chain distances c(x, y).

    c(x, y) is the largest edge on the tree path between x and y in a
    minimum spanning tree of the complete distance graph, so every value
    is a stored distance and y is eps-chainable to x iff c(x, y) < eps.
    """

    def __init__(self, c: np.ndarray, edges: Tuple[TreeEdge, ...]):
        c.setflags(write=False)
        self.c = c
        self.edges = edges
        self._adjacency = _tree_adjacency(len(c), edges)

    def value(self, x: int, y: int) -> float:
        return float(self.c[x, y])

    def tree_path(self, x: int, y: int) -> List[int]:
        """Vertices on the spanning-tree path from x to y, both included."""
        parent = {x: None}
        stack = [x]
        while stack:
            u = stack.pop()
            if u == y:
                break
            for v, _ in self._adjacency[u]:
                if v not in parent:
                    parent[v] = u
                    stack.append(v)
        path = [y]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        path.reverse()
        return path


def _tree_adjacency(n: int, edges: Tuple[TreeEdge, ...]) -> List[List[Tuple[int, float]]]:
    adjacency: List[List[Tuple[int, float]]] = [[] for _ in range(n)]
    for edge in edges:
        adjacency[edge.u].append((edge.v, edge.weight))
        adjacency[edge.v].append((edge.u, edge.weight))
    return adjacency


def bottleneck_matrix(space: FiniteMetricSpace) -> BottleneckMatrix:
    return space.derived('bottleneck', _build)


def _build(space: FiniteMetricSpace) -> BottleneckMatrix:
    n = len(space)
    tree = minimum_spanning_tree(space.dist).tocoo()
    edges = tuple(sorted(
        (TreeEdge(float(w), int(min(u, v)), int(max(u, v)))
         for u, v, w in zip(tree.row, tree.col, tree.data)),
        key=lambda e: (e.weight, e.u, e.v),
    ))
    adjacency = _tree_adjacency(n, edges)

    c = np.zeros((n, n), dtype=float)
    for root in range(n):
        row = c[root]
        visited = np.zeros(n, dtype=bool)
        visited[root] = True
        stack = [root]
        while stack:
            u = stack.pop()
            for v, w in adjacency[u]:
                if not visited[v]:
                    visited[v] = True
                    row[v] = max(row[u], w)
                    stack.append(v)
    logger.debug(f"Bottleneck matrix over {n} points from {len(edges)} tree edges")
    return BottleneckMatrix(c, edges)
