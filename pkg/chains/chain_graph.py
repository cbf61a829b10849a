import logging
from dataclasses import dataclass, field
from numbers import Real
from typing import Tuple

import numpy as np

from chains.bottleneck import bottleneck_matrix
from chains.errors import InvalidChainLength, NotJoinable
from chains.merge_tree import merge_tree
from spaces.finite_space import FiniteMetricSpace, PointRef, PointSubset, require_scale

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Chain:
    """An eps-chain x0, ..., xn; its length counts steps."""

    space: FiniteMetricSpace = field(repr=False, compare=False)
    points: Tuple[int, ...]
    scale: float

    def __post_init__(self):
        if not self.points:
            raise ValueError("A chain has at least one point")
        for a, b in zip(self.points, self.points[1:]):
            if not self.space.dist[a, b] < self.scale:
                raise ValueError(f"Step {a}->{b} has length {self.space.dist[a, b]} >= {self.scale}")

    @property
    def length(self) -> int:
        return len(self.points) - 1

    @property
    def labels(self):
        return [self.space.labels[p] for p in self.points]


def _check_steps(m) -> int:
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 1:
        raise InvalidChainLength(m)
    return int(m)


def chain_ball(space: FiniteMetricSpace, x: PointRef, eps: Real, m: int) -> PointSubset:
    """S^m(x, eps): points reached from x by an eps-chain of at most m steps."""
    x = space.point(x)
    eps = require_scale(eps)
    m = _check_steps(m)
    adjacent = space.dist < eps
    reached = adjacent[x].copy()
    for _ in range(m - 1):
        grown = adjacent[reached].any(axis=0)
        if np.array_equal(grown, reached):
            break
        reached = grown
    return PointSubset(space, tuple(np.flatnonzero(reached)))


def chain_component(space: FiniteMetricSpace, x: PointRef, eps: Real) -> PointSubset:
    """S^inf(x, eps) = {y : c(x, y) < eps}."""
    return merge_tree(space).component(space.point(x), require_scale(eps))


def witness_chain(space: FiniteMetricSpace, x: PointRef, y: PointRef, eps: Real) -> Chain:
    x, y = space.point(x), space.point(y)
    eps = require_scale(eps)
    bm = bottleneck_matrix(space)
    c_value = bm.value(x, y)
    if not c_value < eps:
        raise NotJoinable(x, y, c_value, eps)
    return Chain(space, tuple(bm.tree_path(x, y)), eps)
