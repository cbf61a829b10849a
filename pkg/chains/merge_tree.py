import bisect
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Set, Tuple

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from chains.bottleneck import bottleneck_matrix
from spaces.finite_space import FiniteMetricSpace, PointSubset, require_scale

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MergeEvent:
    """Components merging at one scale.

    ``joined`` lists, for every class formed at this scale, the
    representatives (smallest index) of the classes it absorbed.
    """

    scale: float
    joined: Tuple[Tuple[int, ...], ...]


class MergeTree:
    """Single-linkage dendrogram over the bottleneck distances.

    Level k is the partition after the first k events; the classes at
    scale eps (relation c < eps) are level ``bisect_left(scales, eps)``.
    Class ids are the smallest member index.
    """

    def __init__(self, space: FiniteMetricSpace, events: Tuple[MergeEvent, ...],
                 levels: List[np.ndarray]):
        self.space = space
        self.events = events
        self.scales = [event.scale for event in events]
        self._levels = levels
        for level in levels:
            level.setflags(write=False)

    def level_below(self, eps: float) -> int:
        """Level holding the classes of c(x, y) < eps."""
        return bisect.bisect_left(self.scales, eps)

    def level_at_most(self, t: float) -> int:
        """Level holding the classes of c(x, y) <= t."""
        return bisect.bisect_right(self.scales, t)

    def labels(self, level: int) -> np.ndarray:
        return self._levels[level]

    def labels_at(self, eps: float) -> np.ndarray:
        return self._levels[self.level_below(require_scale(eps))]

    def partition(self, eps: float) -> List[Tuple[int, ...]]:
        labels = self.labels_at(eps)
        classes: Dict[int, List[int]] = defaultdict(list)
        for i, label in enumerate(labels):
            classes[int(label)].append(i)
        return [tuple(members) for _, members in sorted(classes.items())]

    def component(self, x: int, eps: float) -> PointSubset:
        labels = self.labels_at(eps)
        return PointSubset(self.space, tuple(np.flatnonzero(labels == labels[x])))

    def classes_meeting(self, A: PointSubset, level: int) -> List[int]:
        return sorted(set(int(label) for label in self._levels[level][A.index_array]))


def merge_tree(space: FiniteMetricSpace) -> MergeTree:
    return space.derived('merge_tree', _build)


def _build(space: FiniteMetricSpace) -> MergeTree:
    n = len(space)
    edges = bottleneck_matrix(space).edges
    forest = DisjointSet(range(n))
    labels = np.arange(n)
    levels = [labels.copy()]
    events: List[MergeEvent] = []

    i = 0
    while i < len(edges):
        scale = edges[i].weight
        group = []
        while i < len(edges) and edges[i].weight == scale:
            group.append(edges[i])
            forest.merge(edges[i].u, edges[i].v)
            i += 1
        previous = labels
        labels = previous.copy()
        for subset in forest.subsets():
            rep = min(subset)
            for member in subset:
                labels[member] = rep
        joined: Dict[int, Set[int]] = defaultdict(set)
        for edge in group:
            joined[int(labels[edge.u])].update((int(previous[edge.u]), int(previous[edge.v])))
        events.append(MergeEvent(scale, tuple(tuple(sorted(reps)) for _, reps in sorted(joined.items()))))
        levels.append(labels)

    logger.debug(f"Merge tree over {n} points with {len(events)} events")
    return MergeTree(space, tuple(events), levels)
