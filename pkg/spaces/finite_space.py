import hashlib
import json
import logging
import math
from dataclasses import dataclass, field
from numbers import Real
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.spatial.distance import cdist

from config.config_manager import ConfigManager
from spaces.errors import (
    Asymmetry,
    CoincidentPoints,
    InvalidMetric,
    InvalidSubset,
    MixedSpaces,
    NegativeDistance,
    NonFiniteDistance,
    NonpositiveScale,
    NonzeroDiagonal,
    ShapeMismatch,
    SizeOverflow,
    TooFewPoints,
    TriangleViolation,
)

logger = logging.getLogger(__name__)

PointRef = Union[int, str]

COORDINATE_METRICS = {
    'euclidean': 'euclidean',
    'chebyshev': 'chebyshev',
    'manhattan': 'cityblock',
}


class FiniteMetricSpace:
    """A validated finite metric space.

    Build instances through ``validate_metric`` (or the coordinate and
    product helpers that call it); the constructor itself trusts its input.
    The distance matrix is read-only, so spaces can be shared freely.
    """

    def __init__(self, labels: Sequence[Any], dist: np.ndarray,
                 provenance: Optional[Dict[str, Any]] = None):
        self._labels = tuple(str(label) for label in labels)
        matrix = np.array(dist, dtype=float, copy=True)
        matrix.setflags(write=False)
        self._dist = matrix
        self._index = {label: i for i, label in enumerate(self._labels)}
        self._provenance = dict(provenance or {})
        self._digest = None
        self._derived: Dict[str, Any] = {}

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def dist(self) -> np.ndarray:
        return self._dist

    @property
    def provenance(self) -> Dict[str, Any]:
        return dict(self._provenance)

    def __len__(self) -> int:
        return len(self._labels)

    def __repr__(self) -> str:
        return f"FiniteMetricSpace(n={len(self)}, digest={self.digest[:12]})"

    @property
    def digest(self) -> str:
        if self._digest is None:
            h = hashlib.sha256()
            h.update(json.dumps(self._labels).encode('utf-8'))
            h.update(np.ascontiguousarray(self._dist).tobytes())
            self._digest = h.hexdigest()
        return self._digest

    def derived(self, key: str, build: Callable[['FiniteMetricSpace'], Any]) -> Any:
        """``build(self)``, computed once and kept on this space."""
        if key not in self._derived:
            self._derived[key] = build(self)
        return self._derived[key]

    def point(self, ref: PointRef) -> int:
        """Resolve a point given by index or by label."""
        if isinstance(ref, (bool, np.bool_)):
            raise InvalidSubset(f"Invalid point reference: {ref!r}", ref=str(ref))
        if isinstance(ref, (int, np.integer)):
            index = int(ref)
            if 0 <= index < len(self):
                return index
            raise InvalidSubset(f"Point index {index} out of range for {len(self)} points", ref=index)
        if isinstance(ref, str) and ref in self._index:
            return self._index[ref]
        raise InvalidSubset(f"Unknown point label: {ref!r}", ref=str(ref))

    def subset(self, members: Iterable[PointRef]) -> 'PointSubset':
        return PointSubset(self, tuple(self.point(m) for m in members))

    def full(self) -> 'PointSubset':
        return PointSubset(self, tuple(range(len(self))))

    def diameter(self) -> float:
        return float(self._dist.max())

    def distinct_distances(self) -> np.ndarray:
        """Sorted distinct stored distances, 0 included."""
        return np.unique(self._dist)


@dataclass(frozen=True)
class PointSubset:
    space: FiniteMetricSpace = field(repr=False)
    members: Tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(set(int(m) for m in self.members)))
        if not members:
            raise InvalidSubset("Subsets must be non-empty")
        n = len(self.space)
        for m in members:
            if not 0 <= m < n:
                raise InvalidSubset(f"Point index {m} out of range for {n} points", ref=m)
        object.__setattr__(self, 'members', members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, index: object) -> bool:
        return index in self.members

    @property
    def index_array(self) -> np.ndarray:
        return np.asarray(self.members, dtype=int)

    @property
    def labels(self) -> List[str]:
        return [self.space.labels[m] for m in self.members]

    def mask(self) -> np.ndarray:
        result = np.zeros(len(self.space), dtype=bool)
        result[list(self.members)] = True
        return result

    def issubset(self, other: 'PointSubset') -> bool:
        _same_space(self, other)
        return set(self.members) <= set(other.members)

    def union(self, other: 'PointSubset') -> 'PointSubset':
        _same_space(self, other)
        return PointSubset(self.space, self.members + other.members)


def require_scale(eps: Real) -> float:
    try:
        value = float(eps)
    except (TypeError, ValueError):
        raise NonpositiveScale(eps)
    if math.isnan(value) or value <= 0:
        raise NonpositiveScale(eps)
    return value


def _same_space(a: PointSubset, b: PointSubset) -> None:
    if a.space is not b.space:
        raise MixedSpaces()


def _first_flat(mask: np.ndarray) -> Optional[int]:
    if not mask.any():
        return None
    return int(np.argmax(mask.ravel()))


def validate_metric(labels: Sequence[Any], matrix: Any,
                    provenance: Optional[Dict[str, Any]] = None,
                    rtol: Optional[float] = None) -> FiniteMetricSpace:
    """Check the metric axioms and build a space.

    Args:
        labels: point identifiers, one per row
        matrix: square distance matrix (nested lists or ndarray)
        provenance: optional metadata carried by the space
        rtol: relative slack for the triangle check, defaults to configuration

    Returns:
        The validated FiniteMetricSpace

    Raises:
        InvalidMetric subclass naming the first violated axiom and its witness indices
    """
    labels = list(labels)
    try:
        arr = np.array(matrix, dtype=float)
    except (TypeError, ValueError) as e:
        raise ShapeMismatch(f"Distance matrix is not a numeric array: {e}")
    n = len(labels)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ShapeMismatch(f"Distance matrix must be square, got shape {arr.shape}", shape=list(arr.shape))
    if arr.shape[0] != n:
        raise ShapeMismatch(f"{n} labels for a {arr.shape[0]}x{arr.shape[0]} matrix",
                            labels=n, rows=int(arr.shape[0]))
    if n < 2:
        raise TooFewPoints(n)
    if len(set(str(label) for label in labels)) != n:
        raise InvalidMetric("Point labels must be distinct")

    bad = _first_flat(~np.isfinite(arr))
    if bad is not None:
        raise NonFiniteDistance(*divmod(bad, n))

    eye = np.eye(n, dtype=bool)
    checks = [
        ('negative', arr < 0),
        ('diagonal', eye & (arr != 0)),
        ('asymmetry', np.triu(arr != arr.T, k=1)),
        ('coincident', ~eye & (arr == 0)),
    ]
    first = None
    for order, (name, mask) in enumerate(checks):
        flat = _first_flat(mask)
        if flat is not None and (first is None or (flat, order) < first[:2]):
            first = (flat, order, name)
    if first is not None:
        i, j = divmod(first[0], n)
        name = first[2]
        if name == 'negative':
            raise NegativeDistance(i, j, float(arr[i, j]))
        if name == 'diagonal':
            raise NonzeroDiagonal(i, float(arr[i, i]))
        if name == 'asymmetry':
            raise Asymmetry(i, j, float(arr[i, j]), float(arr[j, i]))
        raise CoincidentPoints(i, j)

    if rtol is None:
        rtol = ConfigManager.get_triangle_rtol()
    slack = rtol * float(arr.max())
    for j in range(n):
        detour = arr[:, j][:, None] + arr[j, :][None, :]
        flat = _first_flat(arr > detour + slack)
        if flat is not None:
            i, k = divmod(flat, n)
            raise TriangleViolation(i, j, k, float(arr[i, k]), float(detour[i, k]))

    return FiniteMetricSpace(labels, arr, provenance)


def from_coordinates(coords: Any, metric: str = 'euclidean',
                     labels: Optional[Sequence[Any]] = None,
                     provenance: Optional[Dict[str, Any]] = None) -> FiniteMetricSpace:
    if metric not in COORDINATE_METRICS:
        raise InvalidMetric(f"Unsupported coordinate metric: {metric}", metric=metric)
    try:
        points = np.array(coords, dtype=float)
    except (TypeError, ValueError) as e:
        raise ShapeMismatch(f"Coordinates are not a numeric array: {e}")
    if points.ndim == 1:
        points = points[:, None]
    if points.ndim != 2:
        raise ShapeMismatch(f"Coordinates must be a list of points, got shape {points.shape}")
    if labels is None:
        labels = [str(i) for i in range(points.shape[0])]
    matrix = cdist(points, points, metric=COORDINATE_METRICS[metric])
    return validate_metric(labels, matrix, provenance=provenance)


def enlargement(A: PointSubset, eps: Real) -> PointSubset:
    """A^eps = {y : d(y, A) < eps}; strict."""
    eps = require_scale(eps)
    gap = A.space.dist[:, A.index_array].min(axis=1)
    return PointSubset(A.space, tuple(np.flatnonzero(gap < eps)))


def point_gap(space: FiniteMetricSpace, y: int, A: PointSubset) -> float:
    return float(space.dist[y, A.index_array].min())


def hausdorff(A: PointSubset, B: PointSubset) -> float:
    _same_space(A, B)
    block = A.space.dist[np.ix_(A.index_array, B.index_array)]
    return float(max(block.min(axis=1).max(), block.min(axis=0).max()))


def set_gap(A: PointSubset, B: PointSubset) -> float:
    _same_space(A, B)
    return float(A.space.dist[np.ix_(A.index_array, B.index_array)].min())


def box_product(X: FiniteMetricSpace, Y: FiniteMetricSpace,
                max_size: Optional[int] = None) -> FiniteMetricSpace:
    """X x Y with the box metric max(d1, d2).

    The point (i, j) sits at index i * |Y| + j.
    """
    if max_size is None:
        max_size = ConfigManager.get_max_product_size()
    n, m = len(X), len(Y)
    if n * m > max_size:
        raise SizeOverflow(n * m, max_size)
    product = np.maximum(X.dist[:, None, :, None], Y.dist[None, :, None, :]).reshape(n * m, n * m)
    labels = [f"({x},{y})" for x in X.labels for y in Y.labels]
    logger.debug(f"Box product of {n} and {m} points")
    return validate_metric(labels, product,
                           provenance={'product': [X.digest, Y.digest]})
