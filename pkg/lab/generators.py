"""Seed-deterministic random instances for the property suites."""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

import numpy as np
from scipy.sparse.csgraph import shortest_path

from lab.errors import InvalidGeneratorConfig
from models.model import Model1D
from models.pieces import FullLine, Interval, Lattice, Piece, Points, Ray
from models.subset import SubsetSpec
from spaces.ext_real import INF
from spaces.finite_space import FiniteMetricSpace, PointSubset, from_coordinates, validate_metric

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int
    kind: str = 'collinear'
    size: int = 6
    scale_range: Tuple[float, float] = (1.0, 10.0)
    dim: int = 2

    def __post_init__(self):
        if self.kind not in SPACE_KINDS:
            raise InvalidGeneratorConfig(f"Unknown space kind {self.kind!r}", kind=self.kind)
        if self.size < 2:
            raise InvalidGeneratorConfig(f"size must be at least 2, got {self.size}", size=self.size)
        lo, hi = self.scale_range
        if not 0 < lo <= hi:
            raise InvalidGeneratorConfig(f"scale_range must satisfy 0 < lo <= hi, got {self.scale_range}")
        if self.dim < 1:
            raise InvalidGeneratorConfig(f"dim must be positive, got {self.dim}")


def _collinear(rng: np.random.Generator, config: GeneratorConfig) -> FiniteMetricSpace:
    lo, hi = config.scale_range
    span = max(int(math.ceil(hi * config.size)), config.size)
    coords = np.sort(rng.choice(span + 1, size=config.size, replace=False)) + int(lo)
    return from_coordinates(coords, provenance={'kind': 'collinear', 'seed': config.seed})


def _euclidean_cloud(rng: np.random.Generator, config: GeneratorConfig) -> FiniteMetricSpace:
    lo, hi = config.scale_range
    coords = rng.uniform(lo, hi, size=(config.size, config.dim))
    return from_coordinates(coords, provenance={'kind': 'euclidean-cloud', 'seed': config.seed})


def _graph_shortest_path(rng: np.random.Generator, config: GeneratorConfig) -> FiniteMetricSpace:
    n = config.size
    lo, hi = config.scale_range
    weights = np.triu(rng.integers(max(int(lo), 1), max(int(hi), 1) + 1, size=(n, n)), k=1)
    keep = np.triu(rng.random((n, n)) < 0.5, k=1)
    keep = keep | keep.T
    # a random Hamiltonian path keeps the graph connected
    order = rng.permutation(n)
    keep[order[:-1], order[1:]] = True
    keep[order[1:], order[:-1]] = True
    graph = np.where(keep, weights + weights.T, 0).astype(float)
    dist = shortest_path(graph, directed=False)
    return validate_metric([str(i) for i in range(n)], dist,
                           provenance={'kind': 'random-graph-shortest-path', 'seed': config.seed})


def _perturbed_lattice(rng: np.random.Generator, config: GeneratorConfig) -> FiniteMetricSpace:
    lo, hi = config.scale_range
    side = int(math.ceil(math.sqrt(config.size)))
    grid = np.array([(i, j) for i in range(side) for j in range(side)], dtype=float)[:config.size]
    coords = grid * hi + rng.uniform(-lo / 4, lo / 4, size=grid.shape)
    return from_coordinates(coords, provenance={'kind': 'perturbed-lattice', 'seed': config.seed})


SPACE_KINDS: Dict[str, Callable[[np.random.Generator, GeneratorConfig], FiniteMetricSpace]] = {
    'collinear': _collinear,
    'euclidean-cloud': _euclidean_cloud,
    'random-graph-shortest-path': _graph_shortest_path,
    'perturbed-lattice': _perturbed_lattice,
}


def gen_space(config: GeneratorConfig) -> FiniteMetricSpace:
    rng = np.random.default_rng(config.seed)
    space = SPACE_KINDS[config.kind](rng, config)
    logger.debug(f"Generated {config.kind} space of {len(space)} points, seed {config.seed}")
    return space


def random_space(rng: np.random.Generator, max_size: int = 8) -> FiniteMetricSpace:
    config = GeneratorConfig(
        seed=int(rng.integers(2 ** 63)),
        kind=str(rng.choice(sorted(SPACE_KINDS))),
        size=int(rng.integers(2, max_size + 1)),
    )
    return gen_space(config)


def random_subset(rng: np.random.Generator, space: FiniteMetricSpace) -> PointSubset:
    size = int(rng.integers(1, len(space) + 1))
    return PointSubset(space, tuple(int(i) for i in rng.choice(len(space), size=size, replace=False)))


def _rational(rng: np.random.Generator, numerators: int = 4, denominators: Tuple[int, ...] = (1, 2, 3)) -> Fraction:
    return Fraction(int(rng.integers(1, numerators + 1)), int(rng.choice(denominators)))


def _bounded_piece(rng: np.random.Generator, x: Fraction) -> Piece:
    kind = rng.choice(['interval', 'lattice', 'points'])
    if kind == 'interval':
        return Interval(x, x + _rational(rng))
    if kind == 'lattice':
        return Lattice(x, _rational(rng), int(rng.integers(2, 6)))
    offsets = sorted({_rational(rng, 6) for _ in range(int(rng.integers(1, 4)))})
    return Points(tuple([x] + [x + off for off in offsets]))


def _right_tail(rng: np.random.Generator, x: Fraction) -> List[Piece]:
    kind = rng.choice(['ray', 'lattice', 'two-lattices'])
    if kind == 'ray':
        return [Ray('right', x)]
    step = _rational(rng)
    if kind == 'lattice':
        return [Lattice(x, step)]
    # offsets 0 and r modulo 2*step keep the two progressions disjoint
    r = step * Fraction(int(rng.integers(1, 4)), 2)
    return [Lattice(x, 2 * step), Lattice(x + r, 2 * step)]


def gen_model(rng: np.random.Generator) -> Model1D:
    """Random model: optional left tail, up to three bounded pieces, optional right tail."""
    if rng.random() < 0.08:
        return Model1D([FullLine()])
    pieces: List[Piece] = []
    x = Fraction(int(rng.integers(-6, 1)))
    left = rng.choice(['none', 'ray', 'lattice'])
    if left == 'ray':
        pieces.append(Ray('left', x))
    elif left == 'lattice':
        pieces.append(Lattice(x, _rational(rng), INF, 'left'))
    if pieces:
        x += _rational(rng, 6, (2, 3))
    for _ in range(int(rng.integers(0, 4))):
        piece = _bounded_piece(rng, x)
        pieces.append(piece)
        x = piece.upper + _rational(rng, 6, (2, 3, 4))
    if rng.random() < 0.6:
        pieces.extend(_right_tail(rng, x))
    if not pieces or (len(pieces) == 1 and isinstance(pieces[0], Points) and len(pieces[0].xs) < 2):
        pieces.append(Interval(x + 1, x + 2))
    return Model1D(pieces)


def _point_in(rng: np.random.Generator, piece: Piece) -> Fraction:
    if piece.is_convex:
        if piece.is_bounded:
            return piece.lower + (piece.upper - piece.lower) * Fraction(int(rng.integers(0, 5)), 4)
        return piece.anchor_point + (1 if piece.upper == INF else -1) * Fraction(int(rng.integers(0, 9)), 2)
    x = piece.anchor_point
    for _ in range(int(rng.integers(0, 4))):
        nxt = piece.successor(x) if piece.upper == INF or rng.random() < 0.5 else piece.predecessor(x)
        if nxt is not None and -INF < nxt < INF:
            x = nxt
    return x


def gen_subset(rng: np.random.Generator, M: Model1D) -> SubsetSpec:
    """One or two pieces, each a clipped copy of a model piece or a single model point."""
    parts: List[Piece] = []
    for _ in range(int(rng.integers(1, 3))):
        piece = M.pieces[int(rng.integers(len(M.pieces)))]
        choice = rng.random()
        if choice < 0.3:
            parts.append(Points((_point_in(rng, piece),)))
        elif choice < 0.6:
            parts.append(piece)
        else:
            a, b = sorted((_point_in(rng, piece), _point_in(rng, piece)))
            lo = a if rng.random() < 0.8 else -INF
            hi = b if rng.random() < 0.8 else INF
            parts.append(piece.clip(lo, hi) or Points((a,)))
    return SubsetSpec(parts)
