import logging
from fractions import Fraction
from typing import Any, List, Tuple

import numpy as np

from models.analysis import require_model_scale
from models.arith import parse_rational
from models.errors import EmptySample, ModelTooLarge
from models.model import Model1D
from models.walk import count_limit
from spaces.ext_real import format_rational
from spaces.finite_space import FiniteMetricSpace, validate_metric

logger = logging.getLogger(__name__)


def sample_points(M: Model1D, window: Tuple[Any, Any], resolution: Any) -> List[Fraction]:
    """Model points in the window; convex parts become a grid from their left end.

    The right end of every convex part is always included, so grid steps
    never exceed the resolution.
    """
    lo, hi = parse_rational(window[0], 'window'), parse_rational(window[1], 'window')
    step = require_model_scale(resolution)
    if lo > hi:
        raise EmptySample(0)
    bound = count_limit()
    points = set()
    for a, b in M.segments(lo, hi):
        count = int((b - a) / step) + 2
        if len(points) + count > bound:
            raise ModelTooLarge(len(points) + count, bound)
        x = a
        while x < b:
            points.add(x)
            x += step
        points.add(b)
    return sorted(points)


def sample(M: Model1D, window: Tuple[Any, Any], resolution: Any) -> FiniteMetricSpace:
    points = sample_points(M, window, resolution)
    if len(points) < 2:
        raise EmptySample(len(points))
    coords = np.array([float(x) for x in points])
    matrix = np.abs(coords[:, None] - coords[None, :])
    provenance = {
        'model': M.digest,
        'window': [format_rational(parse_rational(w, 'window')) for w in window],
        'resolution': format_rational(require_model_scale(resolution)),
    }
    logger.debug(f"Sampled {len(points)} points from model {M.digest[:12]}")
    return validate_metric([format_rational(x) for x in points], matrix, provenance=provenance)
