"""Reference models with known hierarchy verdicts."""
from fractions import Fraction
from typing import Dict, List, Tuple

from models.model import Model1D
from models.pieces import FullLine, Interval, Lattice, Piece, Ray
from models.subset import SubsetSpec


def naturals() -> Lattice:
    return Lattice(Fraction(1), Fraction(1))


def golden_models() -> Dict[str, Model1D]:
    return {
        'N': Model1D([naturals()]),
        'R': Model1D([FullLine()]),
        '(-inf,0] u N': Model1D([Ray('left', Fraction(0)), naturals()]),
        '[0,1]': Model1D([Interval(Fraction(0), Fraction(1))]),
    }


ALL_TRUE = ('compact', 'uss', 'uc', 'cofinally_complete', 'complete', 'chainable',
            'strongly_locally_compact', 'strongly_uniformly_locally_compact')

SPACE_GOLDENS: List[Tuple[str, Dict[str, bool]]] = [
    ('N', {'uss': True, 'uc': True, 'compact': False, 'strongly_uniformly_locally_compact': True}),
    ('R', {'uss': False, 'cofinally_complete': True, 'uc': False, 'strongly_locally_compact': False}),
    ('(-inf,0] u N', {'uss': False, 'uc': False, 'cofinally_complete': True}),
    ('[0,1]', {name: True for name in ALL_TRUE}),
]

SUBSET_GOLDENS: List[Tuple[str, List[Piece], Dict[str, bool]]] = [
    ('R', [naturals()], {'uss_subset': False, 'qc_precompact': True, 'bourbaki_bounded': False}),
    ('N', [naturals()], {'uss_subset': True, 'qc_precompact': False}),
    ('R', [Interval(Fraction(0), Fraction(1))], {'uss_subset': True, 'bourbaki_bounded': True}),
    ('(-inf,0] u N', [naturals()], {'uss_subset': True, 'uc_subset': True}),
]


def golden_subset(pieces: List[Piece]) -> SubsetSpec:
    return SubsetSpec(pieces)
