import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spaces.errors import (
    Asymmetry,
    CoincidentPoints,
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
from spaces.ext_real import INF, format_ext, format_rational
from spaces.finite_space import (
    box_product,
    enlargement,
    from_coordinates,
    hausdorff,
    set_gap,
    validate_metric,
)
from tests.conftest import line_spaces, spaces_with_subset


def test_two_point_space():
    space = validate_metric(['a', 'b'], [[0, 1], [1, 0]])
    assert len(space) == 2
    assert space.labels == ('a', 'b')
    assert space.point('b') == 1


def test_collinear_points_validate(line_space):
    assert line_space.dist[0, 3] == 7.0
    assert line_space.diameter() == 7.0


@pytest.mark.parametrize('matrix, error, fields', [
    ([[0, 1], [2, 0]], Asymmetry, {'i': 0, 'j': 1}),
    ([[0, -1], [-1, 0]], NegativeDistance, {'i': 0, 'j': 1}),
    ([[1, 1], [1, 0]], NonzeroDiagonal, {'i': 0}),
    ([[0, 0], [0, 0]], CoincidentPoints, {'i': 0, 'j': 1}),
    ([[0, 1, 5], [1, 0, 1], [5, 1, 0]], TriangleViolation, {'i': 0, 'j': 1, 'k': 2}),
    ([[0, math.nan], [math.nan, 0]], NonFiniteDistance, {'i': 0, 'j': 1}),
])
def test_first_violated_axiom_is_named(matrix, error, fields):
    labels = [str(i) for i in range(len(matrix))]
    with pytest.raises(error) as info:
        validate_metric(labels, matrix)
    for name, value in fields.items():
        assert getattr(info.value, name) == value
    assert info.value.to_dict()['error'] == error.code


def test_too_few_points_and_shape():
    with pytest.raises(TooFewPoints):
        validate_metric(['a'], [[0]])
    with pytest.raises(ShapeMismatch):
        validate_metric(['a', 'b'], [[0, 1, 2], [1, 0, 1]])
    with pytest.raises(ShapeMismatch):
        validate_metric(['a', 'b', 'c'], [[0, 1], [1, 0]])


def test_digest_is_stable_and_matrix_read_only(line_space):
    again = from_coordinates([0, 1, 3, 7])
    assert again.digest == line_space.digest
    assert from_coordinates([0, 1, 3, 8]).digest != line_space.digest
    with pytest.raises(ValueError):
        line_space.dist[0, 1] = 5.0


def test_coordinate_metrics():
    coords = [[0, 0], [3, 4]]
    assert from_coordinates(coords).dist[0, 1] == 5.0
    assert from_coordinates(coords, metric='chebyshev').dist[0, 1] == 4.0
    assert from_coordinates(coords, metric='manhattan').dist[0, 1] == 7.0


def test_enlargement_is_strict(line_space):
    A = line_space.subset([0])
    assert enlargement(A, 1.5).members == (0, 1)
    assert enlargement(A, 1).members == (0,)
    assert enlargement(A, 8).members == (0, 1, 2, 3)
    with pytest.raises(NonpositiveScale):
        enlargement(A, 0)


def test_hausdorff_and_gap():
    X = from_coordinates([0, 1, 3])
    assert hausdorff(X.subset([0, 1]), X.subset([2])) == 3.0
    assert hausdorff(X.subset([0, 1]), X.subset([0, 1])) == 0.0
    Y = from_coordinates([0, 1, 3, 7])
    assert set_gap(Y.subset([0, 1]), Y.subset([2])) == 2.0
    assert set_gap(Y.subset([0]), Y.subset([2])) == 3.0
    assert set_gap(Y.subset([0, 1]), Y.subset([1, 3])) == 0.0


def test_mixed_spaces_rejected(line_space):
    other = from_coordinates([0, 1, 3, 7])
    with pytest.raises(MixedSpaces):
        hausdorff(line_space.subset([0]), other.subset([0]))


def test_invalid_subsets(line_space):
    with pytest.raises(InvalidSubset):
        line_space.subset([])
    with pytest.raises(InvalidSubset):
        line_space.subset([4])
    with pytest.raises(InvalidSubset):
        line_space.subset(['nope'])
    assert line_space.subset(['3', 0]).members == (0, 3)


def test_box_product():
    X = from_coordinates([0, 1])
    square = box_product(X, X)
    assert len(square) == 4
    off_diagonal = square.dist[~np.eye(4, dtype=bool)]
    assert set(off_diagonal.tolist()) == {1.0}

    Y = from_coordinates([0, 2])
    P = box_product(X, Y)
    assert P.labels[3] == '(1,1)'
    assert P.dist[0, 3] == 2.0
    assert P.dist[0, 1] == Y.dist[0, 1]
    with pytest.raises(SizeOverflow):
        box_product(X, Y, max_size=3)


def test_format_helpers():
    from fractions import Fraction
    assert format_ext(INF) == 'inf'
    assert format_ext(Fraction(3, 4)) == '3/4'
    assert format_ext(2.5) == 2.5
    assert format_rational(Fraction(-2)) == '-2'
    assert format_rational(-INF) == '-inf'


@settings(max_examples=60, deadline=None)
@given(spaces_with_subset(), st.integers(1, 40), st.integers(1, 40))
def test_enlargement_monotone(data, e1, e2):
    _, A = data
    small, large = sorted((e1, e2))
    assert set(A.members) <= set(enlargement(A, small).members)
    assert set(enlargement(A, small).members) <= set(enlargement(A, large).members)


@settings(max_examples=60, deadline=None)
@given(line_spaces(), st.data())
def test_hausdorff_is_a_pseudometric(space, data):
    n = len(space)
    subsets = [space.subset(data.draw(st.lists(st.integers(0, n - 1), min_size=1, unique=True)))
               for _ in range(3)]
    A, B, C = subsets
    assert hausdorff(A, B) == hausdorff(B, A)
    assert hausdorff(A, C) <= hausdorff(A, B) + hausdorff(B, C)
    assert (hausdorff(A, B) == 0) == (A.members == B.members)


@settings(max_examples=30, deadline=None)
@given(line_spaces(max_size=5), line_spaces(max_size=5))
def test_box_product_is_a_metric(X, Y):
    P = box_product(X, Y)
    assert len(P) == len(X) * len(Y)
    assert validate_metric(P.labels, P.dist).digest == P.digest
