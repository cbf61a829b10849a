from fractions import Fraction

import pytest
from hypothesis import strategies as st

from models.model import Model1D
from models.pieces import FullLine, Interval, Lattice, Ray
from spaces.finite_space import FiniteMetricSpace, PointSubset, from_coordinates


@pytest.fixture
def line_space() -> FiniteMetricSpace:
    """{0, 1, 3, 7} on the line; indices 0..3 in that order."""
    return from_coordinates([0, 1, 3, 7])


@pytest.fixture
def naturals() -> Model1D:
    return Model1D([Lattice(Fraction(1), Fraction(1))])


@pytest.fixture
def real_line() -> Model1D:
    return Model1D([FullLine()])


@pytest.fixture
def ray_and_naturals() -> Model1D:
    return Model1D([Ray('left', Fraction(0)), Lattice(Fraction(1), Fraction(1))])


@pytest.fixture
def unit_interval() -> Model1D:
    return Model1D([Interval(Fraction(0), Fraction(1))])


@st.composite
def line_spaces(draw, min_size: int = 2, max_size: int = 8) -> FiniteMetricSpace:
    """Integer points on a line, so every distance and every sum of distances is exact."""
    coords = draw(st.lists(st.integers(-40, 40), min_size=min_size, max_size=max_size, unique=True))
    return from_coordinates(coords)


@st.composite
def spaces_with_subset(draw, max_size: int = 8):
    space = draw(line_spaces(max_size=max_size))
    members = draw(st.lists(st.integers(0, len(space) - 1), min_size=1, unique=True))
    return space, PointSubset(space, tuple(members))
