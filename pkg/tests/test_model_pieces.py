from fractions import Fraction

import pytest

from models import InvalidPiece, Model1D, OverlappingPieces
from models.arith import common_period, parse_count, parse_rational
from models.pieces import FullLine, Interval, Lattice, Points, Ray, piece_from_dict, span
from models.walk import Run, walk_runs, widest_gap
from spaces.ext_real import INF

F = Fraction


@pytest.mark.parametrize('raw, expected', [
    ('3/4', F(3, 4)),
    ('-3', F(-3)),
    ('0.25', F(1, 4)),
    (7, F(7)),
])
def test_parse_rational(raw, expected):
    assert parse_rational(raw) == expected


@pytest.mark.parametrize('raw', [0.5, True, 'abc', '1/0', None])
def test_parse_rational_rejects(raw):
    with pytest.raises(InvalidPiece):
        parse_rational(raw)


def test_parse_count():
    assert parse_count('inf') == INF
    assert parse_count('3') == 3
    with pytest.raises(InvalidPiece):
        parse_count(0)


def test_common_period():
    assert common_period([F(1, 2), F(1, 3)]) == F(1)
    assert common_period([F(2), F(3)]) == F(6)
    assert common_period([]) == 0


@pytest.mark.parametrize('build', [
    lambda: Interval(F(1), F(1)),
    lambda: Lattice(F(0), F(0)),
    lambda: Ray('up', F(0)),
    lambda: Points(()),
])
def test_invalid_pieces(build):
    with pytest.raises(InvalidPiece):
        build()


def test_lattice_navigation():
    naturals = Lattice(F(1), F(1))
    assert naturals.contains(F(3))
    assert not naturals.contains(F(3, 2))
    assert not naturals.contains(F(0))
    assert naturals.successor(F(5, 2)) == 3
    assert naturals.successor(F(3)) == 4
    assert naturals.predecessor(F(1)) is None
    assert naturals.lower == 1
    assert naturals.upper == INF
    assert naturals.infinite_step == 1


def test_lattice_clip_and_reflect():
    halves = Lattice(F(0), F(1, 2), 3)
    assert halves.upper == 1
    assert halves.clip(F(1, 4), F(1)) == Lattice(F(1, 2), F(1, 2), 2)
    assert halves.count_in(F(0), F(1)) == 3
    assert halves.clip(F(2), F(3)) is None
    assert Lattice(F(1), F(1)).reflect() == Lattice(F(-1), F(1), INF, 'left')


def test_left_lattice():
    negatives = Lattice(F(0), F(1), INF, 'left')
    assert negatives.lower == -INF
    assert negatives.upper == 0
    assert negatives.contains(F(-5))
    assert not negatives.contains(F(1))


def test_points_are_sorted_and_searchable():
    points = Points((F(3), F(-1), F(1)))
    assert points.xs == (F(-1), F(1), F(3))
    assert points.successor(F(1)) == 3
    assert points.predecessor(F(1)) == -1
    assert points.segments(F(0), F(5)) == [(F(1), F(1)), (F(3), F(3))]


def test_span_canonical_forms():
    assert span(F(0), F(0)) == Points((F(0),))
    assert span(-INF, INF) == FullLine()
    assert span(-INF, F(2)) == Ray('left', F(2))
    assert span(F(2), INF) == Ray('right', F(2))
    assert span(F(0), F(1)) == Interval(F(0), F(1))
    assert span(F(1), F(0)) is None


def test_piece_from_dict():
    assert piece_from_dict({'type': 'lattice', 'start': '1', 'step': '1'}) == Lattice(F(1), F(1))
    assert piece_from_dict({'type': 'interval', 'a': '0', 'b': '1/2'}) == Interval(F(0), F(1, 2))
    assert piece_from_dict({'type': 'fullline'}) == FullLine()
    with pytest.raises(InvalidPiece) as excinfo:
        piece_from_dict({'type': 'spiral'}, 2)
    assert excinfo.value.witness['piece'] == 2


def test_piece_dict_form():
    piece = Lattice(F(1, 2), F(1, 3), 4, 'left')
    assert piece.to_dict() == {'type': 'lattice', 'start': '1/2', 'step': '1/3', 'count': 4, 'dir': 'left'}
    assert piece_from_dict(piece.to_dict()) == piece


@pytest.mark.parametrize('pieces, pair, point', [
    ([Interval(F(0), F(2)), Lattice(F(1), F(1))], (0, 1), '1'),
    ([Lattice(F(0), F(2)), Lattice(F(0), F(3))], (0, 1), '0'),
    ([Ray('left', F(0)), Ray('right', F(0))], (0, 1), '0'),
])
def test_overlapping_pieces(pieces, pair, point):
    with pytest.raises(OverlappingPieces) as excinfo:
        Model1D(pieces)
    assert (excinfo.value.i, excinfo.value.j) == pair
    assert excinfo.value.witness['point'] == point


def test_disjoint_pieces_are_accepted():
    Model1D([Lattice(F(0), F(2)), Lattice(F(1), F(2))])
    Model1D([Ray('left', F(0)), Lattice(F(1), F(1))])
    Model1D([Interval(F(0), F(1)), Points((F(3, 2), F(5)))])


def test_model_needs_two_points():
    with pytest.raises(InvalidPiece):
        Model1D([Points((F(0),))])
    with pytest.raises(InvalidPiece):
        Model1D([])
    with pytest.raises(InvalidPiece):
        Model1D.from_dict({'kind': 'model1d'})


def test_model_document(ray_and_naturals):
    document = ray_and_naturals.to_dict()
    assert document['kind'] == 'model1d'
    again = Model1D.from_dict(document)
    assert again.digest == ray_and_naturals.digest
    assert again.pieces == ray_and_naturals.pieces


def test_model_navigation(ray_and_naturals):
    M = ray_and_naturals
    assert M.contains(F(-7))
    assert not M.contains(F(1, 2))
    assert M.successor(F(0)) == 1
    assert M.predecessor(F(1)) == 0
    assert not M.is_bounded
    assert M.in_convex_piece(F(0))
    assert not M.in_convex_piece(F(1))


def test_walk_splits_a_lattice_around_a_point():
    runs = walk_runs([Lattice(F(0), F(1), 11), Points((F(11, 2),))], F(0), F(10))
    assert runs == [Run(F(0), F(5), F(1), F(1)), Run(F(11, 2), F(11, 2)), Run(F(6), F(10), F(1), F(1))]
    assert widest_gap(runs) == 1


def test_long_finite_lattices_are_checked_over_one_period(monkeypatch):
    monkeypatch.setenv('CHAINSCOPE_MAX_MODEL_POINTS', '10')
    Model1D([Lattice(F(0), F(2), 10 ** 9), Lattice(F(1), F(2), 10 ** 9)])
    with pytest.raises(OverlappingPieces) as excinfo:
        Model1D([Lattice(F(0), F(2), 10 ** 9), Lattice(F(10 ** 9), F(3), 10 ** 9)])
    assert excinfo.value.witness['point'] == '1000000000'
