from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from models import (
    EmptySample,
    Model1D,
    ModelTooLarge,
    PointNotInModel,
    SubsetNotContained,
    SubsetSpec,
    SymbolicRegion,
    classify_space,
    f_c,
    isolation,
    isolation_infimum,
    limit_points,
    model_component,
    nslc,
    nu,
    sample,
    sample_points,
)
from models.pieces import Interval, Lattice, Points, Ray
from spaces.errors import NonpositiveScale
from spaces.ext_real import INF

F = Fraction


def test_fc_on_naturals(naturals):
    assert f_c(naturals, 1) == 1
    assert f_c(naturals, '5') == 1


def test_fc_vanishes_on_the_line(real_line):
    assert f_c(real_line, 0) == 0
    assert f_c(real_line, '-3/2') == 0


def test_fc_on_ray_and_naturals(ray_and_naturals):
    assert f_c(ray_and_naturals, -1) == 0
    assert f_c(ray_and_naturals, 0) == 0
    assert f_c(ray_and_naturals, 1) == 1
    assert f_c(ray_and_naturals, 4) == 1


def test_fc_is_infinite_on_bounded_models(unit_interval):
    assert f_c(unit_interval, F(1, 2)) == INF
    assert nu(unit_interval, 0) == INF


def test_points_outside_the_model(naturals):
    with pytest.raises(PointNotInModel):
        f_c(naturals, F(1, 2))
    with pytest.raises(PointNotInModel):
        isolation(naturals, 0)


def test_isolation(ray_and_naturals, naturals):
    assert isolation(ray_and_naturals, 1) == 1
    assert isolation(ray_and_naturals, 0) == 0
    assert isolation(ray_and_naturals, -4) == 0
    assert isolation(naturals, 1) == 1
    M = Model1D([Points((F(0), F(1, 3), F(2)))])
    assert isolation(M, F(1, 3)) == F(1, 3)
    assert isolation_infimum(M) == F(1, 3)
    assert isolation_infimum(naturals) == 1


def test_component_of_ray_and_naturals(ray_and_naturals):
    left = model_component(ray_and_naturals, -1, F(1, 2))
    assert left == SymbolicRegion([Ray('left', F(0))])
    whole = model_component(ray_and_naturals, -1, 2)
    assert whole == SymbolicRegion(ray_and_naturals.pieces)


def test_component_of_a_lattice_point(naturals):
    single = model_component(naturals, 3, 1)
    assert single.lower == single.upper == 3
    tail = model_component(naturals, 3, F(3, 2))
    assert tail == SymbolicRegion(naturals.pieces)


def test_component_of_a_finite_model():
    M = Model1D([Interval(F(0), F(1)), Points((F(2), F(5)))])
    region = model_component(M, F(1, 2), F(3, 2))
    assert region.lower == 0
    assert region.upper == 2
    assert not region.contains(F(5))


def test_component_rejects_bad_scales(naturals):
    for eps in (0, -1, '0'):
        with pytest.raises(NonpositiveScale):
            model_component(naturals, 1, eps)


def test_regions(ray_and_naturals, naturals, unit_interval, real_line):
    assert nslc(ray_and_naturals) == SymbolicRegion([Ray('left', F(0))])
    assert nslc(naturals).is_empty
    assert nslc(unit_interval).is_empty
    assert not nslc(real_line).is_compact
    assert limit_points(unit_interval) == SymbolicRegion([Interval(F(0), F(1))])
    assert limit_points(naturals).is_empty


def test_sample_unit_interval(unit_interval):
    space = sample(unit_interval, ('0', '1'), '1/4')
    assert space.labels == ('0', '1/4', '1/2', '3/4', '1')
    assert space.dist[0, 4] == 1.0
    assert space.provenance['model'] == unit_interval.digest
    assert space.provenance['resolution'] == '1/4'


def test_sample_points_of_ray_and_naturals(ray_and_naturals):
    points = sample_points(ray_and_naturals, (-2, 3), F(1, 2))
    assert points == [F(-2), F(-3, 2), F(-1), F(-1, 2), F(0), F(1), F(2), F(3)]


def test_sample_of_naturals(naturals):
    assert len(sample(naturals, (1, 10), 1)) == 10
    with pytest.raises(EmptySample):
        sample(naturals, (1, 1), 1)
    with pytest.raises(EmptySample):
        sample(naturals, (5, 1), 1)


def test_sample_bound(monkeypatch, naturals):
    monkeypatch.setenv('CHAINSCOPE_MAX_MODEL_POINTS', '5')
    with pytest.raises(ModelTooLarge):
        sample_points(naturals, (1, 100), 1)


@pytest.fixture
def fine_lattice_then_point() -> Model1D:
    """A billion lattice terms before the point, which the walk never lists."""
    return Model1D([Lattice(F(0), F(1, 1000)), Points((F(10 ** 6) + F(1, 3000),))])


def test_long_lattice_stays_symbolic(monkeypatch, fine_lattice_then_point):
    monkeypatch.setenv('CHAINSCOPE_MAX_MODEL_POINTS', '50')
    M = fine_lattice_then_point
    assert f_c(M, 0) == F(1, 1000)
    assert f_c(M, F(10 ** 6) + F(1, 3000)) == F(1, 1000)
    assert isolation_infimum(M) == F(1, 3000)
    assert model_component(M, 0, F(1, 1000)).upper == 0
    assert model_component(M, 0, F(1, 500)).upper == INF
    report = classify_space(M)
    assert report['uss'] is True
    assert report.witnesses['right_tail'] == {'kind': 'periodic', 'period': '1/1000', 'gap': '1/1000'}
    assert len(M.representative_points()) < 50


@pytest.fixture
def interleaved() -> Model1D:
    """Evens below two million with 1 mod 4 below four hundred thousand: gaps 1, 1, 2 repeating."""
    return Model1D([Lattice(F(0), F(2), 10 ** 6), Lattice(F(1), F(4), 10 ** 5)])


def test_interleaved_lattices(monkeypatch, interleaved):
    monkeypatch.setenv('CHAINSCOPE_MAX_MODEL_POINTS', '50')
    M = interleaved
    assert model_component(M, 0, 2).upper == 2
    assert model_component(M, 0, 3).upper == 1999998
    assert model_component(M, 399998, 2).lower == 399996
    assert isolation_infimum(M) == 1
    SubsetSpec([Lattice(F(1), F(4), 10)]).check_in(M)
    with pytest.raises(SubsetNotContained) as excinfo:
        SubsetSpec([Lattice(F(3), F(4), 5)]).check_in(M)
    assert excinfo.value.witness['point'] == '3'
    with pytest.raises(SubsetNotContained) as excinfo:
        SubsetSpec([Lattice(F(1000001), F(2), 3)]).check_in(M)
    assert excinfo.value.witness['point'] == '1000001'


steps = st.builds(Fraction, st.integers(1, 12), st.integers(1, 6))


@settings(max_examples=50, deadline=None)
@given(steps, st.integers(0, 30))
def test_lattice_components_split_at_the_step(step, n):
    M = Model1D([Lattice(F(0), step)])
    x = n * step
    assert f_c(M, x) == step
    single = model_component(M, x, step)
    assert single.lower == single.upper == x
    assert model_component(M, x, step * F(3, 2)) == SymbolicRegion(M.pieces)


@settings(max_examples=50, deadline=None)
@given(steps, steps)
def test_fc_is_the_smaller_gap_reach(gap, step):
    # (-inf, 0] followed by a lattice starting one gap later
    M = Model1D([Ray('left', F(0)), Lattice(gap, step)])
    assert f_c(M, gap) == min(gap, step)
    assert f_c(M, -1) == 0
