import gc
import weakref

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chains import bottleneck_matrix, chain_ball, chain_component, merge_tree, witness_chain
from chains.errors import InvalidChainLength, NotJoinable
from lab.oracles import oracle_chain_ball, oracle_chain_component, oracle_minimax
from spaces.errors import NonpositiveScale
from spaces.finite_space import validate_metric
from tests.conftest import line_spaces


def test_bottleneck_on_line(line_space):
    c = bottleneck_matrix(line_space).c
    assert c[0, 1] == 1.0
    assert c[0, 2] == 2.0
    assert c[0, 3] == 4.0
    assert c[1, 3] == 4.0
    assert np.array_equal(c, c.T)
    assert bottleneck_matrix(line_space) is bottleneck_matrix(line_space)


def test_cached_structures_die_with_their_space():
    space = validate_metric(['a', 'b', 'c'], [[0, 1, 3], [1, 0, 2], [3, 2, 0]])
    tree = merge_tree(space)
    reused = merge_tree(space) is tree and bottleneck_matrix(space) is bottleneck_matrix(space)
    ref = weakref.ref(space)
    del space, tree
    gc.collect()
    assert reused
    assert ref() is None


def test_merge_events_on_line(line_space):
    tree = merge_tree(line_space)
    assert tree.scales == [1.0, 2.0, 4.0]
    assert [event.joined for event in tree.events] == [((0, 1),), ((0, 2),), ((0, 3),)]


def test_partition_is_strict(line_space):
    tree = merge_tree(line_space)
    assert tree.partition(0.5) == [(0,), (1,), (2,), (3,)]
    assert tree.partition(1.5) == [(0, 1), (2,), (3,)]
    assert tree.partition(2) == [(0, 1), (2,), (3,)]
    assert tree.partition(2.5) == [(0, 1, 2), (3,)]


def test_equilateral_triangle_merges_once():
    space = validate_metric(['a', 'b', 'c'], [[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    tree = merge_tree(space)
    assert tree.scales == [1.0]
    assert tree.events[0].joined == ((0, 1, 2),)


@pytest.mark.parametrize('eps, members', [
    (0.5, (0,)),
    (1.5, (0, 1)),
    (2.5, (0, 1, 2)),
    (5, (0, 1, 2, 3)),
])
def test_chain_component_on_line(line_space, eps, members):
    assert chain_component(line_space, 0, eps).members == members
    assert oracle_chain_component(line_space, 0, eps).members == members


def test_chain_balls_grow_with_steps(line_space):
    assert chain_ball(line_space, 0, 2.5, 1).members == (0, 1)
    assert chain_ball(line_space, 0, 2.5, 2).members == (0, 1, 2)
    assert chain_ball(line_space, 0, 2.5, 3).members == (0, 1, 2)
    assert chain_ball(line_space, '3', 5, 1).members == (2, 3)


def test_chain_errors(line_space):
    with pytest.raises(InvalidChainLength):
        chain_ball(line_space, 0, 1.5, 0)
    with pytest.raises(InvalidChainLength):
        chain_ball(line_space, 0, 1.5, True)
    with pytest.raises(NonpositiveScale):
        chain_component(line_space, 0, 0)
    with pytest.raises(NotJoinable) as info:
        witness_chain(line_space, 0, 3, 2.5)
    assert info.value.c_value == 4.0


def test_witness_chain(line_space):
    chain = witness_chain(line_space, 0, 2, 2.5)
    assert chain.points == (0, 1, 2)
    assert chain.length == 2
    assert chain.labels == ['0', '1', '2']
    assert witness_chain(line_space, 1, 1, 0.5).length == 0


def test_minimax_oracle_on_line(line_space):
    assert oracle_minimax(line_space, 0, 3) == 4.0
    assert oracle_minimax(line_space, 2, 2) == 0.0


@settings(max_examples=60, deadline=None)
@given(line_spaces(max_size=7), st.data())
def test_bottleneck_matches_oracle(space, data):
    c = bottleneck_matrix(space).c
    n = len(space)
    x = data.draw(st.integers(0, n - 1))
    y = data.draw(st.integers(0, n - 1))
    assert c[x, y] == oracle_minimax(space, x, y)
    assert c[x, y] <= space.dist[x, y]
    z = data.draw(st.integers(0, n - 1))
    assert c[x, z] <= max(c[x, y], c[y, z])


@settings(max_examples=60, deadline=None)
@given(line_spaces(), st.integers(1, 81), st.integers(1, 4))
def test_components_match_breadth_first_closure(space, eps, m):
    n = len(space)
    for x in range(n):
        component = chain_component(space, x, eps)
        assert component.members == oracle_chain_component(space, x, eps).members
        ball = chain_ball(space, x, eps, m)
        assert ball.members == oracle_chain_ball(space, x, eps, m).members
        assert set(ball.members) <= set(chain_ball(space, x, eps, m + 1).members) <= set(component.members)
        assert chain_ball(space, x, eps, n - 1 if n > 1 else 1).members == component.members
        for y in component.members:
            assert chain_component(space, y, eps).members == component.members
