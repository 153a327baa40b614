from itertools import combinations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import multigraphs
from scramblenum.errors import GraphError
from scramblenum.families import c3221, c_nk, ctilde_nk, cycle, k4, ll6, p33, path, wheel
from scramblenum.multigraph import INF, Multigraph, connected_subsets, popcount
from scramblenum.scramble import (
    Scramble,
    egg_cut_bruteforce,
    egg_cut_number,
    hitting_number,
    is_disjoint,
    minimum_hitting_set,
    order,
    order_value,
    restrict,
    uniform_scramble_2,
    vertex_scramble,
)


def hitting_bruteforce(eggs: list[int], n: int) -> int:
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            mask = sum(1 << v for v in combo)
            if all(e & mask for e in eggs):
                return size
    raise AssertionError("unreachable")


@st.composite
def scrambles(draw, max_n=6):
    g = draw(multigraphs(min_n=1, max_n=max_n, max_mult=2))
    subsets = connected_subsets(g)
    chosen = draw(st.lists(st.sampled_from(subsets), min_size=1, max_size=8))
    return Scramble(g, chosen)


@settings(max_examples=200, deadline=None)
@given(scrambles())
def test_hitting_number_matches_bruteforce(s):
    h, witness = hitting_number(s)
    assert h == hitting_bruteforce(list(s.eggs), s.host.n)
    mask = sum(1 << v for v in witness)
    assert all(e & mask for e in s.eggs)


@settings(max_examples=200, deadline=None)
@given(scrambles())
def test_egg_cut_matches_definition(s):
    value, side = egg_cut_number(s)
    assert value == egg_cut_bruteforce(s)
    if value != INF:
        mask = sum(1 << v for v in side)
        assert s.host.cut_size(mask) == value
        assert any(e & mask == e for e in s.eggs)
        assert any(e & mask == 0 for e in s.eggs)


# -- example scrambles ---------------------------------------------------------

@pytest.mark.parametrize("g, eggs, h", [
    (k4(), [[0], [1], [2], [3]], 4),
    (p33(), [[0], [1], [2]], 3),
    (c3221(), [[0], [1], [2]], 3),
    (ll6(), [[1, 2], [3, 4], [5, 0]], 3),
])
def test_disjoint_scrambles_of_order_three(g, eggs, h):
    s = Scramble(g, eggs)
    o = order(s)
    assert is_disjoint(s)
    assert o.hitting == h == len(eggs)
    assert o.egg_cut == 3
    assert o.order == 3


def test_ll6_egg_cut_is_smaller_than_egg_boundaries():
    s = Scramble(ll6(), [[1, 2], [3, 4], [5, 0]])
    assert all(ll6().cut_size(e) == 4 for e in s.eggs)
    o = order(s)
    cut = o.cut_edges(ll6())
    assert sum(m for _, _, m in cut) == 3
    assert sorted(m for _, _, m in cut) == [1, 2]


@pytest.mark.parametrize("n, k", [(4, 2), (5, 2), (6, 3), (8, 3), (3, 2)])
def test_vertex_scramble_on_cycle_family(n, k):
    assert order_value(vertex_scramble(c_nk(n, k))) == min(n, 2 * k)


def test_ctilde_scramble_of_order_five():
    # eggs {v2}, ..., {v5} and the run v6..v8, v1 (0-based labels below)
    s = Scramble(ctilde_nk(8, 2), [[1], [2], [3], [4], [5, 6, 7, 0]])
    o = order(s)
    assert (o.hitting, o.egg_cut, o.order) == (5, 5, 5)


def test_w5_disjoint_scramble_of_order_three():
    s = Scramble(wheel(5), [[0, 1], [2, 3], [4, 5]])
    assert is_disjoint(s)
    assert order_value(s) == 3


def test_overlapping_eggs_have_no_egg_cut():
    s = Scramble(cycle(5), [[0, 1, 2], [2, 3]])
    assert egg_cut_number(s)[0] == INF
    assert order(s).order == 1


def test_single_eggs():
    g = ll6()
    assert order_value(Scramble(g, [g.full_mask])) == 1
    o = order(Scramble(g, [[3]]))
    assert o.order == 1 and o.egg_cut == INF and o.cut_side == ()


def test_invalid_scrambles():
    with pytest.raises(GraphError):
        Scramble(path(3), [[0, 2]])
    with pytest.raises(GraphError):
        Scramble(path(3), [0])
    with pytest.raises(GraphError):
        Scramble(path(3), [[5]])
    with pytest.raises(GraphError):
        minimum_hitting_set([])


def test_duplicate_eggs_collapse():
    s = Scramble(path(3), [[0, 1], [1, 0], 0b011])
    assert len(s) == 1


# -- 2-uniform scramble ----------------------------------------------------------

def test_uniform_scramble_on_w5():
    s = uniform_scramble_2(wheel(5))
    assert len(s) == 10
    o = order(s)
    assert o.hitting == 4 == hitting_bruteforce(list(s.eggs), 6)
    assert o.order == 4


@pytest.mark.parametrize("g, eggs, value", [
    (path(2), 1, 1),
    (cycle(4), 4, 2),
])
def test_uniform_scramble_small(g, eggs, value):
    s = uniform_scramble_2(g)
    assert len(s) == eggs and order_value(s) == value


def test_uniform_scramble_not_disjoint():
    assert not is_disjoint(uniform_scramble_2(path(3)))
    with pytest.raises(GraphError):
        uniform_scramble_2(Multigraph(1))


# -- restriction --------------------------------------------------------------------

def test_restrict_to_full_host_is_identity():
    s = Scramble(ll6(), [[1, 2], [3, 4], [5, 0]])
    assert restrict(s, ll6()) == s


def test_restrict_drops_disconnected_eggs():
    s = Scramble(cycle(4), [[0, 1, 2], [3]])
    sub = cycle(4).without_edge(0, 1).without_edge(1, 2)
    r = restrict(s, sub)
    assert r.egg_lists() == [[3]]


def test_restrict_to_vertex_deleted_subgraph():
    g = cycle(5)
    s = Scramble(g, [[0, 1], [2, 3], [4]])
    sub = g.without_vertex(4)
    r = restrict(s, sub, vertex_map=[0, 1, 2, 3])
    assert r.egg_lists() == [[0, 1], [2, 3]]


def test_restrict_checks_subgraph():
    s = vertex_scramble(path(3))
    with pytest.raises(GraphError):
        restrict(s, cycle(3))
    with pytest.raises(GraphError):
        restrict(s, path(2))


@settings(max_examples=150, deadline=None)
@given(scrambles(max_n=6), st.data())
def test_one_edge_deletion_loses_at_most_one(s, data):
    g = s.host
    assume(g.num_edges > 0)
    u, v, _ = data.draw(st.sampled_from(g.edges()))
    sub = g.without_edge(u, v)
    assume(sub.is_connected())
    kept = restrict(s, sub)
    assume(len(kept) > 0)
    assert order_value(kept) >= order_value(s) - 1


def test_order_witnesses_are_consistent():
    s = vertex_scramble(k4())
    o = order(s)
    assert len(o.hitting_set) == o.hitting
    assert popcount(sum(1 << v for v in o.cut_side)) in (1, 3)
