import itertools

import pytest

from assoc.multi import is_connected
from assoc.polygon import (
    abstract_associahedron,
    catalan,
    crossing,
    diagonals,
    enumerate_triangulations,
    flip,
    flip_graph,
)


def catalan_by_recurrence(r):
    c = [1]
    for i in range(r):
        c.append(sum(c[j] * c[i - j] for j in range(i + 1)))
    return c[r]


def test_diagonals_of_hexagon():
    ds = diagonals(6)
    assert len(ds) == 9
    assert (1, 3) in ds and (1, 6) not in ds and (1, 2) not in ds


def test_no_diagonals_below_four():
    with pytest.raises(ValueError):
        diagonals(3)


def test_crossing_examples():
    assert crossing((1, 4), (2, 5))
    assert not crossing((1, 4), (1, 3))
    assert not crossing((1, 3), (4, 6))
    assert crossing((2, 5), (1, 4)) and crossing((4, 1), (5, 2))


@pytest.mark.parametrize("m", range(3, 11))
def test_triangulation_count_is_catalan(m):
    ts = enumerate_triangulations(m)
    assert len(ts) == catalan(m - 2) == catalan_by_recurrence(m - 2)
    assert len({t.diagonals for t in ts}) == len(ts)


@pytest.mark.parametrize("m", range(4, 9))
def test_triangulations_are_maximal_noncrossing(m):
    ds = diagonals(m)
    for t in enumerate_triangulations(m):
        assert len(t.diagonals) == m - 3 and len(t.triangles) == m - 2
        assert not any(crossing(a, b) for a, b in itertools.combinations(t.diagonals, 2))
        assert all(any(crossing(d, e) for e in t.diagonals) for d in ds if d not in t.diagonals)


def test_flip_example():
    t = next(t for t in enumerate_triangulations(5) if t.diagonals == frozenset({(1, 3), (1, 4)}))
    assert flip(t, (1, 3)).diagonals == frozenset({(1, 4), (2, 4)})
    with pytest.raises(ValueError):
        flip(t, (2, 4))


@pytest.mark.parametrize("m", range(4, 9))
def test_flip_is_involution(m):
    for t in enumerate_triangulations(m):
        for d in t.diagonals:
            u = flip(t, d)
            (new,) = u.diagonals - t.diagonals
            assert crossing(new, d)
            assert flip(u, new) == t


def test_pentagon_flip_graph_is_five_cycle():
    adj = flip_graph(5)
    assert len(adj) == 5 and all(len(v) == 2 for v in adj.values())
    assert is_connected(adj)


@pytest.mark.parametrize("m", range(4, 10))
def test_flip_graph_regular_and_connected(m):
    adj = flip_graph(m)
    assert all(len(v) == m - 3 for v in adj.values())
    assert all(a in adj[b] for a in adj for b in adj[a])
    assert is_connected(adj)


def test_abstract_associahedron_incidence():
    a = abstract_associahedron(6)
    assert len(a.vertex_labels) == 14 and len(a.facet_labels) == 9
    # each diagonal splits the hexagon into pieces whose triangulation counts multiply
    assert len(a.incidence[(1, 3)]) == catalan(1) * catalan(3)
    assert len(a.incidence[(1, 4)]) == catalan(2) * catalan(2)
