import itertools

import pytest

from assoc.multi import (
    capoyleas_pach_check,
    cyclic_polytope_boundary_fvector,
    enumerate_k_triangulations,
    f_vector,
    flip_graph,
    flip_graph_connected,
    gale_evenness_facets,
    is_k1_crossing_free,
    jonsson_count,
    maximal_crossing_free_sizes,
    multiassociahedron,
    purity_and_dimension_check,
    relevant_diagonals,
    simplicial_fvector,
)
from assoc.polygon import crossing, enumerate_triangulations


def brute_free(s, k):
    return not any(all(crossing(a, b) for a, b in itertools.combinations(c, 2)) for c in itertools.combinations(s, k + 1))


def brute_faces(n, k):
    """All (k+1)-crossing-free subsets of relevant diagonals by exhaustive search."""
    ds = relevant_diagonals(n, k)
    return [frozenset(s) for r in range(len(ds) + 1) for s in itertools.combinations(ds, r) if brute_free(s, k)]


def test_relevant_diagonals():
    assert relevant_diagonals(6, 2) == [(1, 4), (2, 5), (3, 6)]
    assert len(relevant_diagonals(9, 2)) == 18
    assert len(relevant_diagonals(7, 1)) == 14
    with pytest.raises(ValueError):
        relevant_diagonals(4, 2)


def test_hexagon_k2():
    assert enumerate_k_triangulations(6, 2) == [((1, 4), (2, 5)), ((1, 4), (3, 6)), ((2, 5), (3, 6))]
    assert not is_k1_crossing_free([(1, 4), (2, 5), (3, 6)], 2)
    assert is_k1_crossing_free([(1, 4), (2, 5)], 2)
    assert f_vector(6, 2) == (3, 3)


def test_small_fvectors():
    assert f_vector(6, 1) == (9, 21, 14)
    assert f_vector(7, 3) == ()
    assert enumerate_k_triangulations(7, 3) == [()]
    assert purity_and_dimension_check(7, 3) == (True, -1)
    assert multiassociahedron(6, 2).dimension == 1


def test_nonagon_k2_fvector():
    assert f_vector(9, 2) == (18, 153, 732, 2115, 3762, 4026, 2376, 594)


@pytest.mark.parametrize("n,k", [(5, 1), (6, 1), (7, 1), (6, 2), (7, 2), (8, 2), (8, 3), (9, 3)])
def test_against_brute_force(n, k):
    faces = brute_faces(n, k)
    maximal = {f for f in faces if not any(f < g for g in faces)}
    assert {frozenset(f) for f in enumerate_k_triangulations(n, k)} == maximal
    by_size = [sum(1 for f in faces if len(f) == r) for r in range(1, max(map(len, faces)) + 1)]
    assert list(f_vector(n, k)) == by_size


@pytest.mark.parametrize("n", range(5, 10))
def test_k1_matches_triangulations(n):
    assert {frozenset(f) for f in enumerate_k_triangulations(n, 1)} == {t.diagonals for t in enumerate_triangulations(n)}


@pytest.mark.parametrize("n,k", [(7, 2), (8, 2), (9, 3)])
def test_symmetry_under_dihedral_relabeling(n, k):
    facets = {frozenset(f) for f in enumerate_k_triangulations(n, k)}

    def image(f, g):
        return frozenset(tuple(sorted(g(v) for v in d)) for d in f)

    rotate = lambda v: v % n + 1  # noqa: E731
    reflect = lambda v: n + 1 - v  # noqa: E731
    assert {image(f, rotate) for f in facets} == facets
    assert {image(f, reflect) for f in facets} == facets


@pytest.mark.parametrize("n,k", [(n, k) for k in (1, 2, 3) for n in range(2 * k + 2, 11)])
def test_purity_and_jonsson(n, k):
    pure, dim = purity_and_dimension_check(n, k)
    assert pure and dim == k * (n - 2 * k - 1) - 1
    assert len(enumerate_k_triangulations(n, k)) == jonsson_count(n, k)


def test_jonsson_values():
    assert jonsson_count(6, 2) == 3 and jonsson_count(9, 2) == 594
    assert [jonsson_count(n, 1) for n in range(3, 9)] == [1, 2, 5, 14, 42, 132]


@pytest.mark.parametrize(
    "n,k,sizes", [(5, 2, {10: 1}), (6, 2, {14: 3}), (7, 2, {18: 14}), (6, 1, {9: 14}), (7, 3, {21: 1})]
)
def test_capoyleas_pach(n, k, sizes):
    assert maximal_crossing_free_sizes(n, k) == sizes
    assert capoyleas_pach_check(n, k)


def test_capoyleas_pach_oracle_small():
    # exhaustive check over all subsets of segments of the pentagon for k = 1
    segs = list(itertools.combinations(range(1, 6), 2))
    free = [frozenset(s) for r in range(len(segs) + 1) for s in itertools.combinations(segs, r) if brute_free(s, 1)]
    maximal = [f for f in free if not any(f < g for g in free)]
    assert {len(f) for f in maximal} == {7} and len(maximal) == 5


def test_flip_graph():
    ok, adj = flip_graph_connected(9, 2)
    assert ok and len(adj) == 594
    assert all(len(v) == 8 for v in adj.values())
    ok, adj = flip_graph_connected(6, 2)
    assert ok and all(len(v) == 2 for v in adj.values())
    assert flip_graph([(1, 2), (3, 4)]) == {0: set(), 1: set()}


@pytest.mark.parametrize("k", [1, 2, 3])
def test_cyclic_polytope_comparison(k):
    assert f_vector(2 * k + 3, k) == cyclic_polytope_boundary_fvector(k)


def test_gale_evenness():
    assert len(gale_evenness_facets(6, 2)) == 6
    assert len(gale_evenness_facets(8, 4)) == 20
    assert simplicial_fvector([(1, 2, 3)]) == (3, 3, 1)


def test_threads_give_same_result():
    assert enumerate_k_triangulations(9, 2, threads=2) == enumerate_k_triangulations(9, 2)
    assert f_vector(9, 2, threads=2) == f_vector(9, 2)
