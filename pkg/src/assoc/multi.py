"""The simplicial multiassociahedron of (k+1)-crossing-free sets of k-relevant diagonals.

Sets of diagonals are handled as integer bitmasks over a fixed diagonal
order; a (k+1)-crossing is a (k+1)-clique in the crossing graph.
"""

from __future__ import annotations

import itertools
import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .exact import det
from .polygon import Diagonal, catalan, crossing


def _check_params(n: int, k: int) -> None:
    if k < 1 or n < 2 * k + 1:
        raise ValueError(f"need k >= 1 and n >= 2k+1 (got n={n}, k={k})")


def is_relevant(d: Diagonal, n: int, k: int) -> bool:
    i, j = sorted(d)
    inside = j - i - 1
    return inside >= k and n - 2 - inside >= k


def relevant_diagonals(n: int, k: int) -> list[Diagonal]:
    """Diagonals with at least k polygon vertices strictly on each side."""
    _check_params(n, k)
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if is_relevant((i, j), n, k)]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _has_clique(mask: int, size: int, cross: list[int]) -> bool:
    """Does the crossing graph restricted to mask contain `size` pairwise crossing elements?"""
    if size == 0:
        return True
    if mask.bit_count() < size:
        return False
    while mask:
        low = mask & -mask
        i = low.bit_length() - 1
        mask ^= low
        if _has_clique(mask & cross[i], size - 1, cross):
            return True
    return False


def _cross_masks(segments: list[Diagonal]) -> list[int]:
    out = []
    for a in segments:
        m = 0
        for j, b in enumerate(segments):
            if crossing(a, b):
                m |= 1 << j
        out.append(m)
    return out


def is_k1_crossing_free(s, k: int) -> bool:
    """True iff no k+1 of the given diagonals are pairwise crossing."""
    segs = sorted({tuple(sorted(d)) for d in s})
    cross = _cross_masks(segs)
    return not _has_clique((1 << len(segs)) - 1, k + 1, cross)


class _Search:
    """DFS over (k+1)-crossing-free subsets of a fixed list of segments."""

    def __init__(self, segments: list[Diagonal], k: int):
        self.segments = segments
        self.k = k
        self.cross = _cross_masks(segments)
        self.size = len(segments)

    def can_add(self, face: int, i: int) -> bool:
        return not _has_clique(face & self.cross[i], self.k, self.cross)

    def is_maximal(self, face: int) -> bool:
        return not any(not (face >> i) & 1 and self.can_add(face, i) for i in range(self.size))

    def walk(self, face: int, start: int, counts: list[int] | None, maximal: list[int] | None, depth: int = 0) -> None:
        if counts is not None:
            counts[depth] += 1
        if maximal is not None and self.is_maximal(face):
            maximal.append(face)
        for i in range(start, self.size):
            if self.can_add(face, i):
                self.walk(face | (1 << i), i + 1, counts, maximal, depth + 1)

    def branch(self, first: int, want_counts: bool, want_max: bool):
        counts = [0] * (self.size + 2) if want_counts else None
        maximal = [] if want_max else None
        self.walk(1 << first, first + 1, counts, maximal, 1)
        return counts, maximal

    def decode(self, mask: int) -> tuple[Diagonal, ...]:
        return tuple(self.segments[i] for i in _bits(mask))


def _branch_job(args):
    segments, k, first, want_counts, want_max = args
    return _Search(segments, k).branch(first, want_counts, want_max)


def resolve_threads(threads: int | None = None) -> int:
    if threads is None:
        threads = int(os.environ.get("ASSOC_THREADS", "1") or 1)
    return max(1, threads)


def _explore(segments: list[Diagonal], k: int, want_counts: bool, want_max: bool, threads: int | None = None):
    """Face counts by cardinality (index 0 = empty face) and maximal faces as bitmasks."""
    search = _Search(segments, k)
    size = len(segments)
    counts = [0] * (size + 2)
    counts[0] = 1
    maximal: list[int] = []
    if size == 0:
        return counts, [0]
    jobs = [(segments, k, first, want_counts, want_max) for first in range(size)]
    threads = resolve_threads(threads)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_branch_job, jobs))
    else:
        results = [search.branch(first, want_counts, want_max) for first in range(size)]
    for c, mx in results:
        if c is not None:
            counts = [a + b for a, b in zip(counts, c)]
        if mx is not None:
            maximal.extend(mx)
    return counts, maximal


@dataclass(frozen=True)
class SimplicialComplexNK:
    n: int
    k: int
    vertices: tuple[Diagonal, ...]
    facets: tuple[tuple[Diagonal, ...], ...]

    @property
    def dimension(self) -> int:
        return self.k * (self.n - 2 * self.k - 1) - 1


def _facet_key(f):
    return tuple(sorted(f))


@lru_cache(maxsize=32)
def _facets_cached(n: int, k: int) -> tuple[tuple[Diagonal, ...], ...]:
    segs = relevant_diagonals(n, k)
    _, maximal = _explore(segs, k, False, True)
    search = _Search(segs, k)
    return tuple(sorted((search.decode(m) for m in maximal), key=_facet_key))


def enumerate_k_triangulations(n: int, k: int, threads: int | None = None) -> list[tuple[Diagonal, ...]]:
    """All maximal (k+1)-crossing-free sets of k-relevant diagonals, sorted."""
    _check_params(n, k)
    if resolve_threads(threads) > 1:
        segs = relevant_diagonals(n, k)
        _, maximal = _explore(segs, k, False, True, threads)
        search = _Search(segs, k)
        return sorted((search.decode(m) for m in maximal), key=_facet_key)
    return list(_facets_cached(n, k))


def multiassociahedron(n: int, k: int, threads: int | None = None) -> SimplicialComplexNK:
    return SimplicialComplexNK(n, k, tuple(relevant_diagonals(n, k)), tuple(enumerate_k_triangulations(n, k, threads)))


def f_vector(n: int, k: int, threads: int | None = None) -> tuple[int, ...]:
    """Face numbers f_0, f_1, ... (the empty face is not counted)."""
    _check_params(n, k)
    segs = relevant_diagonals(n, k)
    counts, _ = _explore(segs, k, True, False, threads)
    return tuple(c for c in counts[1:] if c)


def purity_and_dimension_check(n: int, k: int) -> tuple[bool, int]:
    dim = k * (n - 2 * k - 1) - 1
    facets = enumerate_k_triangulations(n, k)
    return all(len(f) == dim + 1 for f in facets), dim


def maximal_crossing_free_sizes(n: int, k: int) -> dict[int, int]:
    """Sizes of all maximal (k+1)-crossing-free sets of segments of the n-gon.

    Every edge and diagonal takes part. Segments that lie in no (k+1)-crossing
    at all belong to every maximal set, so the search runs over the others and
    adds those back.
    """
    if k < 1 or n < 3:
        raise ValueError("need k >= 1 and n >= 3")
    segs = list(itertools.combinations(range(1, n + 1), 2))
    cross = _cross_masks(segs)
    forced = [s for i, s in enumerate(segs) if not _has_clique(cross[i], k, cross)]
    rest = [s for s in segs if s not in forced]
    _, maximal = _explore(rest, k, False, True)
    sizes: dict[int, int] = {}
    for m in maximal:
        size = m.bit_count() + len(forced)
        sizes[size] = sizes.get(size, 0) + 1
    return sizes


def capoyleas_pach_check(n: int, k: int) -> bool:
    """Every maximal (k+1)-crossing-free segment set has k(2n-2k-1) elements."""
    return set(maximal_crossing_free_sizes(n, k)) == {k * (2 * n - 2 * k - 1)}


def flip_graph(facets) -> dict[int, set[int]]:
    """Ridge adjacency: facets sharing all but one element."""
    by_ridge: dict[frozenset, list[int]] = {}
    for idx, f in enumerate(facets):
        fs = frozenset(f)
        for d in fs:
            by_ridge.setdefault(fs - {d}, []).append(idx)
    adj = {i: set() for i in range(len(facets))}
    for members in by_ridge.values():
        for a, b in itertools.combinations(members, 2):
            adj[a].add(b)
            adj[b].add(a)
    return adj


def is_connected(adj: dict[int, set[int]]) -> bool:
    if not adj:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(adj)


def flip_graph_connected(n: int, k: int) -> tuple[bool, dict[int, set[int]]]:
    adj = flip_graph(enumerate_k_triangulations(n, k))
    return is_connected(adj), adj


def jonsson_count(n: int, k: int) -> int:
    """det(C_{n-i-j}) for 1 <= i, j <= k, with Catalan numbers C."""
    _check_params(n, k)
    return int(det([[catalan(n - i - j) for j in range(1, k + 1)] for i in range(1, k + 1)]))


def gale_evenness_facets(v: int, d: int) -> list[tuple[int, ...]]:
    """Facets of the cyclic polytope C(v, d) on vertices 1..v."""
    out = []
    for s in itertools.combinations(range(1, v + 1), d):
        ss = set(s)
        gaps = [x for x in range(1, v + 1) if x not in ss]
        if all(sum(1 for y in s if a < y < b) % 2 == 0 for a, b in itertools.combinations(gaps, 2)):
            out.append(s)
    return out


def simplicial_fvector(facets) -> tuple[int, ...]:
    """f-vector of the simplicial complex generated by the given facets."""
    faces: set[frozenset] = set()
    for f in facets:
        for r in range(1, len(f) + 1):
            faces.update(frozenset(c) for c in itertools.combinations(f, r))
    top = max((len(f) for f in faces), default=0)
    return tuple(sum(1 for f in faces if len(f) == r) for r in range(1, top + 1))


def cyclic_polytope_boundary_fvector(k: int) -> tuple[int, ...]:
    """f-vector of the boundary of C(2k+3, 2k)."""
    if k < 1:
        raise ValueError("need k >= 1")
    return simplicial_fvector(gale_evenness_facets(2 * k + 3, 2 * k))
