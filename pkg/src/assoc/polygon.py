"""Diagonals, triangulations and flips of a convex m-gon labeled 1..m."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

Diagonal = tuple  # (i, j) with i < j


def catalan(r: int) -> int:
    if r < 0:
        return 0
    return comb(2 * r, r) // (r + 1)


def diag(i: int, j: int) -> Diagonal:
    return (i, j) if i < j else (j, i)


def is_diagonal(d: Diagonal, m: int) -> bool:
    i, j = d
    return 1 <= i < j <= m and j - i >= 2 and not (i == 1 and j == m)


def diagonals(m: int) -> list[Diagonal]:
    """All m(m-3)/2 diagonals in lexicographic order."""
    if m < 4:
        raise ValueError(f"a {m}-gon has no diagonals (need m >= 4)")
    return [(i, j) for i in range(1, m + 1) for j in range(i + 2, m + 1) if not (i == 1 and j == m)]


def crossing(d1: Diagonal, d2: Diagonal, m: int | None = None) -> bool:
    """Whether two chords of a convex polygon cross in their relative interiors."""
    a, b = sorted(d1)
    c, e = sorted(d2)
    return a < c < b < e or c < a < e < b


def diagonal_label(d: Diagonal) -> str:
    return f"{d[0]}{d[1]}" if max(d) < 10 else f"{d[0]}-{d[1]}"


@dataclass(frozen=True)
class Triangulation:
    triangles: frozenset  # of sorted label triples
    diagonals: frozenset  # of Diagonal

    @classmethod
    def from_triangles(cls, triangles, m: int) -> "Triangulation":
        tris = frozenset(tuple(sorted(t)) for t in triangles)
        ds = set()
        for t in tris:
            for x, y in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2])):
                if is_diagonal((x, y), m):
                    ds.add((x, y))
        return cls(tris, frozenset(ds))

    def sorted_diagonals(self) -> list[Diagonal]:
        return sorted(self.diagonals)

    def __str__(self) -> str:
        return "{" + ",".join(diagonal_label(d) for d in self.sorted_diagonals()) + "}"


def _triangulate(labels: tuple[int, ...]) -> list[list[tuple[int, int, int]]]:
    """Triangulations of the convex polygon with the given cyclic labels.

    Each is produced by choosing the apex over the closing edge
    (labels[0], labels[-1]) and recursing on both sides.
    """
    if len(labels) < 3:
        return [[]]
    out = []
    first, last = labels[0], labels[-1]
    for k in range(1, len(labels) - 1):
        apex = labels[k]
        for left in _triangulate(labels[: k + 1]):
            for right in _triangulate(labels[k:]):
                out.append(left + right + [(first, apex, last)])
    return out


@lru_cache(maxsize=None)
def enumerate_triangulations(m: int) -> tuple[Triangulation, ...]:
    if m < 3:
        raise ValueError("need at least 3 vertices")
    return tuple(Triangulation.from_triangles(ts, m) for ts in _triangulate(tuple(range(1, m + 1))))


def flip(t: Triangulation, d: Diagonal, m: int | None = None) -> Triangulation:
    """Replace diagonal d by the other diagonal of its quadrilateral."""
    d = diag(*d)
    if d not in t.diagonals:
        raise ValueError(f"diagonal {diagonal_label(d)} is not in the triangulation")
    adj = [tri for tri in t.triangles if d[0] in tri and d[1] in tri]
    assert len(adj) == 2
    x, y = (next(v for v in tri if v not in d) for tri in adj)
    new = diag(x, y)
    tris = set(t.triangles) - set(adj)
    tris.add(tuple(sorted((x, y, d[0]))))
    tris.add(tuple(sorted((x, y, d[1]))))
    return Triangulation(frozenset(tris), (t.diagonals - {d}) | {new})


def flip_graph(m: int) -> dict[int, set[int]]:
    """Adjacency between indices of enumerate_triangulations(m)."""
    ts = enumerate_triangulations(m)
    index = {t.diagonals: i for i, t in enumerate(ts)}
    return {i: {index[flip(t, d).diagonals] for d in t.diagonals} for i, t in enumerate(ts)}


@dataclass(frozen=True)
class AbstractAssociahedron:
    m: int
    vertex_labels: tuple[Triangulation, ...]
    facet_labels: tuple[Diagonal, ...]
    incidence: dict  # Diagonal -> frozenset of vertex indices


def abstract_associahedron(m: int) -> AbstractAssociahedron:
    ds = tuple(diagonals(m))
    ts = enumerate_triangulations(m)
    inc = {d: frozenset(i for i, t in enumerate(ts) if d in t.diagonals) for d in ds}
    return AbstractAssociahedron(m, ts, ds, inc)
