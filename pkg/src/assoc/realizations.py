"""Exact constructions of associahedra.

Three families are built here: secondary polytopes of planar point
configurations (GKZ vectors of all triangulations), the cluster polytope
cut out by difference inequalities in the hyperplane sum(x) = 0, and
weighted Minkowski sums of the simplices on intervals of coordinates.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .exact import Polytope, Vector, affine_dimension, convex_hull, dot, triangle_area, vec

# --- planar configurations --------------------------------------------------


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class PointConfig2D:
    """Points labeled 1..m counterclockwise along the boundary of their hull.

    Each hull edge may carry at most one extra point in its relative interior.
    """

    points: tuple[Vector, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(vec(p) for p in self.points))
        self.validate()

    @property
    def m(self) -> int:
        return len(self.points)

    def validate(self) -> None:
        pts = self.points
        m = len(pts)
        if any(len(p) != 2 for p in pts):
            raise ValueError("points must be 2-dimensional")
        if len(set(pts)) != m:
            raise ValueError("points must be distinct")
        if m < 3:
            raise ValueError("need at least 3 points")
        for i in range(m):
            a, b = pts[i], pts[(i + 1) % m]
            for j, c in enumerate(pts):
                if _cross(a, b, c) < 0:
                    raise ValueError(
                        f"points are not in counterclockwise convex position (edge {i + 1}-{(i + 1) % m + 1})"
                    )
        flat = [self.is_edge_point(i) for i in range(m)]
        if all(flat):
            raise ValueError("points are collinear")
        for i in range(m):
            if flat[i]:
                prev, nxt = pts[i - 1], pts[(i + 1) % m]
                if dot([pts[i][0] - prev[0], pts[i][1] - prev[1]], [nxt[0] - pts[i][0], nxt[1] - pts[i][1]]) <= 0:
                    raise ValueError(f"point {i + 1} doubles back along its edge")
                if flat[(i + 1) % m]:
                    raise ValueError(f"more than one point inside the hull edge through point {i + 1}")

    def is_edge_point(self, i: int) -> bool:
        """Whether point i (0-based) lies in the relative interior of a hull edge."""
        m = len(self.points)
        return _cross(self.points[i - 1], self.points[i], self.points[(i + 1) % m]) == 0

    @property
    def strictly_convex(self) -> bool:
        return not any(self.is_edge_point(i) for i in range(self.m))

    def area(self) -> Fraction:
        pts = self.points
        return abs(sum(_cross(pts[0], pts[i], pts[i + 1]) for i in range(1, len(pts) - 1))) / 2


def _orient_ccw(points: list[Vector]) -> list[Vector]:
    signed = sum(_cross(points[0], points[i], points[i + 1]) for i in range(1, len(points) - 1))
    return points if signed > 0 else points[::-1]


def parabola_config(m: int, a=0, b=1, affine_map: Sequence[Sequence] | None = None, shift: Sequence = (0, 0)) -> PointConfig2D:
    """Points (t, t^2) at t = a + i*b, i = 0..m-1, pushed through x -> A x + shift.

    If the map reverses orientation the list is reversed so the labels stay
    counterclockwise.
    """
    if m < 4:
        raise ValueError("need m >= 4")
    a, b = Fraction(a), Fraction(b)
    if b == 0:
        raise ValueError("coincident points (b = 0)")
    mat = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]] if affine_map is None else [vec(r) for r in affine_map]
    if mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0] == 0:
        raise ValueError("singular affine map")
    sx, sy = vec(shift)
    pts = []
    for i in range(m):
        t = a + i * b
        x, y = t, t * t
        pts.append((mat[0][0] * x + mat[0][1] * y + sx, mat[1][0] * x + mat[1][1] * y + sy))
    return PointConfig2D(tuple(_orient_ccw(pts)))


def random_affine_map(rng: random.Random) -> tuple[list[list[Fraction]], tuple[Fraction, Fraction]]:
    while True:
        mat = [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(2)] for _ in range(2)]
        if mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0] != 0:
            break
    shift = (Fraction(rng.randint(-20, 20), rng.randint(1, 7)), Fraction(rng.randint(-20, 20), rng.randint(1, 7)))
    return mat, shift


def random_convex_config(m: int, seed: int = 0) -> PointConfig2D:
    """Strictly convex m-gon with rational vertices near the unit circle.

    Angles come from sorted rational stereographic parameters; each point is
    then scaled radially by a random rational in [9/10, 1]. Candidates that
    fail strict convexity are redrawn.
    """
    rng = random.Random(seed)
    while True:
        ts = sorted({Fraction(rng.randint(-4000, 4000), 1000) for _ in range(m)})
        if len(ts) < m:
            continue
        pts = []
        for t in ts:
            r = Fraction(rng.randint(900, 1000), 1000)
            den = 1 + t * t
            pts.append((r * (1 - t * t) / den, r * 2 * t / den))
        try:
            q = PointConfig2D(tuple(_orient_ccw(pts)))
        except ValueError:
            continue
        if q.strictly_convex:
            return q


def triangle_midpoints_config() -> PointConfig2D:
    """The triangle (0,0),(2,0),(0,2) together with its three edge midpoints."""
    return PointConfig2D(((0, 0), (1, 0), (2, 0), (1, 1), (0, 2), (0, 1)))


# --- triangulations of configurations ----------------------------------------


@dataclass(frozen=True)
class ConfigTriangulation:
    triangles: frozenset  # sorted label triples, labels 1..m
    used_points: frozenset = field(default=frozenset())

    def __post_init__(self):
        tris = frozenset(tuple(sorted(t)) for t in self.triangles)
        object.__setattr__(self, "triangles", tris)
        object.__setattr__(self, "used_points", frozenset(v for t in tris for v in t))

    def edges(self) -> frozenset:
        return frozenset((t[a], t[b]) for t in self.triangles for a, b in ((0, 1), (1, 2), (0, 2)))


@lru_cache(maxsize=64)
def enumerate_config_triangulations(q: PointConfig2D) -> tuple[ConfigTriangulation, ...]:
    """All triangulations of a weakly convex configuration.

    Points in the relative interior of a hull edge may be left unused.
    """
    m = q.m
    start = next(i for i in range(m) if not q.is_edge_point(i))
    order = [(start + s) % m for s in range(m)]
    pts = [q.points[i] for i in order]
    label = [i + 1 for i in order]

    @lru_cache(maxsize=None)
    def chain(i: int, j: int) -> tuple:
        # region bounded by the boundary chain i..j and the segment j -> i
        if j - i == 1:
            return ((),)
        if all(_cross(pts[i], pts[k], pts[j]) == 0 for k in range(i + 1, j)):
            return ((),)
        out = []
        for k in range(i + 1, j):
            if _cross(pts[i], pts[k], pts[j]) == 0:
                continue
            tri = (label[i], label[k], label[j])
            for left in chain(i, k):
                for right in chain(k, j):
                    out.append(left + right + (tri,))
        return tuple(out)

    results = list(chain(0, m - 1))
    if q.is_edge_point(order[-1]):
        # the last point may also be skipped, closing the polygon along the full edge
        results += chain(0, m - 2)
    tris = [ConfigTriangulation(frozenset(r)) for r in results]
    return tuple(sorted(tris, key=lambda t: sorted(t.triangles)))


def gkz_vector(q: PointConfig2D, t: ConfigTriangulation, check: bool = True) -> Vector:
    """GKZ vector with f_i = e_1 + ... + e_i in dimension m.

    Coordinate l is the sum over points i >= l of the total area of the
    triangles of t containing point i.
    """
    if check and t not in set(enumerate_config_triangulations(q)):
        raise ValueError("not a triangulation of the configuration")
    m = q.m
    weight = [Fraction(0)] * (m + 1)
    for tri in t.triangles:
        area = triangle_area(*(q.points[v - 1] for v in tri))
        if area == 0:
            raise ValueError(f"degenerate triangle {tri}")
        for v in tri:
            weight[v] += area
    out = []
    acc = Fraction(0)
    for i in range(m, 0, -1):
        acc += weight[i]
        out.append(acc)
    return tuple(reversed(out))


def secondary_polytope(q: PointConfig2D) -> Polytope:
    if q.m < 4:
        raise ValueError("dimension < 1")
    return convex_hull([gkz_vector(q, t, check=False) for t in enumerate_config_triangulations(q)])


def polygon_triangulation_of(q: PointConfig2D, t: ConfigTriangulation) -> frozenset:
    """Diagonal set of the matching triangulation of a convex m-gon.

    Keeps the diagonals of t and adds the chord (i-1, i+1) around every
    unused edge point i.
    """
    m = q.m
    out = set()
    for a, b in t.edges():
        if (b - a) % m not in (1, m - 1):
            out.add((a, b))
    for i in range(1, m + 1):
        if i not in t.used_points:
            a, b = sorted(((i - 2) % m + 1, i % m + 1))
            out.add((a, b))
    return frozenset(out)


# --- cluster realization ------------------------------------------------------


def cluster_pairs(n: int) -> list[tuple[int, int]]:
    """Index pairs (i, j), i != j, i - j >= -1, over 1..n+1."""
    return [(i, j) for i in range(1, n + 2) for j in range(1, n + 2) if i != j and i - j >= -1]


@dataclass(frozen=True)
class ClusterParams:
    n: int
    f: Mapping  # (i, j) -> positive Fraction

    def __post_init__(self):
        f = {tuple(k): Fraction(v) for k, v in dict(self.f).items()}
        expected = set(cluster_pairs(self.n))
        if set(f) != expected:
            missing = sorted(expected - set(f))
            extra = sorted(set(f) - expected)
            raise ValueError(f"cluster parameters need exactly the pairs i-j >= -1 (missing {missing}, unexpected {extra})")
        bad = [k for k, v in f.items() if v <= 0]
        if bad:
            raise ValueError(f"cluster parameters must be positive: {sorted(bad)}")
        object.__setattr__(self, "f", f)


class NotAPolytope(ValueError):
    pass


class UnsuitableParameters(ValueError):
    def __init__(self, pair, message):
        super().__init__(message)
        self.pair = pair


# Found by searching candidate weight tables and frozen here; every table is
# re-verified as an associahedron in tests/test_realizations.py.
_CLUSTER_DEFAULTS: dict[int, dict[tuple[int, int], int]] = {
    1: {(1, 2): 2, (2, 1): 5},
    2: {(1, 2): 3, (2, 1): 7, (2, 3): 3, (3, 1): 12, (3, 2): 7},
    3: {(1, 2): 4, (2, 1): 9, (2, 3): 4, (3, 1): 16, (3, 2): 9, (3, 4): 4, (4, 1): 21, (4, 2): 16, (4, 3): 9},
    4: {
        (1, 2): 5, (2, 1): 11, (2, 3): 5, (3, 1): 20, (3, 2): 11, (3, 4): 5, (4, 1): 27,
        (4, 2): 20, (4, 3): 11, (4, 5): 5, (5, 1): 32, (5, 2): 27, (5, 3): 20, (5, 4): 11,
    },
    5: {
        (1, 2): 6, (2, 1): 13, (2, 3): 6, (3, 1): 24, (3, 2): 13, (3, 4): 6, (4, 1): 33,
        (4, 2): 24, (4, 3): 13, (4, 5): 6, (5, 1): 40, (5, 2): 33, (5, 3): 24, (5, 4): 13,
        (5, 6): 6, (6, 1): 45, (6, 2): 40, (6, 3): 33, (6, 4): 24, (6, 5): 13,
    },
}


def default_cluster_params(n: int) -> ClusterParams:
    if n not in _CLUSTER_DEFAULTS:
        raise ValueError(f"no default cluster parameters for n = {n}")
    return ClusterParams(n, _CLUSTER_DEFAULTS[n])


def _tree_solution(size: int, eqs) -> Vector | None:
    """Solve x_i - x_j = c for the given equations plus sum(x) = 0.

    The system is nonsingular exactly when the pairs form a spanning tree
    on 1..size; otherwise None.
    """
    adj: dict[int, list] = {k: [] for k in range(1, size + 1)}
    for (i, j), c in eqs:
        adj[i].append((j, -c))
        adj[j].append((i, c))
    x = {1: Fraction(0)}
    stack = [1]
    while stack:
        u = stack.pop()
        for w, c in adj[u]:
            if w not in x:
                x[w] = x[u] + c
                stack.append(w)
    if len(x) < size:
        return None
    shift = sum(x.values()) / size
    return tuple(x[k] - shift for k in range(1, size + 1))


def cluster_associahedron(p: ClusterParams) -> Polytope:
    """Polytope {x : x_i - x_j <= f_ij, sum x = 0} with every inequality facet-defining."""
    n = p.n
    pairs = cluster_pairs(n)
    rows = []
    for i, j in pairs:
        r = [0] * (n + 1)
        r[i - 1], r[j - 1] = 1, -1
        rows.append((tuple(r), p.f[(i, j)]))
    verts = set()
    # The normals e_i - e_j positively span the hyperplane (each e_i - e_j is a
    # sum of consecutive e_l - e_{l+1}, whose negatives are also normals), so
    # the region is bounded; 0 is interior because f > 0.
    for combo in itertools.combinations(range(len(pairs)), n):
        x = _tree_solution(n + 1, [(pairs[c], p.f[pairs[c]]) for c in combo])
        if x is not None and all(dot(r, x) <= b for r, b in rows):
            verts.add(x)
    if not verts or affine_dimension(sorted(verts)) != n:
        raise NotAPolytope("parameters do not define a polytope")
    poly = convex_hull(sorted(verts))
    for (r, b), pair in zip(rows, pairs):
        tight = [v for v in poly.vertices if dot(r, v) == b]
        if not tight or affine_dimension(tight) != n - 1:
            raise UnsuitableParameters(
                pair, f"parameters not suitable: inequality x{pair[0]} - x{pair[1]} <= {p.f[pair]} is redundant"
            )
    return poly


# --- Minkowski sums of simplices ----------------------------------------------


def minkowski_intervals(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 2) for j in range(i + 1, n + 2)]


@dataclass(frozen=True)
class MinkowskiParams:
    n: int
    alpha: Mapping  # (i, j) -> positive Fraction, 1 <= i < j <= n+1

    def __post_init__(self):
        alpha = {tuple(k): Fraction(v) for k, v in dict(self.alpha).items()}
        valid = set(minkowski_intervals(self.n))
        extra = sorted(set(alpha) - valid)
        if extra:
            raise ValueError(f"intervals out of range for n = {self.n}: {extra}")
        bad = sorted(k for k, v in alpha.items() if v <= 0)
        if bad:
            raise ValueError(f"weights must be positive: {bad}")
        if not alpha:
            raise ValueError("no intervals given")
        object.__setattr__(self, "alpha", alpha)

    @classmethod
    def uniform(cls, n: int, value=1) -> "MinkowskiParams":
        return cls(n, {iv: value for iv in minkowski_intervals(n)})


def simplex_vertices(i: int, j: int, dim: int, weight=1) -> list[Vector]:
    w = Fraction(weight)
    return [tuple(w if c == k - 1 else Fraction(0) for c in range(dim)) for k in range(i, j + 1)]


def minkowski_sum(p: Sequence[Vector], q: Sequence[Vector]) -> list[Vector]:
    """Vertices of conv(p) + conv(q)."""
    return list(convex_hull([tuple(a + b for a, b in zip(u, v)) for u in p for v in q]).vertices)


def minkowski_associahedron(p: MinkowskiParams, order: Sequence[tuple[int, int]] | None = None) -> Polytope:
    dim = p.n + 1
    terms = list(order) if order is not None else sorted(p.alpha)
    acc = [tuple(Fraction(0) for _ in range(dim))]
    for i, j in terms:
        acc = minkowski_sum(acc, simplex_vertices(i, j, dim, p.alpha[(i, j)]))
    return convex_hull(acc)
