"""Exact rational linear algebra and convex hulls.

Scalars are :class:`fractions.Fraction`, vectors are tuples of fractions.
The hull routine is an incremental beneath-beyond construction run in the
affine hull of the input, with every predicate evaluated on integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from operator import mul
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]


def vec(xs: Iterable) -> Vector:
    return tuple(Fraction(x) for x in xs)


def dot(u: Sequence, v: Sequence):
    return sum(map(mul, u, v))


def sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def norm2(v: Sequence) -> Fraction:
    return Fraction(sum(x * x for x in v))


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form. Returns the nonzero rows and pivot columns."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        row = m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], row)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of {x : rows @ x = 0}."""
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> Vector | None:
    """Solve the square system a x = b; None if a is singular."""
    n = len(a)
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) > n:
        return None
    return tuple(row[n] for row in reduced)


def det(a: Sequence[Sequence]) -> Fraction:
    m = [[Fraction(x) for x in row] for row in a]
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        piv = m[c][c]
        result *= piv
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / piv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def affine_dimension(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull; -1 for an empty set."""
    if not points:
        raise ValueError("empty point set")
    p0 = points[0]
    return rank([sub(p, p0) for p in points[1:]])


def primitive(v: Sequence) -> tuple[tuple[int, ...], Fraction]:
    """Scale v by a positive rational to a primitive integer vector.

    Returns the integer vector and the positive scale factor used.
    """
    fr = [Fraction(x) for x in v]
    den = lcm(*(x.denominator for x in fr))
    ints = [int(x * den) for x in fr]
    g = gcd(*ints)
    if g == 0:
        raise ValueError("zero vector")
    return tuple(x // g for x in ints), Fraction(den, g)


def are_antiparallel(u: Sequence, v: Sequence) -> bool:
    """True iff v is a negative multiple of u."""
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    if all(x == 0 for x in u) or all(x == 0 for x in v):
        raise ValueError("zero vector")
    i = next(i for i, x in enumerate(u) if x != 0)
    lam = Fraction(v[i]) / Fraction(u[i])
    if lam >= 0:
        return False
    return all(Fraction(b) == lam * a for a, b in zip(u, v))


def triangle_area(a: Sequence, b: Sequence, c: Sequence) -> Fraction:
    """Unsigned area of the planar triangle abc."""
    cross = (Fraction(b[0]) - a[0]) * (Fraction(c[1]) - a[1]) - (Fraction(b[1]) - a[1]) * (
        Fraction(c[0]) - a[0]
    )
    return abs(cross) / 2


@dataclass(frozen=True)
class Facet:
    normal: Vector  # primitive integer vector, outward, inside the affine hull's direction space
    offset: Fraction
    vertices: tuple[int, ...]  # sorted indices into Polytope.vertices


@dataclass(frozen=True)
class Polytope:
    vertices: tuple[Vector, ...]
    facets: tuple[Facet, ...]
    ambient_dim: int
    intrinsic_dim: int
    affine_hull: tuple[Vector, tuple[Vector, ...]] | None = None

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_facets(self) -> int:
        return len(self.facets)

    def vertex_facets(self) -> list[set[int]]:
        """For each vertex, the indices of the facets containing it."""
        out: list[set[int]] = [set() for _ in self.vertices]
        for fi, f in enumerate(self.facets):
            for v in f.vertices:
                out[v].add(fi)
        return out

    def check_invariants(self) -> None:
        """Raise ValueError if a facet inequality or incidence is wrong."""
        for fi, f in enumerate(self.facets):
            inc = set(f.vertices)
            for vi, v in enumerate(self.vertices):
                val = dot(f.normal, v)
                if val > f.offset:
                    raise ValueError(f"vertex {vi} violates facet {fi}")
                if (val == f.offset) != (vi in inc):
                    raise ValueError(f"incidence of vertex {vi} on facet {fi} is wrong")


# --- hull internals: integer points, full-dimensional in R^d ---------------


def _int_det(m: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    m = [row[:] for row in m]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if p is None:
                return 0
            m[k], m[p] = m[p], m[k]
            sign = -sign
        pk = m[k][k]
        for i in range(k + 1, n):
            mi, mik = m[i], m[i][k]
            mk = m[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pk - mik * mk[j]) // prev
        prev = pk
    return sign * m[n - 1][n - 1]


def _int_hyperplane(pts: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], int]:
    """Primitive normal a and offset b with a.x = b through d affinely independent points."""
    p0 = pts[0]
    rows = [[x - y for x, y in zip(p, p0)] for p in pts[1:]]
    d = len(p0)
    a = []
    for c in range(d):
        minor = [r[:c] + r[c + 1:] for r in rows]
        a.append((-1) ** c * _int_det(minor))
    g = gcd(*a)
    if g == 0:
        raise ValueError("points do not span a hyperplane")
    a = tuple(x // g for x in a)
    return a, dot(a, p0)


def _independent(points: Sequence[Sequence[int]], idx: Iterable[int], want: int) -> list[int]:
    """Greedily pick up to `want` affinely independent points among idx."""
    chosen: list[int] = []
    basis: list[list[int]] = []  # integer echelon rows of differences
    pivcols: list[int] = []
    p0 = None
    for i in idx:
        if len(chosen) == want:
            break
        if p0 is None:
            p0 = points[i]
            chosen.append(i)
            continue
        row = [x - y for x, y in zip(points[i], p0)]
        for b, c in zip(basis, pivcols):
            if row[c] != 0:
                f, bc = row[c], b[c]
                row = [x * bc - f * y for x, y in zip(row, b)]
        c = next((j for j, x in enumerate(row) if x != 0), None)
        if c is None:
            continue
        g = gcd(*row)
        basis.append([x // g for x in row])
        pivcols.append(c)
        chosen.append(i)
    return chosen


def _hull_full(points: list[tuple[int, ...]], d: int) -> dict[tuple, frozenset]:
    """Beneath-beyond hull of distinct, full-dimensional integer points in R^d.

    Returns {(normal, offset): incident point indices}. Incidences may still
    contain boundary points that are not extreme.
    """
    start = _independent(points, range(len(points)), d + 1)
    facets: dict[tuple, frozenset] = {}
    for omit in start:
        rest = [i for i in start if i != omit]
        a, b = _int_hyperplane([points[i] for i in rest])
        if dot(a, points[omit]) > b:
            a, b = tuple(-x for x in a), -b
        facets[(a, b)] = frozenset(rest)
    chosen = set(start)
    rest = [i for i in range(len(points)) if i not in chosen]
    ridge_cache: dict[frozenset, list[int]] = {}

    for i in rest:
        p = points[i]
        vis, coplanar, hidden = [], [], []
        for key in facets:
            s = dot(key[0], p)
            if s > key[1]:
                vis.append(key)
            elif s == key[1]:
                coplanar.append(key)
            else:
                hidden.append(key)
        if not vis:
            # p lies inside or on the boundary; keep incidences exact
            for key in coplanar:
                facets[key] = facets[key] | {i}
            continue
        new: dict[tuple, set] = {}
        for vk in vis:
            vset = facets[vk]
            for gk in hidden:
                s = vset & facets[gk]
                if len(s) < d - 1:
                    continue
                basis = ridge_cache.get(s)
                if basis is None:
                    basis = ridge_cache[s] = _independent(points, sorted(s), d - 1)
                if len(basis) != d - 1:
                    continue
                a, b = _int_hyperplane([points[j] for j in basis] + [p])
                ref = next(j for j in facets[gk] if j not in s)
                if dot(a, points[ref]) > b:
                    a, b = tuple(-x for x in a), -b
                # the new hyperplane meets the old hull exactly in this ridge
                new.setdefault((a, b), set()).update(s)
        for vk in vis:
            del facets[vk]
        for gk in coplanar:
            facets[gk] = facets[gk] | {i}
        for key, inc in new.items():
            inc.add(i)
            facets[key] = frozenset(inc)
    return facets


def _extreme(points: list[tuple[int, ...]], facets: dict[tuple, frozenset], d: int) -> set[int]:
    on: dict[int, list] = {}
    for key, inc in facets.items():
        for j in inc:
            on.setdefault(j, []).append(key[0])
    origin = (0,) * d
    return {j for j, normals in on.items() if len(_independent([origin] + normals, range(len(normals) + 1), d + 1)) == d + 1}


def convex_hull(points: Sequence[Sequence]) -> Polytope:
    """Exact convex hull with full vertex-facet incidences.

    Lower-dimensional inputs are handled inside their affine hull; facet
    normals are then chosen inside the hull's direction space, so they are
    canonical regardless of the affine basis.
    """
    if not points:
        raise ValueError("empty point set")
    pts = sorted({vec(p) for p in points})
    ambient = len(pts[0])
    if any(len(p) != ambient for p in pts):
        raise ValueError("points of mixed dimension")
    if len(pts) == 1:
        return Polytope(tuple(pts), (), ambient, 0, (pts[0], ()))

    p0 = pts[0]
    diffs = [sub(p, p0) for p in pts[1:]]
    dir_rows, pivcols = rref(diffs)
    d = len(pivcols)
    full = d == ambient
    # Projection onto the pivot coordinates is injective on the affine hull.
    scale = lcm(*(x.denominator for p in pts for x in (p[c] for c in pivcols)))
    proj = [tuple(int(p[c] * scale) for c in pivcols) for p in pts]

    if d == 1:
        lo = min(range(len(pts)), key=lambda j: proj[j][0])
        hi = max(range(len(pts)), key=lambda j: proj[j][0])
        raw = {((-1,), -proj[lo][0]): frozenset([lo]), ((1,), proj[hi][0]): frozenset([hi])}
        keep = {lo, hi}
    else:
        raw = _hull_full(proj, d)
        keep = _extreme(proj, raw, d)

    basis = tuple(tuple(r) for r in dir_rows)
    gram = [[dot(u, w) for w in basis] for u in basis]
    order = sorted(keep, key=lambda j: pts[j])
    vertices = tuple(pts[j] for j in order)

    facets = []
    for (a, _b) in raw:
        if full:
            normal = vec(a)
        else:
            rhs = [sum(a[t] * u[c] for t, c in enumerate(pivcols)) for u in basis]
            y = solve(gram, rhs)
            amb = [sum(y[t] * basis[t][c] for t in range(d)) for c in range(ambient)]
            normal = vec(primitive(amb)[0])
        vals = [dot(normal, v) for v in vertices]
        off = max(vals)
        inc = tuple(j for j, x in enumerate(vals) if x == off)
        facets.append(Facet(normal, off, inc))
    facets.sort(key=lambda f: (f.normal, f.offset))
    hull = None if full else (p0, basis)
    return Polytope(vertices, tuple(facets), ambient, d, hull)
