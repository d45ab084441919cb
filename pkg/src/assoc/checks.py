"""Checks on realized polytopes: associahedron recognition, sphericity, parallel facets."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import Polytope, are_antiparallel, convex_hull, norm2
from .polygon import Diagonal, abstract_associahedron, catalan, crossing
from .realizations import enumerate_config_triangulations, gkz_vector, triangle_midpoints_config


@dataclass
class VerificationReport:
    is_associahedron: bool
    dimension: int
    vertex_count: int
    facet_count: int
    is_simple: bool = False
    incidence_isomorphism: dict[int, Diagonal] | None = None
    failure_reason: str | None = None


@dataclass
class ParallelFacetReport:
    pairs: list[tuple[int, int]] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.pairs)


def _incidence_isomorphism(p: Polytope, m: int) -> dict[int, Diagonal] | None:
    """Backtracking search for a facet -> diagonal map inducing vertex -> triangulation.

    Two facets must share a vertex exactly when their diagonals do not
    cross; the final map is checked against every vertex.
    """
    abstract = abstract_associahedron(m)
    diags = list(abstract.facet_labels)
    nf = p.n_facets
    fsets = [set(f.vertices) for f in p.facets]
    meets = [[bool(fsets[a] & fsets[b]) for b in range(nf)] for a in range(nf)]
    compatible = {(d, e): not crossing(d, e) for d in diags for e in diags if d != e}

    def signature_f(a):
        return (len(fsets[a]), sum(meets[a]) - 1)

    def signature_d(d):
        return (len(abstract.incidence[d]), sum(compatible[(d, e)] for e in diags if e != d))

    candidates = {a: [d for d in diags if signature_d(d) == signature_f(a)] for a in range(nf)}
    if any(not c for c in candidates.values()):
        return None

    # grow the assignment along facet adjacency so pruning bites early
    order = [max(range(nf), key=lambda a: (len(fsets[a]), -a))]
    while len(order) < nf:
        rest = [a for a in range(nf) if a not in order]
        order.append(max(rest, key=lambda a: (sum(meets[a][b] for b in order), -len(candidates[a]), -a)))

    targets = {t.diagonals for t in abstract.vertex_labels}
    vfacets = p.vertex_facets()
    assign: dict[int, Diagonal] = {}
    used: set = set()

    def extend(pos: int) -> bool:
        if pos == nf:
            return all(frozenset(assign[f] for f in vf) in targets for vf in vfacets)
        a = order[pos]
        for d in candidates[a]:
            if d in used:
                continue
            if all(meets[a][b] == compatible[(d, assign[b])] for b in assign):
                assign[a] = d
                used.add(d)
                if extend(pos + 1):
                    return True
                del assign[a]
                used.discard(d)
        return False

    return dict(sorted(assign.items())) if extend(0) else None


def verify_associahedron(p: Polytope, n: int) -> VerificationReport:
    """Decide whether p is combinatorially the n-dimensional associahedron."""
    rep = VerificationReport(False, p.intrinsic_dim, p.n_vertices, p.n_facets)
    want_v, want_f = catalan(n + 1), n * (n + 3) // 2
    if p.intrinsic_dim != n:
        rep.failure_reason = f"dimension {p.intrinsic_dim} ≠ {n}"
        return rep
    if p.n_facets != want_f:
        rep.failure_reason = f"facet count {p.n_facets} ≠ {want_f}"
        return rep
    if p.n_vertices != want_v:
        rep.failure_reason = f"vertex count {p.n_vertices} ≠ {want_v}"
        return rep
    for vi, fs in enumerate(p.vertex_facets()):
        if len(fs) != n:
            rep.failure_reason = f"not simple: vertex {vi} lies on {len(fs)} facets"
            return rep
    rep.is_simple = True
    if n == 0:
        rep.is_associahedron = True
        rep.incidence_isomorphism = {}
        return rep
    iso = _incidence_isomorphism(p, n + 3)
    if iso is None:
        rep.failure_reason = "no incidence isomorphism to the associahedron"
        return rep
    rep.incidence_isomorphism = iso
    rep.is_associahedron = True
    return rep


def sphericity_check(p: Polytope) -> tuple[bool, Fraction | None]:
    """All vertices at the same exact squared distance from the origin?"""
    norms = {norm2(v) for v in p.vertices}
    if len(norms) == 1:
        return True, norms.pop()
    return False, None


def parallel_facet_pairs(p: Polytope) -> ParallelFacetReport:
    """Unordered pairs of facets with opposite outer normals."""
    pairs = []
    for a in range(p.n_facets):
        for b in range(a + 1, p.n_facets):
            if are_antiparallel(p.facets[a].normal, p.facets[b].normal):
                pairs.append((a, b))
    return ParallelFacetReport(pairs)


def weakly_convex_demo() -> tuple[Polytope, VerificationReport, ParallelFacetReport]:
    """Secondary polytope of the triangle with its three edge midpoints."""
    q = triangle_midpoints_config()
    poly = convex_hull([gkz_vector(q, t) for t in enumerate_config_triangulations(q)])
    return poly, verify_associahedron(poly, q.m - 3), parallel_facet_pairs(poly)
