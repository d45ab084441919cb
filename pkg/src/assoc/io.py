"""JSON file formats. Every rational is written as a string "p/q" (or "p")."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .exact import Facet, Polytope, vec
from .realizations import ClusterParams, MinkowskiParams, PointConfig2D

POLYTOPE_FORMAT = "assoc-polytope"


def fmt(x) -> str:
    return str(Fraction(x))


def fmt_vec(v) -> list[str]:
    return [fmt(x) for x in v]


def parse_rational(s) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise ValueError(f"expected a rational as string or integer, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"bad rational {s!r}") from e


def polytope_to_dict(p: Polytope) -> dict:
    hull = None
    if p.affine_hull is not None:
        point, basis = p.affine_hull
        hull = {"point": fmt_vec(point), "basis": [fmt_vec(b) for b in basis]}
    return {
        "format": POLYTOPE_FORMAT,
        "version": 1,
        "ambient_dim": p.ambient_dim,
        "intrinsic_dim": p.intrinsic_dim,
        "vertices": [fmt_vec(v) for v in p.vertices],
        "facets": [{"normal": fmt_vec(f.normal), "offset": fmt(f.offset), "vertices": list(f.vertices)} for f in p.facets],
        "affine_hull": hull,
    }


def polytope_from_dict(data: dict) -> Polytope:
    if data.get("format") != POLYTOPE_FORMAT:
        raise ValueError(f"not an {POLYTOPE_FORMAT} file")
    try:
        vertices = tuple(tuple(parse_rational(x) for x in v) for v in data["vertices"])
        facets = tuple(
            Facet(tuple(parse_rational(x) for x in f["normal"]), parse_rational(f["offset"]), tuple(sorted(int(i) for i in f["vertices"])))
            for f in data["facets"]
        )
        hull = data.get("affine_hull")
        if hull is not None:
            hull = (vec(parse_rational(x) for x in hull["point"]), tuple(vec(parse_rational(x) for x in b) for b in hull["basis"]))
        p = Polytope(vertices, facets, int(data["ambient_dim"]), int(data["intrinsic_dim"]), hull)
    except (KeyError, TypeError) as e:
        raise ValueError(f"malformed polytope file: missing or invalid field {e}") from e
    if any(len(v) != p.ambient_dim for v in p.vertices) or any(len(f.normal) != p.ambient_dim for f in p.facets):
        raise ValueError("malformed polytope file: dimension mismatch")
    for f in p.facets:
        if any(i < 0 or i >= len(vertices) for i in f.vertices):
            raise ValueError("malformed polytope file: incidence index out of range")
    p.check_invariants()
    return p


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def write_polytope(p: Polytope, path) -> None:
    Path(path).write_text(dumps(polytope_to_dict(p)))


def read_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise ValueError(f"{path}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from e


def read_polytope(path) -> Polytope:
    return polytope_from_dict(read_json(path))


def config_to_dict(q: PointConfig2D) -> dict:
    return {"points": [fmt_vec(p) for p in q.points]}


def config_from_dict(data: dict) -> PointConfig2D:
    if not isinstance(data, dict) or not isinstance(data.get("points"), list):
        raise ValueError("point configuration needs a 'points' list")
    return PointConfig2D(tuple(tuple(parse_rational(x) for x in p) for p in data["points"]))


def _pair(key: str) -> tuple[int, int]:
    try:
        i, j = key.split(",")
        return int(i), int(j)
    except ValueError as e:
        raise ValueError(f"bad index pair {key!r}, expected 'i,j'") from e


def cluster_params_from_dict(data: dict, n: int | None = None) -> ClusterParams:
    n = int(data.get("n", n)) if data.get("n", n) is not None else None
    if n is None:
        raise ValueError("cluster parameters need 'n'")
    return ClusterParams(n, {_pair(k): parse_rational(v) for k, v in data["f"].items()})


def cluster_params_to_dict(p: ClusterParams) -> dict:
    return {"n": p.n, "f": {f"{i},{j}": fmt(v) for (i, j), v in sorted(p.f.items())}}


def minkowski_params_from_dict(data: dict, n: int | None = None) -> MinkowskiParams:
    n = int(data.get("n", n)) if data.get("n", n) is not None else None
    if n is None:
        raise ValueError("Minkowski parameters need 'n'")
    return MinkowskiParams(n, {_pair(k): parse_rational(v) for k, v in data["alpha"].items()})


def minkowski_params_to_dict(p: MinkowskiParams) -> dict:
    return {"n": p.n, "alpha": {f"{i},{j}": fmt(v) for (i, j), v in sorted(p.alpha.items())}}
