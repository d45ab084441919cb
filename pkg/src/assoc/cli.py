"""`assoc` command line: build realizations and complexes, run checks, print exact reports.

Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 input
error, 3 instance larger than the desk-scale guard.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import io
from .checks import parallel_facet_pairs, sphericity_check, verify_associahedron
from .exact import Polytope, convex_hull
from .multi import (
    cyclic_polytope_boundary_fvector,
    enumerate_k_triangulations,
    f_vector,
    flip_graph,
    is_connected,
    jonsson_count,
    maximal_crossing_free_sizes,
    relevant_diagonals,
    resolve_threads,
)
from .polygon import diagonal_label
from .realizations import (
    MinkowskiParams,
    UnsuitableParameters,
    cluster_associahedron,
    default_cluster_params,
    enumerate_config_triangulations,
    gkz_vector,
    minkowski_associahedron,
    minkowski_intervals,
    parabola_config,
    random_convex_config,
    triangle_midpoints_config,
)

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3

MAX_SECONDARY_M = 9
MAX_REALIZATION_N = 5
MAX_MULTI_FACETS = 10_000
MAX_CAPOYLEAS_N = 12

# Published face numbers for the smallest open case.
KNOWN_FVECTORS = {(9, 2): (18, 153, 732, 2115, 3762, 4026, 2376, 594)}


class InputError(Exception):
    pass


class GuardError(Exception):
    pass


@dataclass
class ExperimentReport:
    command: str
    inputs: dict
    results: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    timing_ms: int = 0

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append({"name": name, "pass": bool(ok), "detail": detail})

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def to_dict(self, timing: bool = True) -> dict:
        d = {"command": self.command, "inputs": self.inputs, "results": self.results, "checks": self.checks}
        if timing:
            d["timing_ms"] = self.timing_ms
        return d


# --- argument helpers -----------------------------------------------------------


def _kv(items: list[str]) -> dict[str, str]:
    out = {}
    for item in items:
        if "=" not in item:
            raise InputError(f"expected key=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _rat(s: str) -> Fraction:
    try:
        return io.parse_rational(s)
    except ValueError as e:
        raise InputError(str(e)) from e


def _parse_checks(items: list[str] | None) -> dict[str, str | None]:
    checks: dict[str, str | None] = {}
    for item in items or []:
        name, _, value = item.partition("=")
        if name not in ("sphere", "parallel", "associahedron"):
            raise InputError(f"unknown check {name!r} (use sphere, parallel=N, associahedron)")
        if name == "parallel":
            if not value.isdigit():
                raise InputError("parallel check needs a count, e.g. parallel=0")
        checks[name] = value or None
    return checks


def _polytope_summary(p: Polytope) -> dict:
    return {"dimension": p.intrinsic_dim, "ambient_dimension": p.ambient_dim, "vertices": p.n_vertices, "facets": p.n_facets}


def _analyze(report: ExperimentReport, poly: Polytope, n: int, checks: dict) -> None:
    """Run the three polytope checks, record results, and grade the requested ones."""
    report.results["polytope"] = _polytope_summary(poly)
    ver = verify_associahedron(poly, n)
    report.results["associahedron"] = {
        "is_associahedron": ver.is_associahedron,
        "is_simple": ver.is_simple,
        "failure_reason": ver.failure_reason,
        "facet_diagonals": None
        if ver.incidence_isomorphism is None
        else {str(f): diagonal_label(d) for f, d in ver.incidence_isomorphism.items()},
    }
    on_sphere, r2 = sphericity_check(poly)
    report.results["sphere"] = {"on_sphere": on_sphere, "radius_squared": None if r2 is None else io.fmt(r2)}
    par = parallel_facet_pairs(poly)
    report.results["parallel_facet_pairs"] = {"count": par.count, "pairs": [list(pr) for pr in par.pairs]}

    report.check("associahedron", ver.is_associahedron, ver.failure_reason or f"{n}-dimensional associahedron")
    if "sphere" in checks:
        report.check("sphere", on_sphere, f"radius^2 = {io.fmt(r2)}" if on_sphere else "vertex norms differ")
    want = checks.get("parallel")
    if want is not None:
        report.check("parallel", par.count == int(want), f"{par.count} antiparallel facet pairs (expected {want})")


# --- commands --------------------------------------------------------------------


def cmd_secondary(args) -> ExperimentReport:
    if args.config:
        q = io.config_from_dict(io.read_json(args.config))
        source = {"config": args.config}
    elif args.parabola is not None:
        kv = _kv(args.parabola)
        unknown = set(kv) - {"m", "a", "b", "map", "shift"}
        if unknown:
            raise InputError(f"unknown parabola parameters {sorted(unknown)}")
        m = int(kv.get("m", 6))
        amap = None
        if "map" in kv:
            entries = [_rat(x) for x in kv["map"].split(",")]
            if len(entries) != 4:
                raise InputError("map needs four entries a11,a12,a21,a22")
            amap = [entries[:2], entries[2:]]
        shift = [_rat(x) for x in kv["shift"].split(",")] if "shift" in kv else [0, 0]
        _guard_m(m, args.force)
        q = parabola_config(m, _rat(kv.get("a", "0")), _rat(kv.get("b", "1")), amap, shift)
        source = {"parabola": kv}
    elif args.ngon is not None:
        _guard_m(args.ngon, args.force)
        q = random_convex_config(args.ngon, args.random_seed)
        source = {"ngon": args.ngon, "random_seed": args.random_seed}
    else:
        q = triangle_midpoints_config()
        source = {"triangle_midpoints": True}
    _guard_m(q.m, args.force)
    checks = _parse_checks(args.check)
    report = ExperimentReport("secondary", {**source, "points": io.config_to_dict(q)["points"], "checks": args.check or []})
    triangulations = enumerate_config_triangulations(q)
    gkz = [gkz_vector(q, t, check=False) for t in triangulations]
    poly = convex_hull(gkz)
    report.results["triangulations"] = len(triangulations)
    _analyze(report, poly, q.m - 3, checks)
    if args.out:
        io.write_polytope(poly, args.out)
        report.results["polytope_file"] = args.out
    return report


def _guard_m(m: int, force: bool) -> None:
    if m > MAX_SECONDARY_M and not force:
        raise GuardError(f"instance too large: m = {m} > {MAX_SECONDARY_M} (use --force)")


def _guard_n(n: int, force: bool) -> None:
    if n < 1:
        raise InputError("n must be >= 1")
    if n > MAX_REALIZATION_N and not force:
        raise GuardError(f"instance too large: n = {n} > {MAX_REALIZATION_N} (use --force)")


def cmd_cluster(args) -> ExperimentReport:
    _guard_n(args.n, args.force)
    if args.params:
        try:
            params = io.cluster_params_from_dict(io.read_json(args.params), args.n)
        except (KeyError, TypeError) as e:
            raise InputError(f"malformed parameter file: {e}") from e
        if params.n != args.n:
            raise InputError(f"parameter file is for n = {params.n}, not {args.n}")
    else:
        try:
            params = default_cluster_params(args.n)
        except ValueError as e:
            raise InputError(str(e)) from e
    report = ExperimentReport("cluster", {"n": args.n, "params": io.cluster_params_to_dict(params), "checks": args.check or []})
    try:
        poly = cluster_associahedron(params)
    except UnsuitableParameters as e:
        report.results["unsuitable_pair"] = list(e.pair)
        report.check("parameters", False, str(e))
        return report
    except ValueError as e:
        report.check("parameters", False, str(e))
        return report
    _analyze(report, poly, args.n, _parse_checks(args.check))
    if args.out:
        io.write_polytope(poly, args.out)
        report.results["polytope_file"] = args.out
    return report


def _minkowski_params(args) -> MinkowskiParams:
    if args.params:
        try:
            return io.minkowski_params_from_dict(io.read_json(args.params), args.n)
        except (KeyError, TypeError) as e:
            raise InputError(f"malformed parameter file: {e}") from e
    alpha = {iv: Fraction(1) for iv in minkowski_intervals(args.n)}
    for key, value in _kv(args.alpha or []).items():
        if key == "all":
            alpha = {iv: _rat(value) for iv in alpha}
        else:
            try:
                i, j = (int(x) for x in key.split(","))
            except ValueError as e:
                raise InputError(f"bad interval {key!r}, expected i,j") from e
            alpha[(i, j)] = _rat(value)
    return MinkowskiParams(args.n, alpha)


def cmd_minkowski(args) -> ExperimentReport:
    _guard_n(args.n, args.force)
    params = _minkowski_params(args)
    report = ExperimentReport("minkowski", {"n": args.n, "params": io.minkowski_params_to_dict(params), "checks": args.check or []})
    poly = minkowski_associahedron(params)
    _analyze(report, poly, args.n, _parse_checks(args.check))
    if args.out:
        io.write_polytope(poly, args.out)
        report.results["polytope_file"] = args.out
    return report


def cmd_verify(args) -> ExperimentReport:
    poly = io.read_polytope(args.file)
    n = poly.intrinsic_dim if args.n is None else args.n
    report = ExperimentReport("verify", {"file": args.file, "n": n, "checks": args.check or []})
    _analyze(report, poly, n, _parse_checks(args.check))
    return report


def _facet_str(f) -> list[str]:
    return [diagonal_label(d) for d in f]


def cmd_multi(args) -> ExperimentReport:
    n, k, what = args.n, args.k, args.what
    if k < 1 or n < 2 * k + 1:
        raise InputError(f"need k >= 1 and n >= 2k+1 (got n={n}, k={k})")
    report = ExperimentReport("multi", {"n": n, "k": k, "subcommand": what})
    threads = resolve_threads(args.threads)
    expected = jonsson_count(n, k)
    if what != "capoyleas" and what != "jonsson" and expected > args.max_facets and not args.force:
        raise GuardError(f"instance too large: about {expected} facets > {args.max_facets} (use --force)")
    size = k * (n - 2 * k - 1)

    if what == "fvector":
        fv = f_vector(n, k, threads)
        report.results["f_vector"] = list(fv)
        report.results["relevant_diagonals"] = len(relevant_diagonals(n, k))
        if (n, k) in KNOWN_FVECTORS:
            known = KNOWN_FVECTORS[(n, k)]
            report.check("known_f_vector", fv == known, f"expected {list(known)}")
        report.check("dimension", len(fv) == size, f"{len(fv)} nonzero face numbers, dimension {size - 1}")
        if fv:
            report.check("top_face_count", fv[-1] == expected, f"{fv[-1]} facets, determinant gives {expected}")
    elif what == "facets":
        facets = enumerate_k_triangulations(n, k, threads)
        report.results["facet_count"] = len(facets)
        report.results["facets"] = [_facet_str(f) for f in facets]
        report.check("pure", all(len(f) == size for f in facets), f"every facet has {size} diagonals")
        report.check("count", len(facets) == expected, f"{len(facets)} facets, determinant gives {expected}")
    elif what == "flipgraph":
        facets = enumerate_k_triangulations(n, k, threads)
        adj = flip_graph(facets)
        connected = is_connected(adj)
        degrees = sorted({len(v) for v in adj.values()})
        report.results["nodes"] = len(adj)
        report.results["edges"] = sum(len(v) for v in adj.values()) // 2
        report.results["degrees"] = degrees
        report.check("connected", connected, f"{len(adj)} nodes")
    elif what == "jonsson":
        if expected > args.max_facets and not args.force:
            raise GuardError(f"instance too large: {expected} facets > {args.max_facets} (use --force)")
        count = len(enumerate_k_triangulations(n, k, threads))
        report.results["determinant"] = expected
        report.results["enumerated"] = count
        report.check("jonsson", count == expected, f"determinant {expected}, enumeration {count}")
    elif what == "capoyleas":
        if n > MAX_CAPOYLEAS_N and not args.force:
            raise GuardError(f"instance too large: n = {n} > {MAX_CAPOYLEAS_N} (use --force)")
        sizes = maximal_crossing_free_sizes(n, k)
        bound = k * (2 * n - 2 * k - 1)
        report.results["maximal_set_sizes"] = {str(s): c for s, c in sorted(sizes.items())}
        report.results["bound"] = bound
        report.check("capoyleas_pach", set(sizes) == {bound}, f"all maximal sets have {bound} segments")
    elif what == "cyclic-compare":
        if n != 2 * k + 3:
            raise InputError(f"cyclic-compare needs n = 2k+3 (= {2 * k + 3})")
        ours = f_vector(n, k, threads)
        cyc = cyclic_polytope_boundary_fvector(k)
        report.results["f_vector"] = list(ours)
        report.results["cyclic_f_vector"] = list(cyc)
        report.check("cyclic", ours == cyc, f"boundary of C({2 * k + 3},{2 * k})")
    return report


# --- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None, help="worker processes (default: $ASSOC_THREADS or 1)")
    common.add_argument("--no-timing", action="store_true", help="omit timing_ms so reports are byte-identical")
    common.add_argument("--force", action="store_true", help="override desk-scale guards")

    parser = argparse.ArgumentParser(prog="assoc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("secondary", parents=[common], help="secondary polytope of a planar configuration")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--config", help="JSON file with a 'points' list")
    src.add_argument("--parabola", nargs="*", metavar="KEY=VALUE", help="m=.. a=.. b=.. [map=a11,a12,a21,a22] [shift=x,y]")
    src.add_argument("--ngon", type=int, help="random strictly convex m-gon")
    src.add_argument("--triangle-midpoints", action="store_true", help="triangle with its three edge midpoints")
    s.add_argument("--random-seed", type=int, default=0)
    s.add_argument("--check", action="append", help="sphere | parallel=N | associahedron")
    s.add_argument("--out", help="write the polytope file here")
    s.set_defaults(func=cmd_secondary)

    c = sub.add_parser("cluster", parents=[common], help="cluster realization")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--params", help="JSON file {'n':.., 'f': {'i,j': 'p/q'}}")
    c.add_argument("--check", action="append")
    c.add_argument("--out")
    c.set_defaults(func=cmd_cluster)

    mk = sub.add_parser("minkowski", parents=[common], help="Minkowski sum of interval simplices")
    mk.add_argument("--n", type=int, required=True)
    mk.add_argument("--alpha", action="append", help="all=VALUE or i,j=VALUE")
    mk.add_argument("--params", help="JSON file {'n':.., 'alpha': {'i,j': 'p/q'}}")
    mk.add_argument("--check", action="append")
    mk.add_argument("--out")
    mk.set_defaults(func=cmd_minkowski)

    mu = sub.add_parser("multi", parents=[common], help="multiassociahedron invariants")
    mu.add_argument("--n", type=int, required=True)
    mu.add_argument("--k", type=int, required=True)
    mu.add_argument("what", choices=["fvector", "facets", "flipgraph", "jonsson", "capoyleas", "cyclic-compare"])
    mu.add_argument("--max-facets", type=int, default=MAX_MULTI_FACETS)
    mu.set_defaults(func=cmd_multi)

    v = sub.add_parser("verify", parents=[common], help="check a polytope file")
    v.add_argument("file")
    v.add_argument("--n", type=int, help="expected dimension (default: the polytope's)")
    v.add_argument("--check", action="append")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report = args.func(args)
    except GuardError as e:
        print(f"assoc: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (InputError, ValueError, OSError) as e:
        print(f"assoc: input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    report.timing_ms = int((time.perf_counter() - start) * 1000)
    sys.stdout.write(io.dumps(report.to_dict(timing=not args.no_timing)))
    return EXIT_OK if report.passed else EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
