import json

import pytest

from assoc import io
from assoc.cli import main
from assoc.exact import convex_hull
from assoc.realizations import cluster_pairs


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out else None), err


def checks_by_name(report):
    return {c["name"]: c["pass"] for c in report["checks"]}


def test_secondary_parabola_sphere(capsys):
    code, rep, _ = run(capsys, "secondary", "--parabola", "m=7", "a=0", "b=1", "--check", "sphere")
    assert code == 0
    assert rep["results"]["sphere"]["on_sphere"]
    assert isinstance(rep["results"]["sphere"]["radius_squared"], str)
    assert checks_by_name(rep) == {"associahedron": True, "sphere": True}


def test_secondary_ngon_parallel(capsys):
    code, rep, _ = run(capsys, "secondary", "--ngon", "6", "--random-seed", "7", "--check", "parallel=0")
    assert code == 0 and rep["results"]["parallel_facet_pairs"]["count"] == 0


def test_secondary_triangle_midpoints(capsys):
    code, rep, _ = run(capsys, "secondary", "--triangle-midpoints", "--check", "parallel=3")
    assert code == 0 and rep["results"]["triangulations"] == 14


def test_failed_check_exits_one(capsys):
    code, rep, _ = run(capsys, "secondary", "--ngon", "6", "--check", "sphere")
    assert code == 1 and checks_by_name(rep)["sphere"] is False


def test_cluster_and_minkowski(capsys):
    code, rep, _ = run(capsys, "cluster", "--n", "3", "--check", "parallel=3")
    assert code == 0 and rep["results"]["associahedron"]["is_associahedron"]
    code, rep, _ = run(capsys, "minkowski", "--n", "2", "--alpha", "all=1")
    assert code == 0 and rep["results"]["polytope"]["vertices"] == 5


def test_cluster_unsuitable_params(capsys, tmp_path):
    f = {f"{i},{j}": "1" for i, j in cluster_pairs(2)}
    f["3,1"] = "100"
    path = tmp_path / "f.json"
    path.write_text(json.dumps({"n": 2, "f": f}))
    code, rep, _ = run(capsys, "cluster", "--n", "2", "--params", str(path))
    assert code == 1
    assert rep["results"]["unsuitable_pair"] == [3, 1]
    assert "not suitable" in rep["checks"][0]["detail"]


def test_multi_examples(capsys):
    code, rep, _ = run(capsys, "multi", "--n", "9", "--k", "2", "fvector")
    assert code == 0 and rep["results"]["f_vector"] == [18, 153, 732, 2115, 3762, 4026, 2376, 594]
    code, rep, _ = run(capsys, "multi", "--n", "6", "--k", "2", "facets")
    assert code == 0 and rep["results"]["facets"] == [["14", "25"], ["14", "36"], ["25", "36"]]
    code, rep, _ = run(capsys, "multi", "--n", "8", "--k", "2", "jonsson")
    assert code == 0 and rep["results"]["determinant"] == rep["results"]["enumerated"]
    for what in ("flipgraph", "capoyleas", "cyclic-compare"):
        assert run(capsys, "multi", "--n", "7", "--k", "2", what)[0] == 0


def test_exit_codes_for_bad_input_and_guards(capsys, tmp_path):
    assert run(capsys, "multi", "--n", "4", "--k", "2", "fvector")[0] == 2
    assert run(capsys, "multi", "--n", "8", "--k", "2", "cyclic-compare")[0] == 2
    code, _, err = run(capsys, "multi", "--n", "14", "--k", "2", "fvector")
    assert code == 3 and "instance too large" in err
    assert run(capsys, "secondary", "--ngon", "12")[0] == 3
    assert run(capsys, "cluster", "--n", "9")[0] == 3
    assert run(capsys, "secondary", "--ngon", "6", "--check", "bogus")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "secondary", "--config", str(bad))
    assert code == 2 and "line 1" in err
    assert run(capsys, "verify", str(tmp_path / "missing.json"))[0] == 2


def test_config_file(capsys, tmp_path):
    path = tmp_path / "q.json"
    path.write_text(json.dumps({"points": [["0", "0"], ["2", "0"], ["2", "1"], ["1", "2"], ["0", "1"]]}))
    code, rep, _ = run(capsys, "secondary", "--config", str(path))
    assert code == 0 and rep["results"]["polytope"]["vertices"] == 5
    path.write_text(json.dumps({"points": [["0", "0"], ["1", "1"], ["2", "2"]]}))
    assert run(capsys, "secondary", "--config", str(path))[0] == 2


def test_reports_are_byte_identical(capsys):
    argv = ["secondary", "--ngon", "7", "--random-seed", "3", "--no-timing"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first
    assert "timing_ms" not in first


def test_polytope_file_round_trip_and_verify(capsys, tmp_path):
    out = tmp_path / "p.json"
    code, _, _ = run(capsys, "minkowski", "--n", "3", "--out", str(out))
    assert code == 0
    p = io.read_polytope(out)
    assert p.n_vertices == 14 and io.polytope_to_dict(p) == json.loads(out.read_text())
    code, rep, _ = run(capsys, "verify", str(out), "--check", "parallel=3")
    assert code == 0 and rep["inputs"]["n"] == 3
    assert run(capsys, "verify", str(out), "--n", "2")[0] == 1


def test_verify_cube_fails(capsys, tmp_path):
    path = tmp_path / "cube.json"
    io.write_polytope(convex_hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]), path)
    code, rep, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert rep["results"]["associahedron"]["failure_reason"] == "facet count 6 ≠ 9"


def test_malformed_polytope_file(capsys, tmp_path):
    path = tmp_path / "p.json"
    io.write_polytope(convex_hull([(0, 0), (1, 0), (0, 1)]), path)
    data = json.loads(path.read_text())
    data["facets"][0]["vertices"] = [0, 7]
    path.write_text(json.dumps(data))
    code, _, err = run(capsys, "verify", str(path))
    assert code == 2 and "out of range" in err
    data["format"] = "other"
    path.write_text(json.dumps(data))
    assert run(capsys, "verify", str(path))[0] == 2


def test_no_floats_in_reports(capsys):
    _, rep, _ = run(capsys, "secondary", "--parabola", "m=5", "a=1/2", "b=-1/3", "--check", "sphere")

    def walk(x):
        assert not isinstance(x, float)
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)

    walk(rep)


def test_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("ASSOC_THREADS", "2")
    code, rep, _ = run(capsys, "multi", "--n", "8", "--k", "2", "fvector", "--no-timing")
    monkeypatch.delenv("ASSOC_THREADS")
    code1, rep1, _ = run(capsys, "multi", "--n", "8", "--k", "2", "fvector", "--no-timing", "--threads", "1")
    assert code == code1 == 0 and rep == rep1


@pytest.mark.parametrize("argv", [["secondary", "--parabola", "m=5", "map=1,2,3"], ["minkowski", "--n", "2", "--alpha", "1,9=1"]])
def test_bad_parameters_exit_two(capsys, argv):
    assert run(capsys, *argv)[0] == 2
