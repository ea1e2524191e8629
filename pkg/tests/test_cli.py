import json
import re
from fractions import Fraction

import pytest

from segdraw.cli import drawing_from_json, drawing_to_json, graph_from_json, graph_to_json, main
from segdraw.generators import gen_Cn2, gen_Pr
from segdraw.geometry import Point


@pytest.fixture(autouse=True)
def in_tmp(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def write(name, doc):
    with open(name, "w") as fh:
        json.dump(doc, fh)
    return name


def polylines(path):
    return len(re.findall("<polyline", open(path).read()))


TRIANGLE = {"n": 3, "rotations": [[1, 2], [2, 0], [0, 1]]}
STAR5 = {"n": 5, "rotations": [[1, 2, 3, 4], [0], [0], [0], [0]]}


def test_graph_file_round_trip():
    inst = gen_Pr(1)
    doc = graph_to_json(inst.graph, "outerpath", inst.stacking_order)
    G = graph_from_json(json.loads(json.dumps(doc)))
    assert G.rotation == inst.graph.rotation
    assert set(G.outer) == set(inst.graph.outer)
    assert graph_to_json(G, "outerpath", inst.stacking_order) == doc


def test_drawing_file_round_trip():
    exact = {0: Point(Fraction(1, 3), Fraction(-2)), 1: Point(Fraction(5, 7), Fraction(0))}
    coords, is_exact, cert = drawing_from_json(json.loads(json.dumps(drawing_to_json(exact))))
    assert is_exact and coords == exact and cert is None
    floats = {0: (0.1, 2.5e-17), 1: (-3.0, 1e20)}
    coords, is_exact, cert = drawing_from_json(drawing_to_json(floats, [[(0, 1)]]))
    assert not is_exact and coords == floats and cert == [[(0, 1)]]


def test_gen_pr2_and_verify(capsys):
    assert main(["gen", "pr", "2", "--out", "pr2"]) == 0
    assert main(["verify", "pr2.graph.json", "pr2.drawing.json", "--class", "outerpath"]) == 0
    out = capsys.readouterr().out
    assert "seg=7" in out and "tight" in out and "outerpath ports: pass" in out
    assert json.load(open("pr2.graph.json"))["n"] == 10


def test_gen_cn2_writes_only_a_graph():
    assert main(["gen", "cn2", "6", "--out", "oct"]) == 0
    doc = json.load(open("oct.graph.json"))
    assert doc["n"] == 6 and len(doc["outer_face"]) == 3


def test_gen_bad_parameter(capsys):
    assert main(["gen", "bn", "5"]) == 2
    assert "BadParameter" in capsys.readouterr().err


def test_gen_tk3_verifies(capsys):
    assert main(["gen", "tk", "3", "--out", "tk3"]) == 0
    assert main(["verify", "tk3.graph.json", "tk3.drawing.json"]) == 0
    out = capsys.readouterr().out
    assert "seg=27" in out and "planar3tree: seg=27 >= 24 pass" in out


def test_draw_fourreg_octahedron(capsys):
    main(["gen", "cn2", "6", "--out", "oct"])
    capsys.readouterr()
    assert main(["draw", "fourreg", "oct.graph.json", "--out", "oct.drawing.json"]) == 0
    assert "segments=9 bound=9" in capsys.readouterr().out
    assert main(["verify", "oct.graph.json", "oct.drawing.json", "--class", "cn2"]) == 0


def test_draw_fourreg_rejects_k4(capsys):
    k4 = {"n": 4, "rotations": [[1, 3, 2], [0, 2, 3], [0, 3, 1], [0, 1, 2]], "outer_face": [[0, 1], [1, 2], [2, 0]]}
    write("k4.json", k4)
    assert main(["draw", "fourreg", "k4.json"]) == 2
    err = capsys.readouterr().err
    assert "PreconditionViolated" in err and "4-regular" in err


def test_draw_cactus_star(capsys):
    write("star5.json", STAR5)
    assert main(["draw", "cactus", "star5.json", "--out", "star.drawing.json"]) == 0
    assert "segments=2" in capsys.readouterr().out
    assert main(["verify", "star5.json", "star.drawing.json", "--class", "cactus"]) == 0
    assert "bound=2 tight" in capsys.readouterr().out


def test_corrupted_drawing_fails(capsys):
    main(["gen", "pr", "0", "--out", "pr0"])
    doc = json.load(open("pr0.drawing.json"))
    doc["coords"]["1"] = doc["coords"]["0"]
    write("bad.json", doc)
    assert main(["verify", "pr0.graph.json", "bad.json"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_parse_errors_exit_nonzero():
    with open("broken.json", "w") as fh:
        fh.write("{not json")
    assert main(["verify", "broken.json", "broken.json"]) == 2
    assert main(["verify", "missing.json", "missing.json"]) == 2


def test_svg_counts():
    write("tri.json", TRIANGLE)
    write("tri.drawing.json", {"coords": {"0": ["0/1", "0/1"], "1": ["1/1", "0/1"], "2": ["0/1", "1/1"]}})
    assert main(["svg", "tri.json", "tri.drawing.json", "--out", "tri.svg"]) == 0
    assert polylines("tri.svg") == 3
    main(["gen", "pr", "2", "--out", "pr2"])
    main(["svg", "pr2.graph.json", "pr2.drawing.json", "--out", "pr2.svg"])
    assert polylines("pr2.svg") == 7
    cactus = {"n": 6, "rotations": [[1, 2, 3], [2, 0], [0, 1], [0, 4, 5], [3], [3]]}
    write("cactus.json", cactus)
    main(["draw", "cactus", "cactus.json", "--out", "cactus.drawing.json"])
    cert = json.load(open("cactus.drawing.json"))["certificate"]
    main(["svg", "cactus.json", "cactus.drawing.json", "--out", "cactus.svg"])
    assert polylines("cactus.svg") == len(cert)


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "segdraw", "gen", "cn2", "7"], capture_output=True, text=True)
    assert res.returncode == 2 and "BadParameter" in res.stderr


def test_verify_exit_code_matches_flags(capsys):
    # an exact drawing of the octahedron from the drawer passes; moving one
    # vertex outside breaks planarity and the exit code follows
    main(["gen", "cn2", "6", "--out", "oct"])
    main(["draw", "fourreg", "oct.graph.json", "--out", "oct.drawing.json"])
    doc = json.load(open("oct.drawing.json"))
    G = gen_Cn2(6).graph
    inner = next(v for v in G.rotation if not G.is_outer_vertex(v))
    doc["coords"][str(inner)] = ["1000/1", "1000/1"]
    write("moved.json", doc)
    capsys.readouterr()
    assert main(["verify", "oct.graph.json", "moved.json"]) == 1
    out = capsys.readouterr().out
    assert out.rstrip().endswith("FAIL") and "True" in out and "False" in out
