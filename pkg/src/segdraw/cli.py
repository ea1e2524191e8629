"""Command line: generate families, draw, verify and export drawings.

    segdraw gen pr 2 --out pr2          writes pr2.graph.json, pr2.drawing.json
    segdraw draw fourreg g.json --out d.json
    segdraw verify g.json d.json --class outerpath
    segdraw svg g.json d.json --out picture.svg
"""

from __future__ import annotations

import argparse
import colorsys
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import cactus_drawer, generators
from .convex_drawer import draw_4regular
from .errors import SegdrawError
from .geometry import Point, format_rational
from .metrics_bounds import (
    check_against_bounds,
    check_outerpath_ports,
    decompose_segments,
    verify_drawing,
)
from .plane_graph import PlaneGraph, build

FAMILIES = {
    "cn2": generators.gen_Cn2,
    "pr": generators.gen_Pr,
    "gk": generators.gen_Gk,
    "tk": generators.gen_Tk,
    "bn": generators.gen_Bn,
    "rn": generators.gen_outerpath_Rn,
}


# files ------------------------------------------------------------------------


def graph_to_json(graph: PlaneGraph, graph_class: Optional[str] = None, stacking_order=None) -> dict:
    n = graph.n
    if sorted(graph.rotation) != list(range(n)):
        raise ValueError("graph files need vertices 0..n-1")
    doc = {
        "n": n,
        "rotations": [list(graph.rotation[v]) for v in range(n)],
        "outer_face": [[a, b] for a, b in zip(graph.outer, graph.outer[1:] + graph.outer[:1])],
    }
    if graph_class:
        doc["class"] = graph_class
    if stacking_order is not None:
        doc["stacking_order"] = list(stacking_order)
    return doc


def graph_from_json(doc: dict) -> PlaneGraph:
    return build(doc["n"], doc["rotations"], doc.get("outer_face") or None)


def drawing_to_json(coords: dict, certificate=None) -> dict:
    out = {}
    for v in sorted(coords):
        p = coords[v]
        if isinstance(p, Point):
            out[str(v)] = [format_rational(p.x), format_rational(p.y)]
        else:
            out[str(v)] = [repr(float(p[0])), repr(float(p[1]))]
    doc: dict = {"coords": out}
    if certificate is not None:
        doc["certificate"] = [[[a, b] for a, b in seg] for seg in certificate]
    return doc


def _is_decimal(s: str) -> bool:
    return any(c in s for c in ".eEn")


def drawing_from_json(doc: dict) -> tuple[dict, bool, Optional[list]]:
    """Coordinates, whether they are exact, and the certificate if present."""
    raw = {int(k): v for k, v in doc["coords"].items()}
    exact = not any(_is_decimal(str(c)) for xy in raw.values() for c in xy)
    if exact:
        coords = {v: Point(Fraction(x), Fraction(y)) for v, (x, y) in raw.items()}
    else:
        coords = {v: (float(x), float(y)) for v, (x, y) in raw.items()}
    cert = doc.get("certificate")
    if cert is not None:
        cert = [[(a, b) for a, b in seg] for seg in cert]
    return coords, exact, cert


def _write(path: Path, doc: dict) -> None:
    path.write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")


def _read(path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))


# commands ---------------------------------------------------------------------


def cmd_gen(family: str, parameter: int, out: Optional[str] = None) -> list:
    inst = FAMILIES[family](parameter)
    base = out or f"{family}{parameter}"
    written = []
    gpath = Path(f"{base}.graph.json")
    _write(gpath, graph_to_json(inst.graph, inst.graph_class, inst.stacking_order))
    written.append(gpath)
    if inst.drawing is not None:
        dpath = Path(f"{base}.drawing.json")
        _write(dpath, drawing_to_json(inst.drawing))
        written.append(dpath)
    for name, extra in inst.extra_drawings.items():
        if extra.drawing is inst.drawing:
            continue
        gx, dx = Path(f"{base}_{name}.graph.json"), Path(f"{base}_{name}.drawing.json")
        _write(gx, graph_to_json(extra.graph, inst.graph_class))
        _write(dx, drawing_to_json(extra.drawing))
        written += [gx, dx]
    return written


def cmd_draw(algorithm: str, graph_path, out: Optional[str] = None) -> str:
    doc = _read(graph_path)
    if algorithm == "fourreg":
        graph = graph_from_json(doc)
        coords = draw_4regular(graph)
        seg = decompose_segments(graph, coords).seg
        drawing = drawing_to_json(coords)
        summary = f"segments={seg} bound={graph.n + 3}"
    elif algorithm == "cactus":
        rot = {v: list(ns) for v, ns in enumerate(doc["rotations"])}
        result = cactus_drawer.draw_cactus(rot)
        drawing = drawing_to_json(result.coords, result.certificate)
        summary = f"segments={result.segment_count} bound={cactus_drawer.seg_number_cactus(rot)}"
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    _write(Path(out or Path(graph_path).with_suffix(".drawing.json")), drawing)
    return summary


def cmd_verify(graph_path, drawing_path, graph_class: Optional[str] = None) -> tuple[bool, list]:
    """Return (all checks pass, report lines)."""
    gdoc = _read(graph_path)
    graph = graph_from_json(gdoc)
    coords, exact, cert = drawing_from_json(_read(drawing_path))
    graph_class = graph_class or gdoc.get("class")
    lines = []
    if set(coords) != set(graph.rotation):
        return False, ["vertex set of drawing does not match the graph"]
    if not exact:
        edges = graph.edges()
        planar = cactus_drawer.float_planar(edges, coords)
        rot_ok = cactus_drawer.respects_rotation(graph.rotation, coords)
        straight = cert is not None and cactus_drawer.certificate_straight(cert, coords)
        covered = cert is not None and sorted(tuple(sorted(e)) for s in cert for e in s) == sorted(tuple(sorted(e)) for e in edges)
        lines.append(f"planar={planar} embedding_preserved={rot_ok} certificate_straight={straight and covered}")
        if cert is not None:
            lines.append(f"seg={len(cert)} openseg={2 * len(cert)}")
        ok = planar and rot_ok and straight and covered
        if graph_class == "cactus":
            bound = cactus_drawer.seg_number_cactus(graph.rotation)
            tight = cert is not None and len(cert) == bound
            lines.append(f"cactus bound={bound} {'tight' if tight else 'not tight'}")
        return ok, lines
    report = verify_drawing(graph, coords)
    lines.append(
        f"injective={report.injective} planar={report.planar} "
        f"embedding_preserved={report.embedding_preserved} faces_convex={report.faces_convex}"
    )
    lines.extend(report.problems)
    if not report.injective:
        return False, lines
    dec = decompose_segments(graph, coords)
    lines.append(f"seg={dec.seg} openseg={dec.openseg}")
    ok = report.ok
    bounds = check_against_bounds(graph, coords, graph_class)
    for e in bounds.entries:
        rel = ">=" if e.kind == "lower" else "<="
        status = "pass" if e.satisfied else "FAIL"
        tight = " tight" if e.satisfied and e.formula == e.drawing else ""
        lines.append(f"{e.name}: seg={e.drawing} {rel} {e.formula} {status}{tight}")
    ok = ok and bounds.ok
    if graph_class == "outerpath" and gdoc.get("stacking_order"):
        ports = check_outerpath_ports(graph, gdoc["stacking_order"], coords)
        bad = [c for c in ports.CLAUSES if not ports.passed(c)]
        lines.append("outerpath ports: " + ("pass" if not bad else "FAIL " + ", ".join(bad)))
        ok = ok and ports.ok
    return ok, lines


def cmd_svg(graph_path, drawing_path, out) -> int:
    """Write an SVG with one polyline per segment; returns the polyline count."""
    graph = graph_from_json(_read(graph_path))
    coords, exact, cert = drawing_from_json(_read(drawing_path))
    if cert is None:
        if not exact:
            raise ValueError("a float drawing needs its segment certificate")
        segments = [list(s) for s in decompose_segments(graph, coords).segments]
    else:
        segments = [[seg[0][0]] + [b for _, b in seg] for seg in cert]
    pts = {v: (float(p.x), float(p.y)) if isinstance(p, Point) else p for v, p in coords.items()}
    xs = [p[0] for p in pts.values()]
    ys = [-p[1] for p in pts.values()]
    w = max(xs) - min(xs) or 1.0
    h = max(ys) - min(ys) or 1.0
    mx, my = 0.05 * w, 0.05 * h
    view = (min(xs) - mx, min(ys) - my, w + 2 * mx, h + 2 * my)
    unit = max(view[2], view[3])
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="%r %r %r %r">' % view,
    ]
    for i, seg in enumerate(segments):
        r, g, b = colorsys.hsv_to_rgb((i * 0.618034) % 1.0, 0.75, 0.8)
        color = "#%02x%02x%02x" % (int(r * 255), int(g * 255), int(b * 255))
        path = " ".join(f"{pts[v][0]!r},{-pts[v][1]!r}" for v in seg)
        parts.append(f'<polyline points="{path}" fill="none" stroke="{color}" stroke-width="{unit / 200!r}"/>')
    for v, (x, y) in sorted(pts.items()):
        parts.append(f'<circle cx="{x!r}" cy="{-y!r}" r="{unit / 120!r}"/>')
    parts.append("</svg>")
    Path(out).write_text("\n".join(parts) + "\n", encoding="utf-8")
    return len(segments)


# entry point ------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="segdraw", description="Drawings with few segments.")
    sub = p.add_subparsers(dest="command", required=True)
    g = sub.add_parser("gen", help="generate a graph family instance")
    g.add_argument("family", choices=sorted(FAMILIES))
    g.add_argument("parameter", type=int)
    g.add_argument("--out", help="file name prefix")
    d = sub.add_parser("draw", help="draw a graph file")
    d.add_argument("algorithm", choices=["fourreg", "cactus"])
    d.add_argument("graph")
    d.add_argument("--out")
    v = sub.add_parser("verify", help="check a drawing against its graph")
    v.add_argument("graph")
    v.add_argument("drawing")
    v.add_argument("--class", dest="graph_class")
    s = sub.add_parser("svg", help="render a drawing, one polyline per segment")
    s.add_argument("graph")
    s.add_argument("drawing")
    s.add_argument("--out", required=True)
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "gen":
            for path in cmd_gen(args.family, args.parameter, args.out):
                print(path)
        elif args.command == "draw":
            print(cmd_draw(args.algorithm, args.graph, args.out))
        elif args.command == "verify":
            ok, lines = cmd_verify(args.graph, args.drawing, args.graph_class)
            print("\n".join(lines))
            print("PASS" if ok else "FAIL")
            return 0 if ok else 1
        elif args.command == "svg":
            cmd_svg(args.graph, args.drawing, args.out)
            print(args.out)
    except SegdrawError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
