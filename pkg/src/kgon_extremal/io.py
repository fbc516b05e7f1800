"""JSON formats for graphs, packings, verification reports and search results.

Output is canonical: fixed key order, one rotation row per line, floats with
17 significant digits, so re-serialising a parsed document is byte-identical.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from .circlepack import Circle, Packing
from .errors import MalformedInput, MalformedRotation
from .graph import PlaneGraph
from .search import SearchResult


def _num(x: float) -> str:
    if not math.isfinite(x):
        raise MalformedInput(f"cannot serialise non-finite value {x!r}")
    return format(x, ".17g")


def graph_to_dict(g: PlaneGraph) -> dict:
    d = {"n": g.n, "rotation": [list(r) for r in g.rotation]}
    if g.labels:
        d["labels"] = {str(v): g.labels[v] for v in sorted(g.labels)}
    return d


def dumps_graph(g: PlaneGraph) -> str:
    rows = ",\n".join("    " + json.dumps(list(r)) for r in g.rotation)
    out = ['{\n  "n": %d,\n  "rotation": [\n%s\n  ]' % (g.n, rows)]
    if g.labels:
        items = ",\n".join(f"    {json.dumps(str(v))}: {json.dumps(g.labels[v])}" for v in sorted(g.labels))
        out.append(',\n  "labels": {\n%s\n  }' % items)
    out.append("\n}\n")
    return "".join(out)


def graph_from_dict(d) -> PlaneGraph:
    if not isinstance(d, dict):
        raise MalformedInput("graph document must be a JSON object")
    unknown = set(d) - {"n", "rotation", "labels"}
    if unknown:
        raise MalformedInput(f"unknown graph fields: {sorted(unknown)}")
    n, rot = d.get("n"), d.get("rotation")
    if not isinstance(n, int) or isinstance(n, bool):
        raise MalformedInput('"n" must be an integer')
    if not isinstance(rot, list) or not all(isinstance(r, list) for r in rot):
        raise MalformedInput('"rotation" must be a list of lists')
    if not all(isinstance(x, int) and not isinstance(x, bool) for r in rot for x in r):
        raise MalformedInput('"rotation" entries must be integers')
    labels = d.get("labels", {})
    if not isinstance(labels, dict) or not all(isinstance(s, str) for s in labels.values()):
        raise MalformedInput('"labels" must map vertex ids to strings')
    try:
        lab = {int(v): s for v, s in labels.items()}
    except ValueError as e:
        raise MalformedInput(f"label key is not a vertex id: {e}") from None
    try:
        return PlaneGraph(n, tuple(tuple(r) for r in rot), lab)
    except MalformedRotation as e:
        raise MalformedInput(str(e)) from e


def loads_graph(text: str) -> PlaneGraph:
    return graph_from_dict(_parse(text))


def dumps_packing(p: Packing) -> str:
    rows = ",\n".join(
        '    {"v": %d, "x": %s, "y": %s, "r": %s}' % (c.v, _num(c.x), _num(c.y), _num(c.r))
        for c in p.circles)
    return (
        '{\n  "circles": [\n%s\n  ],\n'
        '  "residuals": {"tangency": %s, "overlap": %s},\n'
        '  "iterations": %d,\n  "converged": %s\n}\n'
        % (rows, _num(p.tangency), _num(p.overlap), p.iterations, "true" if p.converged else "false"))


def loads_packing(text: str) -> Packing:
    d = _parse(text)
    try:
        circles = tuple(Circle(int(c["v"]), float(c["x"]), float(c["y"]), float(c["r"])) for c in d["circles"])
        res = d["residuals"]
        if not isinstance(d["converged"], bool):
            raise ValueError('"converged" must be a boolean')
        return Packing(circles, float(res["tangency"]), float(res["overlap"]),
                       int(d["iterations"]), bool(d["converged"]))
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedInput(f"bad packing document: {e!r}") from None


def dumps_report(report) -> str:
    return json.dumps(report.to_json(), indent=2) + "\n"


def search_result_to_dict(r: SearchResult) -> dict:
    return {
        "n": r.n,
        "k": r.k,
        "best_m": r.best_m,
        "graphs_examined": r.graphs_examined,
        "rotations_examined": r.rotations_examined,
        "witness": graph_to_dict(r.witness),
    }


def _parse(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"invalid JSON: {e}") from None


def read_graph(path) -> PlaneGraph:
    return loads_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(path, g: PlaneGraph) -> None:
    Path(path).write_text(dumps_graph(g), encoding="utf-8")


def read_packing(path) -> Packing:
    return loads_packing(Path(path).read_text(encoding="utf-8"))


def write_packing(path, p: Packing) -> None:
    Path(path).write_text(dumps_packing(p), encoding="utf-8")
