"""Deterministic SVG drawings of packings and plane graphs."""

from __future__ import annotations

import math

import numpy as np

from .circlepack import Circle, Packing, augment, pack, tangent_pairs
from .errors import KgonError
from .graph import PlaneGraph


def tutte_layout(g: PlaneGraph) -> list[tuple[float, float]]:
    """Barycentric layout with one face pinned to a regular polygon.

    The pinned face is the first face through the vertex labelled ``apex``
    when there is one, otherwise the first largest face.
    """
    faces = g.faces
    apex = [v for v, s in g.labels.items() if s.startswith("apex")]
    outer = None
    if apex:
        outer = next((f for f in faces if apex[0] in f.boundary and f.is_simple), None)
    if outer is None:
        outer = max(faces, key=lambda f: (f.is_simple, f.size))
    ring = list(dict.fromkeys(outer.boundary))
    pos = np.zeros((g.n, 2))
    fixed = set(ring)
    for i, v in enumerate(ring):
        # the unbounded face is traced clockwise
        a = -2.0 * math.pi * i / len(ring)
        pos[v] = (math.cos(a), math.sin(a))
    free = [v for v in range(g.n) if v not in fixed]
    if free:
        idx = {v: i for i, v in enumerate(free)}
        lap = np.zeros((len(free), len(free)))
        rhs = np.zeros((len(free), 2))
        for v in free:
            i = idx[v]
            lap[i, i] = g.degree(v)
            for w in g.rotation[v]:
                if w in idx:
                    lap[i, idx[w]] -= 1.0
                else:
                    rhs[i] += pos[w]
        pos[free] = np.linalg.solve(lap, rhs)
    return [(float(x), float(y)) for x, y in pos]


def _f(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _document(circles: list[Circle], edges: list[tuple[int, int]], dot: bool = False) -> str:
    by_v = {c.v: c for c in circles}
    xs = [c.x - c.r for c in circles] + [c.x + c.r for c in circles]
    ys = [-c.y - c.r for c in circles] + [-c.y + c.r for c in circles]
    pad = 0.02 * max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad
    stroke = _f(0.002 * max(w, h))
    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="%s %s %s %s">' % (_f(x0), _f(y0), _f(w), _f(h)),
        f'<g fill="none" stroke="#1f4e79" stroke-width="{stroke}">',
    ]
    for c in sorted(circles, key=lambda c: c.v):
        fill = ' fill="#1f4e79"' if dot else ""
        out.append(f'<circle id="v{c.v}" cx="{_f(c.x)}" cy="{_f(-c.y)}" r="{_f(c.r)}"{fill}/>')
    out.append("</g>")
    out.append(f'<g stroke="#b03a2e" stroke-width="{stroke}">')
    for u, v in sorted(edges):
        a, b = by_v[u], by_v[v]
        out.append(f'<line x1="{_f(a.x)}" y1="{_f(-a.y)}" x2="{_f(b.x)}" y2="{_f(-b.y)}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(obj: PlaneGraph | Packing, graph: PlaneGraph | None = None) -> str:
    """One ``<circle>`` per vertex and one ``<line>`` per edge.

    A :class:`Packing` is drawn with the edges of ``graph`` (or, without a
    graph, its tangent pairs).  A bare :class:`PlaneGraph` is packed first;
    if packing fails the Tutte layout is drawn with small dots.
    """
    if isinstance(obj, Packing):
        edges = graph.edges() if graph is not None else tangent_pairs(obj.circles)
        return _document(list(obj.circles), edges)
    g = obj
    try:
        p = pack(augment(g))
        return _document(list(p.circles), g.edges())
    except KgonError:
        pos = tutte_layout(g)
        r = 0.02
        return _document([Circle(v, x, y, r) for v, (x, y) in enumerate(pos)], g.edges(), dot=True)
