"""Extremal witnesses: plane graphs with ``t_formula(k, n)`` edges in which every
vertex bounds a face of size at least ``k``.

Layout (purely combinatorial, no coordinates):

1. ``j - 1`` cycles of length ``k`` followed by one long cycle of length
   ``k + beta``, vertex ids consecutive per cycle.  Cycle ``v_0 .. v_{L-1}``
   has ``rotation[v_i] = [v_{i-1}, v_{i+1}]``; the forward walk is its
   interior face, the backward walk its exterior.
2. Consecutive cycles are glued by a junction: east pair ``a = v_2, b = v_3``
   of the left cycle, west pair ``c = w_1, d = w_0`` of the right cycle, edges
   ``a-c, b-c, b-d``.  This adds the triangles ``(a, b, c)`` and ``(b, c, d)``
   and keeps the common exterior a simple cycle through all vertices.
3. The long cycle gets chords ``(0, k-1)`` when ``beta = k-2`` and
   ``(0, k-1), (k-1, 2k-2)`` when ``beta = k-1`` (local indices).
4. The exterior is fan-triangulated from the apex ``v_2`` of the long cycle,
   which is never a junction or chord endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantViolation, InvalidParams
from .formula import ExtremalParams, params, t_formula
from .graph import PlaneGraph, euler_check, insert_after


@dataclass(frozen=True)
class ConstructionPlan:
    params: ExtremalParams
    cycles: tuple[int, ...]
    starts: tuple[int, ...]
    # per junction: ((a, c), (b, c), (b, d))
    junctions: tuple[tuple[tuple[int, int], ...], ...]
    chords: tuple[tuple[int, int], ...]
    apex: int

    @property
    def edge_total(self) -> int:
        n = self.params.n
        return n + 3 * len(self.junctions) + (n - 3) + len(self.chords)


@dataclass(frozen=True)
class EdgeBudget:
    cycle_edges: int
    junction_edges: int
    fan_edges: int
    chord_edges: int
    total: int


def _chord_count(k: int, beta: int) -> int:
    if beta == k - 1:
        return 2
    if beta == k - 2:
        return 1
    return 0


def edge_budget(k: int, n: int) -> EdgeBudget:
    """Edge count of the witness split by origin."""
    if k < 4:
        raise InvalidParams(f"edge_budget needs k >= 4, got {k}")
    p = params(k, n)
    chords = _chord_count(k, p.beta)
    total = n + 3 * (p.j - 1) + (n - 3) + chords
    return EdgeBudget(n, 3 * (p.j - 1), n - 3, chords, total)


def make_plan(k: int, n: int) -> ConstructionPlan:
    if k < 4:
        raise InvalidParams(f"the cycle construction needs k >= 4, got {k}")
    p = params(k, n)
    lengths = (k,) * (p.j - 1) + (k + p.beta,)
    starts = tuple(sum(lengths[:t]) for t in range(len(lengths)))
    junctions = []
    for t in range(len(lengths) - 1):
        a, b = starts[t] + 2, starts[t] + 3
        c, d = starts[t + 1] + 1, starts[t + 1]
        junctions.append(((a, c), (b, c), (b, d)))
    s = starts[-1]
    local = {0: (), 1: ((0, k - 1),), 2: ((0, k - 1), (k - 1, 2 * k - 2))}[_chord_count(k, p.beta)]
    chords = tuple((s + x, s + y) for x, y in local)
    return ConstructionPlan(p, lengths, starts, tuple(junctions), chords, s + 2)


def _face_walk(rot: list[list[int]], dart: tuple[int, int]) -> list[int]:
    walk = []
    u, v = dart
    while True:
        walk.append(u)
        r = rot[v]
        u, v = v, r[(r.index(u) + 1) % len(r)]
        if (u, v) == dart:
            return walk


def _add_in_face(rot: list[list[int]], dart: tuple[int, int], u: int, v: int) -> None:
    """Insert edge ``u-v`` inside the face containing ``dart``."""
    walk = _face_walk(rot, dart)
    if walk.count(u) != 1 or walk.count(v) != 1:
        raise InternalInvariantViolation(f"chord {u}-{v} endpoints not simple on face {walk}")
    pu = walk[walk.index(u) - 1]
    pv = walk[walk.index(v) - 1]
    insert_after(rot, u, pu, v)
    insert_after(rot, v, pv, u)


def fan_triangulate(rot: list[list[int]], apex: int, into_apex: int) -> None:
    """Triangulate the face entered by the dart ``(into_apex, apex)`` from ``apex``."""
    walk = _face_walk(rot, (into_apex, apex))
    walk = walk[1:] + walk[:1]  # apex, p_1, ..., p_{L-1}
    if len(set(walk)) != len(walk):
        raise InternalInvariantViolation(f"fan face is not a simple cycle: {walk}")
    last = walk[-1]
    for i in range(2, len(walk) - 1):
        insert_after(rot, apex, last, walk[i])
        insert_after(rot, walk[i], walk[i - 1], apex)


def _cycle_rotations(rot: list[list[int]], start: int, length: int) -> None:
    for i in range(length):
        rot[start + i] = [start + (i - 1) % length, start + (i + 1) % length]


def realize(plan: ConstructionPlan, fan: bool = True) -> PlaneGraph:
    """Assemble the rotation system; ``fan=False`` stops before step 4."""
    n = plan.params.n
    rot: list[list[int]] = [[] for _ in range(n)]
    labels = {}
    for t, (s, length) in enumerate(zip(plan.starts, plan.cycles)):
        _cycle_rotations(rot, s, length)
        for i in range(length):
            labels[s + i] = f"cycle:{t}"
    s = plan.starts[-1]
    for x, y in plan.chords:
        # the face left over by earlier chords is entered at y - 1 -> y
        _add_in_face(rot, (y - 1, y), x, y)
    for t, ((a, c), (b, _), (_, d)) in enumerate(plan.junctions):
        st, length = plan.starts[t], plan.cycles[t]
        after_b = st + (b - st + 1) % length
        insert_after(rot, a, b, c)
        insert_after(rot, c, c + 1, a)
        insert_after(rot, b, after_b, c)
        insert_after(rot, c, a, b)
        insert_after(rot, b, after_b, d)
        insert_after(rot, d, c, b)
        labels[a] = labels[b] = f"junction:{t}"
        labels[c] = labels[d] = f"junction:{t + 1}"
    w = plan.apex
    labels[w] = f"apex:{len(plan.cycles) - 1}"
    if fan:
        fan_triangulate(rot, w, w + 1)
    g = PlaneGraph(n, tuple(tuple(r) for r in rot), labels)
    if not euler_check(g):
        raise InternalInvariantViolation(f"construction for k={plan.params.k}, n={n} is not spherical")
    if fan and g.edge_count != plan.edge_total:
        raise InternalInvariantViolation(f"expected {plan.edge_total} edges, built {g.edge_count}")
    return g


def _double_fan(n: int) -> PlaneGraph:
    rot: list[list[int]] = [[] for _ in range(n)]
    _cycle_rotations(rot, 0, n)
    fan_triangulate(rot, 0, n - 1)
    fan_triangulate(rot, 1, 2)
    return PlaneGraph(n, tuple(tuple(r) for r in rot), {v: "cycle:0" for v in range(n)})


def construct(k: int, n: int) -> PlaneGraph:
    """Extremal witness for ``(k, n)``; ``k = 3`` gives a maximal planar graph."""
    if k == 3:
        params(k, n)
        return _double_fan(n)
    g = realize(make_plan(k, n))
    if g.edge_count != t_formula(k, n):
        raise InternalInvariantViolation(f"witness has {g.edge_count} edges, formula says {t_formula(k, n)}")
    return g
