"""Plane graphs stored as rotation systems.

Orientation convention
----------------------
``rotation[v]`` lists the neighbours of ``v`` in clockwise order.  The face
successor of the dart ``(u, v)`` is ``(v, w)`` where ``w`` is the entry that
follows ``u`` in ``rotation[v]`` (cyclically), i.e. the next neighbour
clockwise after the arriving edge.  With this rule every face lies to the left
of its darts, so in a straight-line drawing bounded faces are traced
counterclockwise and the unbounded face clockwise.  No face is singled out as
"outer": the embedding lives on the sphere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import MalformedRotation

Dart = tuple[int, int]


@dataclass(frozen=True)
class Face:
    """A traced face; ``boundary`` is the vertex sequence of the walk."""

    boundary: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.boundary)

    @property
    def darts(self) -> tuple[Dart, ...]:
        b = self.boundary
        return tuple((b[i], b[(i + 1) % len(b)]) for i in range(len(b)))

    @property
    def is_simple(self) -> bool:
        """True when no vertex repeats along the walk."""
        return len(set(self.boundary)) == len(self.boundary)


@dataclass(frozen=True)
class PlaneGraph:
    """A simple connected graph with a combinatorial embedding.

    Vertex ids are ``0 .. n-1``.  ``labels`` maps a vertex id to a free-form
    provenance string (for constructed graphs ``"<role>:<cycle index>"``).
    Construction validates loops, multi-edges, symmetry and connectivity;
    genus is *not* enforced, use :func:`euler_check`.
    """

    n: int
    rotation: tuple[tuple[int, ...], ...]
    labels: Mapping[int, str] = field(default_factory=dict)

    def __post_init__(self):
        rot = tuple(tuple(int(x) for x in r) for r in self.rotation)
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "labels", {int(v): str(s) for v, s in dict(self.labels).items()})
        _validate(self.n, rot, self.labels)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_embedding(cls, positions: Sequence[Sequence[float]], edges: Iterable[Dart],
                       labels: Mapping[int, str] | None = None) -> "PlaneGraph":
        """Build the rotation system of a straight-line drawing.

        Neighbours are sorted clockwise by angle; each list starts at its
        smallest neighbour.  The drawing is trusted to be crossing-free.
        """
        n = len(positions)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        rot = []
        for v in range(n):
            x0, y0 = positions[v]
            order = sorted(nbrs[v], key=lambda w: -math.atan2(positions[w][1] - y0, positions[w][0] - x0))
            if order:
                i = order.index(min(order))
                order = order[i:] + order[:i]
            rot.append(tuple(order))
        return cls(n, tuple(rot), labels or {})

    # -- basic queries -------------------------------------------------------

    @cached_property
    def _pos(self) -> tuple[dict[int, int], ...]:
        return tuple({w: i for i, w in enumerate(r)} for r in self.rotation)

    @property
    def edge_count(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    m = edge_count

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def edges(self) -> list[Dart]:
        """Undirected edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return sorted((u, v) for u, r in enumerate(self.rotation) for v in r if u < v)

    def darts(self) -> list[Dart]:
        return sorted((u, v) for u, r in enumerate(self.rotation) for v in r)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._pos[u]

    def successor(self, u: int, v: int) -> Dart:
        """Face successor of the dart ``(u, v)``."""
        r = self.rotation[v]
        return v, r[(self._pos[v][u] + 1) % len(r)]

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return tuple(_trace(self))

    def vertex_faces(self) -> list[list[Face]]:
        """For each vertex, the faces whose walk passes through it (with repetition)."""
        out: list[list[Face]] = [[] for _ in range(self.n)]
        for f in self.faces:
            for v in f.boundary:
                out[v].append(f)
        return out

    def without_edge(self, u: int, v: int) -> "PlaneGraph":
        """Delete one edge, keeping the induced embedding."""
        rot = [list(r) for r in self.rotation]
        rot[u].remove(v)
        rot[v].remove(u)
        return PlaneGraph(self.n, tuple(tuple(r) for r in rot), self.labels)


def _validate(n, rot, labels) -> None:
    if not isinstance(n, int) or n < 1:
        raise MalformedRotation(f"vertex count must be a positive integer, got {n!r}")
    if len(rot) != n:
        raise MalformedRotation(f"rotation has {len(rot)} entries for {n} vertices")
    pos = []
    for v, r in enumerate(rot):
        for w in r:
            if not 0 <= w < n:
                raise MalformedRotation(f"vertex {v} lists unknown neighbour {w}")
            if w == v:
                raise MalformedRotation(f"loop at vertex {v}")
        if len(set(r)) != len(r):
            raise MalformedRotation(f"repeated neighbour in rotation of vertex {v}")
        pos.append(set(r))
    for v, r in enumerate(rot):
        for w in r:
            if v not in pos[w]:
                raise MalformedRotation(f"edge {v}-{w} is not listed at {w}")
    if sum(len(r) for r in rot) == 0:
        raise MalformedRotation("graph has no edges")
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in rot[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise MalformedRotation(f"graph is disconnected ({len(seen)} of {n} vertices reachable from 0)")
    for v in labels:
        if not 0 <= v < n:
            raise MalformedRotation(f"label for unknown vertex {v}")


def _trace(g: PlaneGraph) -> list[Face]:
    used: set[Dart] = set()
    faces = []
    for d in g.darts():
        if d in used:
            continue
        walk = []
        cur = d
        while cur not in used:
            used.add(cur)
            walk.append(cur[0])
            cur = g.successor(*cur)
        if cur != d:
            raise MalformedRotation(f"face walk from {d} did not close")
        faces.append(Face(tuple(walk)))
    return faces


def trace_faces(g: PlaneGraph) -> list[Face]:
    """All faces of ``g``.

    Each trace starts at the lexicographically smallest unused dart, so the
    output is deterministic and every dart lies on exactly one face.
    """
    return list(g.faces)


def euler_check(g: PlaneGraph) -> bool:
    """True iff ``V - E + F == 2``, i.e. the rotation system is spherical."""
    return g.n - g.edge_count + len(g.faces) == 2


def insert_after(rot: list[list[int]], u: int, anchor: int, x: int) -> None:
    """Place ``x`` right after ``anchor`` in ``rot[u]``.

    The new edge then occupies the corner entered by the dart ``(anchor, u)``.
    """
    r = rot[u]
    r.insert(r.index(anchor) + 1, x)
