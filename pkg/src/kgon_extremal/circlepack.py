"""Coin-graph realisation of plane graphs by iterative circle packing.

The graph is first completed to a triangulation by putting a hub vertex in
every face of size four or more.  One triangle of the triangulation becomes
the outer face; its three radii are fixed to 1.  Interior radii are then
relaxed until every interior angle sum is ``2*pi``, using the uniform
neighbour update: a vertex of degree ``d`` whose petals currently subtend
``theta`` is given the radius it would need if its ``d`` neighbours all had
the common radius that reproduces ``theta``.  Centres are laid out triangle by
triangle from the outer face.  Hub circles are dropped from the output.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .errors import AdjacencyMismatch, DegenerateRadius, InvalidParams, NoConvergence, NotTwoConnected
from .graph import PlaneGraph, insert_after
from .verify import flower_centers

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Circle:
    v: int
    x: float
    y: float
    r: float


@dataclass(frozen=True)
class Packing:
    """Circles for the vertices of the original graph, ordered by vertex id."""

    circles: tuple[Circle, ...]
    tangency: float
    overlap: float
    iterations: int
    converged: bool
    # solver state, not serialised
    angle_residual: float = field(default=float("nan"), compare=False)
    all_radii: tuple[float, ...] = field(default=(), compare=False, repr=False)
    boundary: tuple[int, ...] = field(default=(), compare=False)

    def scaled(self, factor: float) -> tuple[Circle, ...]:
        return tuple(Circle(c.v, c.x * factor, c.y * factor, c.r * factor) for c in self.circles)


@dataclass(frozen=True)
class Augmentation:
    """``augmented`` has the original vertices ``0..base_n-1`` followed by
    one hub per face of size >= 4; ``hub_map`` maps face index (in
    ``base.faces`` order) to hub id."""

    base: PlaneGraph
    augmented: PlaneGraph
    hub_map: dict[int, int]
    k: int = 4

    @property
    def base_n(self) -> int:
        return self.base.n

    def kgon_hubs(self) -> list[int]:
        """Hubs sitting in faces of size >= k."""
        return [h for fi, h in self.hub_map.items() if self.base.faces[fi].size >= self.k]


def augment(g: PlaneGraph, k: int = 4) -> Augmentation:
    """Put a hub in every face of size >= 4 and join it to the face boundary.

    Hubs go into all faces of size four or more, not only those of size
    ``>= k``, so the result is always a triangulation.
    """
    faces = g.faces
    for f in faces:
        if not f.is_simple:
            raise NotTwoConnected(f"face {f.boundary} repeats a vertex")
    rot = [list(r) for r in g.rotation]
    hub_map = {}
    for fi, f in enumerate(faces):
        if f.size < 4:
            continue
        h = len(rot)
        b = f.boundary
        for i, v in enumerate(b):
            insert_after(rot, v, b[i - 1], h)
        rot.append(list(reversed(b)))
        hub_map[fi] = h
    labels = dict(g.labels)
    labels.update({h: f"hub:{faces[fi].size}" for fi, h in hub_map.items()})
    aug = PlaneGraph(len(rot), tuple(tuple(r) for r in rot), labels)
    return Augmentation(g, aug, hub_map, k)


def corner_angle(r: float, ra: float, rb: float) -> float:
    """Angle at the centre of radius ``r`` in the triangle of three mutually
    tangent circles (law of cosines in half-angle form, accurate near 0 and pi)."""
    return 2.0 * math.atan(math.sqrt(ra * rb / (r * (r + ra + rb))))


def _choose_boundary(t: PlaneGraph) -> tuple[int, ...]:
    """Face of minimal eccentricity (then minimal total distance) in the dual.

    Nested separating triangles shrink radii geometrically with depth, so the
    outer face is taken from the middle of the nesting.
    """
    faces = [f.boundary for f in t.faces]
    owner = {}
    for i, f in enumerate(faces):
        for j in range(3):
            owner[(f[j], f[(j + 1) % 3])] = i
    adj = [[owner[(f[(j + 1) % 3], f[j])] for j in range(3)] for f in faces]
    best = None
    for s in range(len(faces)):
        dist = [-1] * len(faces)
        dist[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    q.append(y)
        key = (max(dist), sum(dist))
        if best is None or key < best[0]:
            best = (key, s)
    return faces[best[1]]


def _petals(t: PlaneGraph) -> list[list[tuple[int, int]]]:
    out = []
    for v, r in enumerate(t.rotation):
        out.append([(r[i], r[(i + 1) % len(r)]) for i in range(len(r))])
    return out


def angle_sums(t: PlaneGraph, radii) -> list[float]:
    """Angle sum at every vertex of a triangulation from its radii alone."""
    petals = _petals(t)
    return [sum(corner_angle(radii[v], radii[a], radii[b]) for a, b in petals[v]) for v in range(t.n)]


def _layout(t: PlaneGraph, radii, boundary) -> list[tuple[float, float]]:
    a, b, c = boundary
    pos: list[tuple[float, float] | None] = [None] * t.n
    pos[a] = (0.0, 0.0)
    pos[b] = (radii[a] + radii[b], 0.0)
    # the outer face is traced clockwise in the plane: c lies right of a -> b
    th = corner_angle(radii[a], radii[b], radii[c])
    pos[c] = ((radii[a] + radii[c]) * math.cos(-th), (radii[a] + radii[c]) * math.sin(-th))
    outer = set(boundary)
    tri = [f.boundary for f in t.faces if set(f.boundary) != outer]
    by_vertex: list[list[int]] = [[] for _ in range(t.n)]
    for i, f in enumerate(tri):
        for v in f:
            by_vertex[v].append(i)
    queue = deque(sorted(set(by_vertex[a] + by_vertex[b] + by_vertex[c])))
    while queue:
        f = tri[queue.popleft()]
        missing = [i for i in range(3) if pos[f[i]] is None]
        if len(missing) != 1:
            continue
        i = missing[0]
        # faces are counterclockwise: the third vertex lies left of u -> v
        u, v, w = f[(i + 1) % 3], f[(i + 2) % 3], f[i]
        ux, uy = pos[u]
        vx, vy = pos[v]
        phi = math.atan2(vy - uy, vx - ux) + corner_angle(radii[u], radii[v], radii[w])
        d = radii[u] + radii[w]
        pos[w] = (ux + d * math.cos(phi), uy + d * math.sin(phi))
        queue.extend(by_vertex[w])
    if any(p is None for p in pos):
        raise InvalidParams("layout did not reach every vertex")
    return pos


def residuals(circles, g: PlaneGraph) -> tuple[float, float]:
    """Max relative tangency error over edges and max relative overlap over
    non-adjacent pairs."""
    by_v = {c.v: c for c in circles}
    tang = 0.0
    for u, v in g.edges():
        cu, cv = by_v[u], by_v[v]
        s = cu.r + cv.r
        tang = max(tang, abs(math.hypot(cu.x - cv.x, cu.y - cv.y) - s) / s)
    over = 0.0
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if g.has_edge(i, j):
                continue
            ci, cj = by_v[i], by_v[j]
            s = ci.r + cj.r
            over = max(over, 1.0 - math.hypot(ci.x - cj.x, ci.y - cj.y) / s)
    return tang, over


ANGLE_FLOOR = 1e-14


def pack(aug: Augmentation, tol: float = 1e-10, max_iter: int = 10**6,
         radius_floor: float = 1e-12, tangency_tol: float | None = 1e-7) -> Packing:
    """Pack ``aug.augmented`` and return circles for the original vertices.

    ``tol`` bounds ``|angle sum - 2*pi|`` at every interior vertex;
    ``max_iter`` counts sweeps over the interior vertices.  When the resulting
    edge tangency error still exceeds ``tangency_tol`` (large radius ratios
    amplify angle errors), sweeping continues with a tenfold smaller angle
    target, down to ``ANGLE_FLOOR``.
    """
    t = aug.augmented
    if t.n < 3:
        raise InvalidParams(f"need a triangulation on at least 3 vertices, got {t.n}")
    if any(f.size != 3 for f in t.faces):
        raise InvalidParams("augmented graph is not a triangulation")
    boundary = _choose_boundary(t)
    interior = [v for v in range(t.n) if v not in boundary]
    petals = _petals(t)
    radii = [1.0] * t.n
    sines = {v: math.sin(math.pi / len(petals[v])) for v in interior}

    def worst() -> float:
        if not interior:
            return 0.0
        return max(abs(sum(corner_angle(radii[v], radii[a], radii[b]) for a, b in petals[v]) - TWO_PI)
                   for v in interior)

    def sweep() -> None:
        for v in interior:
            rv = radii[v]
            theta = sum(corner_angle(rv, radii[a], radii[b]) for a, b in petals[v])
            beta = math.sin(theta / (2 * len(petals[v])))
            delta = sines[v]
            new = rv * beta / (1.0 - beta) * (1.0 - delta) / delta
            if new < radius_floor:
                raise DegenerateRadius(f"radius of vertex {v} fell to {new:.3e}")
            radii[v] = new

    def finish(it, err):
        pos = _layout(t, radii, boundary)
        circles = tuple(Circle(v, pos[v][0], pos[v][1], radii[v]) for v in range(aug.base_n))
        tang, over = residuals(circles, aug.base)
        return Packing(circles, tang, over, it, err <= tol, err, tuple(radii), tuple(boundary))

    it = 0
    err = worst()
    target = tol
    while True:
        stalled = 0
        while err > target and it < max_iter and stalled < 50:
            sweep()
            it += 1
            new_err = worst()
            # below the true tolerance, stop once rounding noise dominates
            stalled = stalled + 1 if (err <= tol and new_err >= err) else 0
            err = new_err
        p = finish(it, err)
        if err > tol:
            raise NoConvergence(f"angle residual {err:.3e} after {it} sweeps", best=p)
        if tangency_tol is None or p.tangency <= tangency_tol or target <= ANGLE_FLOOR \
                or it >= max_iter or stalled >= 50:
            return p
        target = max(target / 10.0, ANGLE_FLOOR)


@dataclass(frozen=True)
class CoinReport:
    tangency: float
    overlap: float
    radius_ratio: float
    flower_centers: list[int]
    adjacency_match: bool
    radii: tuple[float, ...]

    def to_json(self) -> dict:
        return {
            "tangency": self.tangency,
            "overlap": self.overlap,
            "radius_ratio": self.radius_ratio,
            "flower_centers": list(self.flower_centers),
            "adjacency_match": self.adjacency_match,
            "radii": list(self.radii),
        }


def tangent_pairs(circles, tol: float = 1e-6) -> list[tuple[int, int]]:
    """Pairs whose centre distance matches the radius sum within ``tol`` (relative)."""
    cs = sorted(circles, key=lambda c: c.v)
    out = []
    for i, a in enumerate(cs):
        for b in cs[i + 1:]:
            s = a.r + b.r
            if abs(math.hypot(a.x - b.x, a.y - b.y) - s) <= tol * s:
                out.append((a.v, b.v))
    return out


def coin_report(p: Packing, g: PlaneGraph, tol: float = 1e-6) -> CoinReport:
    """Diagnostics for a packing of ``g``; raises if tangencies disagree with ``g``."""
    got = set(tangent_pairs(p.circles, tol))
    want = set(g.edges())
    if got != want:
        raise AdjacencyMismatch(
            f"{len(want - got)} edges not tangent, {len(got - want)} spurious tangencies",
            missing=sorted(want - got), extra=sorted(got - want))
    rs = [c.r for c in p.circles]
    return CoinReport(p.tangency, p.overlap, max(rs) / min(rs), flower_centers(g), True, tuple(sorted(rs)))
