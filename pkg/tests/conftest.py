import math

import pytest
from hypothesis import strategies as st

from kgon_extremal.construct import fan_triangulate
from kgon_extremal.graph import PlaneGraph

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def polygon(n, radius=1.0):
    return [(radius * math.cos(2 * math.pi * i / n), radius * math.sin(2 * math.pi * i / n)) for i in range(n)]


def cycle_graph(n):
    return PlaneGraph.from_embedding(polygon(n), [(i, (i + 1) % n) for i in range(n)])


def wheel(spokes):
    pos = [(0.0, 0.0)] + polygon(spokes)
    edges = [(0, i) for i in range(1, spokes + 1)]
    edges += [(i, i % spokes + 1) for i in range(1, spokes + 1)]
    return PlaneGraph.from_embedding(pos, edges)


def triangle():
    return PlaneGraph.from_embedding([(0, 0), (1, 0), (0, 1)], [(0, 1), (1, 2), (0, 2)])


def maximal_planar_5():
    pos = [(0, 0), (6, 0), (3, 6), (3, 2), (3, 0.8)]
    edges = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (3, 4)]
    return PlaneGraph.from_embedding(pos, edges)


def k5_rotation():
    return PlaneGraph(5, tuple(tuple(w for w in range(5) if w != v) for v in range(5)))


def _crosses(a, b, c, d):
    if len({a, b, c, d}) < 4:
        return False
    inside = lambda x: a < x < b
    return inside(c) != inside(d)


def chorded_cycle(n, candidates, outer_fan=None):
    """Convex n-gon plus the non-crossing chords greedily taken from
    ``candidates``; optionally fan-triangulate the exterior from ``outer_fan``."""
    chords = []
    w = None if outer_fan is None else outer_fan % n
    for a, b in candidates:
        a, b = sorted((a % n, b % n))
        if w in (a, b):
            continue  # the exterior fan would duplicate the chord
        if b - a < 2 or (a == 0 and b == n - 1) or (a, b) in chords:
            continue
        if any(_crosses(a, b, *sorted(c)) for c in chords):
            continue
        chords.append((a, b))
    edges = [(i, (i + 1) % n) for i in range(n)] + chords
    g = PlaneGraph.from_embedding(polygon(n), edges)
    if outer_fan is None:
        return g
    rot = [list(r) for r in g.rotation]
    # the exterior is traced clockwise, entered at w from w + 1
    fan_triangulate(rot, w, (w + 1) % n)
    return PlaneGraph(n, tuple(tuple(r) for r in rot))


@st.composite
def chorded_cycles(draw, max_n=12):
    n = draw(st.integers(4, max_n))
    cand = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    fan = draw(st.one_of(st.none(), st.integers(0, n - 1)))
    return chorded_cycle(n, cand, fan)


@pytest.fixture
def w6():
    return wheel(6)
