import math

import pytest

from conftest import triangle, wheel
from kgon_extremal.circlepack import (
    Circle, Packing, angle_sums, augment, coin_report, corner_angle, pack, residuals, tangent_pairs,
)
from kgon_extremal.construct import construct
from kgon_extremal.errors import AdjacencyMismatch, DegenerateRadius, NoConvergence, NotTwoConnected
from kgon_extremal.graph import PlaneGraph
from kgon_extremal.verify import census


def k4():
    return PlaneGraph.from_embedding([(0, 0), (4, 0), (2, 3), (2, 1)],
                                     [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])


def test_corner_angle_equilateral():
    assert corner_angle(1.0, 1.0, 1.0) == pytest.approx(math.pi / 3, abs=1e-15)
    # right angle at the small circle of a 3-4-5 triangle: radii 1, 2, 3
    assert corner_angle(1.0, 2.0, 3.0) == pytest.approx(math.pi / 2, abs=1e-14)


def test_k4_inner_circle():
    p = pack(augment(k4()))
    assert p.converged
    inner = [c for c in p.circles if c.v not in p.boundary]
    assert len(inner) == 1
    assert inner[0].r == pytest.approx(2 / math.sqrt(3) - 1, abs=1e-9)
    outer = [c for c in p.circles if c.v in p.boundary]
    for i in range(3):
        a, b = outer[i], outer[(i + 1) % 3]
        assert math.hypot(a.x - b.x, a.y - b.y) == pytest.approx(2.0, abs=1e-9)


def test_wheel_packing(w6):
    p = pack(augment(w6))
    assert len(p.circles) == 7
    assert p.converged and p.tangency <= 1e-6
    rep = coin_report(p, w6)
    assert rep.adjacency_match
    assert rep.flower_centers == [0]
    assert len(tangent_pairs(p.circles)) == 12


def test_regular_hexagon_is_fixed_point():
    # unit radii fill a regular hexagonal flower exactly
    sums = angle_sums(wheel(6), [1.0] * 7)
    assert sums[0] == pytest.approx(2 * math.pi, abs=1e-12)


def test_triangle_packing():
    p = pack(augment(triangle()))
    assert [c.r for c in p.circles] == [1.0, 1.0, 1.0]
    assert p.tangency <= 1e-12 and p.iterations == 0


@pytest.mark.parametrize("k,n", [(4, 8), (4, 12), (5, 9), (6, 8)])
def test_angle_sums_from_radii(k, n):
    aug = augment(construct(k, n), k)
    p = pack(aug)
    sums = angle_sums(aug.augmented, p.all_radii)
    for v in range(aug.augmented.n):
        if v not in p.boundary:
            assert abs(sums[v] - 2 * math.pi) <= 1e-10


@pytest.mark.parametrize("k,n", [(4, 12), (5, 9)])
def test_scale_invariance(k, n):
    g = construct(k, n)
    p = pack(augment(g))
    t7, o7 = residuals(p.scaled(7.0), g)
    assert t7 == pytest.approx(p.tangency, rel=1e-6, abs=1e-13)
    assert o7 == pytest.approx(p.overlap, rel=1e-6, abs=1e-13)


@pytest.mark.parametrize("k", [4, 5, 6])
def test_sweep_adjacency(k):
    for n in range(k, 31):
        g = construct(k, n)
        p = pack(augment(g, k))
        assert p.converged
        assert p.tangency <= 1e-6
        assert p.overlap <= 1e-6
        assert coin_report(p, g).adjacency_match


def test_no_convergence():
    with pytest.raises(NoConvergence) as e:
        pack(augment(construct(4, 12)), max_iter=1)
    assert isinstance(e.value.best, Packing)
    assert not e.value.best.converged


def test_degenerate_radius():
    with pytest.raises(DegenerateRadius):
        pack(augment(construct(4, 30)), radius_floor=0.5)


def test_adjacency_mismatch():
    g = construct(4, 8)
    p = pack(augment(g))
    c0 = p.circles[0]
    moved = (Circle(c0.v, c0.x + 10 * c0.r, c0.y, c0.r),) + p.circles[1:]
    bad = Packing(moved, p.tangency, p.overlap, p.iterations, p.converged)
    with pytest.raises(AdjacencyMismatch) as e:
        coin_report(bad, g)
    assert e.value.missing


def test_augment_4_4():
    aug = augment(construct(4, 4), 4)
    assert (aug.augmented.n, aug.augmented.edge_count) == (5, 9)
    assert all(f.size == 3 for f in aug.augmented.faces)


def test_augment_matches_census():
    g = construct(6, 8)
    c = census(g, 6)
    aug = augment(g, 6)
    assert (aug.augmented.n, aug.augmented.edge_count) == (c.n_prime, c.m_prime) == (9, 21)
    assert sum(aug.augmented.degree(h) for h in aug.kgon_hubs()) == c.d_k


@pytest.mark.parametrize("k,n", [(4, 11), (5, 23), (7, 40)])
def test_hub_degrees(k, n):
    g = construct(k, n)
    aug = augment(g, k)
    for fi, h in aug.hub_map.items():
        assert aug.augmented.degree(h) == g.faces[fi].size
    assert aug.augmented.labels[h].startswith("hub:")


def test_augment_rejects_non_simple_faces():
    with pytest.raises(NotTwoConnected):
        augment(PlaneGraph(4, ((1,), (0, 2, 3), (1,), (1,))))


def test_coin_report_fields():
    g = construct(4, 12)
    rep = coin_report(pack(augment(g)), g)
    d = rep.to_json()
    assert d["flower_centers"] == []
    assert d["radius_ratio"] >= 1.0
    assert len(d["radii"]) == 12 and d["radii"] == sorted(d["radii"])
