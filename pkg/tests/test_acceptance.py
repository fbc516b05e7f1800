"""Acceptance criteria, one test each.  Every test records a PASS/FAIL line
(shown in the terminal summary) before asserting."""

import math
import re
import time
from collections import Counter

from conftest import ACCEPTANCE_LINES, wheel
from kgon_extremal import io
from kgon_extremal.circlepack import angle_sums, augment, coin_report, pack
from kgon_extremal.construct import construct, make_plan
from kgon_extremal.formula import alpha, e4, params, t_formula
from kgon_extremal.graph import euler_check
from kgon_extremal.ip_oracle import IPPoint, mu_bruteforce
from kgon_extremal.search import search
from kgon_extremal.svg import render_svg
from kgon_extremal.verify import check_extremal, check_kgon_property, eq1_identity, flower_centers


def record(number, title, failures, elapsed, limit=None):
    ok = not failures and (limit is None or elapsed < limit)
    budget = f" (limit {limit:g} s)" if limit is not None else ""
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} [{elapsed:.2f} s{budget}]"
    if failures:
        line += f" first failures: {failures[:3]}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failures, line
    assert limit is None or elapsed < limit, line


def test_criterion_1_formula_ip_identity():
    t0 = time.perf_counter()
    bad = [(k, n) for k in range(4, 65) for n in range(k, 2001)
           if t_formula(k, n) != 3 * n - 6 - mu_bruteforce(n, k).value]
    record(1, "T_k(n) = 3n - 6 - mu(n,k), 4<=k<=64, k<=n<=2000", bad, time.perf_counter() - t0, 10)


def test_criterion_2_known_minimizers():
    t0 = time.perf_counter()
    bad = []
    a, b = mu_bruteforce(8, 6), mu_bruteforce(7, 4)
    if (a.value, a.minimizer) != (5, IPPoint(8, 1)):
        bad.append(("mu(8,6)", a))
    if (b.value, b.minimizer) != (2, IPPoint(8, 2)):
        bad.append(("mu(7,4)", b))
    record(2, "mu(8,6) = 5 at (8,1); mu(7,4) = 2 at (8,2)", bad, time.perf_counter() - t0)


def test_criterion_3_construction_extremality():
    t0 = time.perf_counter()
    bad = []
    expected_chords = lambda k, beta: 2 if beta == k - 1 else 1 if beta == k - 2 else 0
    for k in range(4, 13):
        for n in range(k, 201):
            g = construct(k, n)
            chords = len(make_plan(k, n).chords)
            ok = (euler_check(g) and check_kgon_property(g, k) and eq1_identity(g, k)
                  and g.edge_count == t_formula(k, n)
                  and chords == expected_chords(k, params(k, n).beta))
            if not ok:
                bad.append((k, n))
    record(3, "construct(k,n) extremal, 4<=k<=12, k<=n<=200", bad, time.perf_counter() - t0, 60)


def test_criterion_4_independent_maximum():
    t0 = time.perf_counter()
    bad = []
    pairs = [(k, n) for n in range(3, 7) for k in range(3, n + 1)]
    for k, n in pairs:
        r = search(k, n)
        if r.best_m != t_formula(k, n) or not check_extremal(r.witness, k).extremal:
            bad.append((k, n, r.best_m))
    assert len(pairs) == 10
    record(4, "exhaustive search equals T_k(n) for all 3<=k<=n<=6 (10 pairs)", bad,
           time.perf_counter() - t0, 600)


def test_criterion_5_e4_table():
    t0 = time.perf_counter()
    bad = [n for n in range(4, 10**6 + 1)
           if not (e4(n) == t_formula(4, n) == math.floor(11 * n / 4) - 6 and alpha(4, n) == 0)]
    record(5, "e4(n) = floor(11n/4) - 6 = T_4(n), alpha = 0, n = 4..10^6", bad,
           time.perf_counter() - t0, 5)


def test_criterion_6_packing_soundness():
    t0 = time.perf_counter()
    bad = []
    for k, n in [(4, 8), (4, 12), (5, 9), (6, 8)]:
        g = construct(k, n)
        aug = augment(g, k)
        p = pack(aug, tol=1e-10)
        sums = angle_sums(aug.augmented, p.all_radii)
        angle = max(abs(sums[v] - 2 * math.pi) for v in range(aug.augmented.n) if v not in p.boundary)
        rep = coin_report(p, g, tol=1e-6)
        if not (p.converged and angle <= 1e-10 and p.tangency <= 1e-6
                and rep.adjacency_match and rep.flower_centers == []):
            bad.append((k, n, angle, p.tangency))
    record(6, "packings converge, residuals within tolerance, adjacency exact", bad,
           time.perf_counter() - t0, 30)


def test_criterion_7_flower_detection():
    t0 = time.perf_counter()
    bad = []
    if flower_centers(wheel(6)) != [0]:
        bad.append("W_6")
    for k in range(4, 13):
        for n in range(k, 201):
            if flower_centers(construct(k, n)):
                bad.append((k, n))
    record(7, "W_6 has exactly its hub as flower centre; constructions have none", bad,
           time.perf_counter() - t0)


def test_criterion_8_round_trip_and_svg():
    t0 = time.perf_counter()
    graphs = [construct(k, n) for k in range(3, 9) for n in range(k, k + 6)] + [wheel(5), wheel(6)]
    packings = [pack(augment(construct(k, n))) for k, n in
                [(4, 4), (4, 8), (4, 12), (5, 9), (6, 8), (5, 13), (7, 9), (4, 17), (6, 15), (8, 20), (4, 5), (9, 11)]]
    bad = []
    for g in graphs:
        s = io.dumps_graph(g)
        if io.dumps_graph(io.loads_graph(s)) != s or io.loads_graph(s) != g:
            bad.append(("graph", g.n))
        svg = render_svg(g)
        counts = Counter(re.findall(r"<(circle|line) ", svg))
        if svg != render_svg(io.loads_graph(s)) or counts != {"circle": g.n, "line": g.edge_count}:
            bad.append(("svg", g.n))
    for p in packings:
        s = io.dumps_packing(p)
        if io.dumps_packing(io.loads_packing(s)) != s:
            bad.append(("packing", len(p.circles)))
        if render_svg(p) != render_svg(io.loads_packing(s)):
            bad.append(("packing svg", len(p.circles)))
    assert len(graphs) + len(packings) == 50
    record(8, "byte-identical round trip and deterministic SVG for 50 fixtures", bad,
           time.perf_counter() - t0)
