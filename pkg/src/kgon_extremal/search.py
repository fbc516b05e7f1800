"""Exhaustive maximum edge count for tiny ``n``, independent of the closed form.

Every labelled edge set is tried from ``3n - 6`` edges downward.  For each
connected edge set the rotation systems are enumerated vertex by vertex (each
cyclic order starts at the smallest neighbour), pruning a partial assignment
when

* even splitting all still-open darts into triangles cannot reach the
  ``2 - n + m`` faces a spherical embedding needs, or
* some vertex has all its corners on closed faces and none is large enough.

Both cuts only discard assignments that could never be a valid witness.
"""

from __future__ import annotations

import itertools
import logging
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import BudgetExceeded, InvalidParams
from .graph import PlaneGraph

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**9


@dataclass(frozen=True)
class SearchResult:
    n: int
    k: int
    best_m: int
    witness: PlaneGraph
    graphs_examined: int
    rotations_examined: int


def _connected(n: int, edges) -> bool:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def find_embedding(n: int, edges, k: int, budget: int = DEFAULT_BUDGET):
    """Lexicographically first spherical rotation system of ``edges`` in which
    every vertex bounds a face of size ``>= k``.

    Returns ``(rotation or None, nodes visited)``.
    """
    edges = sorted(tuple(sorted(e)) for e in edges)
    m = len(edges)
    nbrs = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    for r in nbrs:
        r.sort()
    if any(not r for r in nbrs):
        return None, 0
    darts = [(u, v) for u in range(n) for v in nbrs[u]]
    did = {d: i for i, d in enumerate(darts)}
    head = [v for _, v in darts]
    nd = len(darts)
    faces_needed = 2 - n + m
    mirror_cut = next((v for v in range(n) if len(nbrs[v]) >= 3), None)
    choices = []
    for v in range(n):
        first, rest = nbrs[v][0], nbrs[v][1:]
        orders = [(first,) + p for p in itertools.permutations(rest)]
        if v == mirror_cut:
            # reversing every rotation mirrors all faces; keep one orientation
            orders = [o for o in orders if o[1] < o[-1]]
        choices.append(orders)

    succ = [-1] * nd
    in_face = [False] * nd
    corners_closed = [0] * n
    has_big = [False] * n
    state = {"faces": 0, "closed": 0, "nodes": 0}

    def close_faces(v):
        """Close every face that became complete; return the darts touched."""
        newly = []
        for u in nbrs[v]:
            d0 = did[(u, v)]
            if in_face[d0]:
                continue
            cycle = [d0]
            d = succ[d0]
            while d != -1 and d != d0:
                cycle.append(d)
                d = succ[d]
            if d != d0:
                continue
            size = len(cycle)
            for d in cycle:
                in_face[d] = True
                w = head[d]
                corners_closed[w] += 1
            newly.append((cycle, size >= k))
        return newly

    def undo(newly, big_set):
        for cycle, _ in newly:
            for d in cycle:
                in_face[d] = False
                corners_closed[head[d]] -= 1
        for w in big_set:
            has_big[w] = False

    def feasible():
        open_darts = nd - state["closed"]
        rest = faces_needed - state["faces"]
        if rest <= 0:
            return rest == 0 and open_darts == 0
        lacking = n - sum(has_big)
        if lacking == 0:
            return 3 * rest <= open_darts
        # b >= 1 open faces of size >= k must jointly visit every lacking vertex
        need = min(3 * (rest - b) + max(lacking, k * b) for b in range(1, rest + 1))
        return need <= open_darts

    def rec(v):
        if v == n:
            return state["faces"] == faces_needed and all(has_big)
        for order in choices[v]:
            state["nodes"] += 1
            if state["nodes"] > budget:
                raise BudgetExceeded(f"node budget {budget} exhausted", state["nodes"])
            d_len = len(order)
            for i, u in enumerate(order):
                succ[did[(u, v)]] = did[(v, order[(i + 1) % d_len])]
            newly = close_faces(v)
            big_set = []
            for cycle, big in newly:
                state["faces"] += 1
                state["closed"] += len(cycle)
                if big:
                    for d in cycle:
                        w = head[d]
                        if not has_big[w]:
                            has_big[w] = True
                            big_set.append(w)
            ok = feasible()
            if ok:
                # a vertex whose corners are all closed must already have a big face
                touched = {head[d] for cycle, _ in newly for d in cycle}
                ok = all(has_big[w] or corners_closed[w] < len(nbrs[w]) for w in touched)
            if ok and rec(v + 1):
                return True
            for cycle, _ in newly:
                state["faces"] -= 1
                state["closed"] -= len(cycle)
            undo(newly, big_set)
            for u in order:
                succ[did[(u, v)]] = -1
        return False

    found = rec(0)
    if not found:
        return None, state["nodes"]
    rotation = []
    for v in range(n):
        # recover the chosen order from succ
        order = [nbrs[v][0]]
        while len(order) < len(nbrs[v]):
            _, w = darts[succ[did[(order[-1], v)]]]
            order.append(w)
        rotation.append(tuple(order))
    return tuple(rotation), state["nodes"]


def canonical_form(n: int, edges) -> tuple:
    """Isomorphism-invariant key: the smallest relabelled edge list over all
    relabellings that order vertices by degree."""
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    classes = [[v for v in range(n) if deg[v] == d] for d in sorted(set(deg))]
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        label = {}
        for block in parts:
            for v in block:
                label[v] = len(label)
        key = tuple(sorted((min(label[u], label[v]), max(label[u], label[v])) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


def _try_edge_set(args):
    n, edges, k, budget = args
    if not _connected(n, edges):
        return None, 0, False
    rot, nodes = find_embedding(n, edges, k, budget)
    return rot, nodes, True


def _representatives(n, pairs, m, reduce=True):
    """First connected edge set (in lexicographic order) of every isomorphism
    class with ``m`` edges, plus the number of connected sets seen.

    With ``reduce=False`` every connected edge set is its own representative.
    """
    seen = set()
    reps = []
    count = 0
    for s in itertools.combinations(pairs, m):
        if not _connected(n, s):
            continue
        count += 1
        if not reduce:
            reps.append(s)
            continue
        key = canonical_form(n, s)
        if key not in seen:
            seen.add(key)
            reps.append(s)
    return reps, count


def search(k: int, n: int, allow_n7: bool = False, threads: int = 1,
           budget: int = DEFAULT_BUDGET, reduce_isomorphs: bool = True) -> SearchResult:
    """Maximum edge count over all embedded simple graphs on ``n`` vertices
    whose every vertex bounds a face of size ``>= k``.

    The result (``best_m`` and witness) does not depend on ``threads`` or
    ``reduce_isomorphs``; the latter only skips re-solving isomorphic edge sets.
    """
    if not (isinstance(k, int) and isinstance(n, int)) or k < 3 or n < k:
        raise InvalidParams(f"need integers 3 <= k <= n, got k={k!r}, n={n!r}")
    if n > 7 or (n == 7 and not allow_n7):
        raise InvalidParams(f"exhaustive search supports n <= 6 (n = 7 with allow_n7), got {n}")
    if n == 7:
        warnings.warn("exhaustive search at n = 7 may take hours", RuntimeWarning, stacklevel=2)
    pairs = list(itertools.combinations(range(n), 2))
    examined = nodes_total = 0
    for m in range(3 * n - 6, n - 2, -1):
        # embeddability with the k-gon property is invariant under relabelling;
        # the lexicographically first member of the first embeddable class is
        # the lexicographically first embeddable edge set
        reps, count = _representatives(n, pairs, m, reduce_isomorphs)
        examined += count
        jobs = [(n, s, k, budget) for s in reps]
        hit = None
        if threads > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                results = pool.map(_try_edge_set, jobs, chunksize=4)
                for rot, nodes, _ in results:
                    nodes_total += nodes
                    if nodes_total > budget:
                        pool.shutdown(wait=False, cancel_futures=True)
                        raise BudgetExceeded(f"node budget {budget} exhausted", nodes_total)
                    if rot is not None:
                        hit = rot
                        pool.shutdown(wait=False, cancel_futures=True)
                        break
        else:
            for job in jobs:
                rot, nodes, _ = _try_edge_set(job)
                nodes_total += nodes
                if nodes_total > budget:
                    raise BudgetExceeded(f"node budget {budget} exhausted", nodes_total)
                if rot is not None:
                    hit = rot
                    break
        log.debug("k=%d n=%d m=%d: %s", k, n, m, "found" if hit else "none")
        if hit is not None:
            return SearchResult(n, k, m, PlaneGraph(n, hit), examined, nodes_total)
    raise InvalidParams(f"no connected witness for k={k}, n={n}")

