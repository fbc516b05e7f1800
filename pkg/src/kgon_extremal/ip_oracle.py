"""Brute-force solver for ``min {x - 3y : x >= n, k*y <= x, x, y >= 0}``.

Independent of :mod:`kgon_extremal.formula`; it never looks at residues.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import InvalidParams


@dataclass(frozen=True, order=True)
class IPPoint:
    x: int
    y: int

    @property
    def objective(self) -> int:
        return self.x - 3 * self.y

    def feasible(self, n: int, k: int) -> bool:
        return self.x >= n and self.y >= 0 and k * self.y <= self.x


@dataclass(frozen=True)
class IPSolution:
    minimizer: IPPoint
    value: int


def _check(n: int, k: int) -> None:
    if not (isinstance(n, int) and isinstance(k, int)) or k < 3 or n < k:
        raise InvalidParams(f"need integers n >= k >= 3, got n={n!r}, k={k!r}")


def mu_bruteforce(n: int, k: int) -> IPSolution:
    """Scan ``x`` over ``[n, n + 3k]`` with the largest feasible ``y = x // k``.

    For fixed ``x`` the objective falls as ``y`` grows, so only the largest
    feasible ``y`` matters.  Moving ``x`` by ``k`` changes the objective by
    ``k - 3 >= 0``, so the window covers the minimum three times over.
    Ties go to the smallest ``x``.
    """
    _check(n, k)
    best_x = n
    best = n - 3 * (n // k)
    for x in range(n + 1, n + 3 * k + 1):
        v = x - 3 * (x // k)
        if v < best:
            best, best_x = v, x
    return IPSolution(IPPoint(best_x, best_x // k), best)


def mu_full_enumeration(n: int, k: int) -> IPSolution:
    """Same program without the ``y`` reduction: every lattice point of the window."""
    _check(n, k)
    best = None
    for x in range(n, n + 3 * k + 1):
        for y in range(0, x // k + 1):
            p = IPPoint(x, y)
            if best is None or (p.objective, p.x, p.y) < (best.objective, best.x, best.y):
                best = p
    return IPSolution(best, best.objective)


def region_scan(n: int, k: int, x_max: int | None = None,
                y_max: int | None = None) -> Iterator[tuple[int, int, int, bool]]:
    """Rows ``(x, y, objective, feasible)`` over a box around the optimum."""
    _check(n, k)
    x_max = n + 2 * k if x_max is None else x_max
    y_max = x_max // k + 1 if y_max is None else y_max
    for x in range(0, x_max + 1):
        for y in range(0, y_max + 1):
            p = IPPoint(x, y)
            yield x, y, p.objective, p.feasible(n, k)
