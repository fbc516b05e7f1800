"""Closed forms for the extremal edge count and the related integer program.

Everything is exact integer arithmetic.  ``(2k + 3) * n`` is nonnegative, so
``floor((2k + 3) n / k - 6)`` is evaluated as ``(2k + 3) * n // k - 6``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParams

N_MAX = 10**12


def _check(k: int, n: int, k_min: int = 3) -> None:
    if not (isinstance(k, int) and isinstance(n, int)):
        raise InvalidParams(f"k and n must be integers, got k={k!r}, n={n!r}")
    if k < k_min:
        raise InvalidParams(f"k must be at least {k_min}, got {k}")
    if n < k:
        raise InvalidParams(f"n must be at least k={k}, got {n}")
    if n > N_MAX:
        raise InvalidParams(f"n must not exceed {N_MAX}, got {n}")


def gamma(k: int, n: int) -> int:
    """Offset that moves ``n`` to the optimal ``x`` of the integer program."""
    beta = n % k
    if beta == k - 1:
        return 1
    if beta == k - 2:
        return 2
    return 0


def alpha(k: int, n: int) -> int:
    """Discrepancy subtracted from ``floor((2k+3)n/k - 6)``."""
    beta = n % k
    if beta == k - 1:
        return 0
    if beta == k - 2:
        return (2 * k - 6) // k  # floor(2 - 6/k)
    return (3 * beta) // k


@dataclass(frozen=True)
class ExtremalParams:
    """Derived quantities for a pair (k, n) with ``n = k*j + beta``."""

    k: int
    n: int
    j: int
    beta: int
    gamma: int
    alpha: int
    t: int

    @property
    def mu(self) -> int:
        return mu_formula(self.n, self.k)

    @property
    def case(self) -> str:
        """Which residue class of ``n mod k`` applies."""
        if self.beta == self.k - 1:
            return "k-1"
        if self.beta == self.k - 2:
            return "k-2"
        return "low"


def params(k: int, n: int) -> ExtremalParams:
    _check(k, n)
    j, beta = divmod(n, k)
    return ExtremalParams(k, n, j, beta, gamma(k, n), alpha(k, n), t_formula(k, n))


def t_formula(k: int, n: int) -> int:
    """Maximum edge count of a plane graph on ``n`` vertices in which every
    vertex bounds a face of size at least ``k``.

    >>> t_formula(4, 7), t_formula(6, 8)
    (13, 13)

    ``k = 3`` is accepted and gives ``3n - 6``; the closed form is only
    proved for ``k >= 4``.
    """
    _check(k, n)
    return (2 * k + 3) * n // k - 6 - alpha(k, n)


def mu_formula(n: int, k: int) -> int:
    """Minimum of ``x - 3y`` over integers ``x >= n``, ``0 <= k*y <= x``."""
    _check(k, n)
    g = gamma(k, n)
    return n + g - 3 * ((n + g) // k)


def e4(n: int) -> int:
    """Edge maximum for ``k = 4``: ``floor(11n/4) - 6``."""
    if not isinstance(n, int) or n < 4:
        raise InvalidParams(f"n must be an integer >= 4, got {n!r}")
    if n > N_MAX:
        raise InvalidParams(f"n must not exceed {N_MAX}, got {n}")
    return 11 * n // 4 - 6


def nf_upper_bound(n: int) -> int:
    """Upper bound on the edge count of a non-flowered coin graph on ``n`` coins.

    Only an upper bound: whether non-flowerable coin collections reach it is
    an open conjecture.
    """
    return e4(n)
