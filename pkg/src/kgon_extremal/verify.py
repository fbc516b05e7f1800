"""Checks on plane graphs: the k-gon property, the face census identity,
extremality and combinatorial flower centres."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidParams, NotTwoConnected
from .formula import t_formula
from .graph import PlaneGraph, euler_check


@dataclass(frozen=True)
class FaceCensus:
    """Face counts of a plane graph relative to a threshold ``k``.

    ``f`` counts faces of each exact size below ``k``; ``f_k`` counts faces
    of size at least ``k`` and ``d_k`` is the sum of their sizes, which is the
    degree sum of the hubs that the augmentation would put inside them.
    """

    k: int
    n: int
    m: int
    f: dict[int, int] = field(default_factory=dict)
    f_k: int = 0
    d_k: int = 0

    @property
    def d(self) -> int:
        """Total hub degree for hubs in every face of size >= 4."""
        return sum(i * c for i, c in self.f.items() if i >= 4) + self.d_k

    @property
    def hub_count(self) -> int:
        return sum(c for i, c in self.f.items() if i >= 4) + self.f_k

    @property
    def n_prime(self) -> int:
        return self.n + self.hub_count

    @property
    def m_prime(self) -> int:
        return self.m + self.d

    @property
    def deficit(self) -> int:
        """``sum (i-3) f_i + d_k - 3 f_k``, the amount by which ``m`` falls short of ``3n-6``."""
        return sum((i - 3) * c for i, c in self.f.items() if i >= 4) + self.d_k - 3 * self.f_k

    def to_json(self) -> dict:
        return {"f": {str(i): c for i, c in sorted(self.f.items())}, "d_k": self.d_k, "f_k": self.f_k}


@dataclass(frozen=True)
class VerifyReport:
    property_holds: bool
    census: FaceCensus
    edge_count: int
    formula_target: int
    extremal: bool
    flower_centers: list[int]
    euler_ok: bool

    def to_json(self) -> dict:
        return {
            "property_holds": self.property_holds,
            "m": self.edge_count,
            "target": self.formula_target,
            "extremal": self.extremal,
            "flower_centers": list(self.flower_centers),
            "census": self.census.to_json(),
            "euler_ok": self.euler_ok,
        }


def check_kgon_property(g: PlaneGraph, k: int) -> bool:
    """True iff every vertex lies on some face of size ``>= k``."""
    if k < 3:
        raise InvalidParams(f"k must be at least 3, got {k}")
    big = set()
    for f in g.faces:
        if f.size >= k:
            big.update(f.boundary)
    return len(big) == g.n


def census(g: PlaneGraph, k: int) -> FaceCensus:
    if k < 3:
        raise InvalidParams(f"k must be at least 3, got {k}")
    f: dict[int, int] = {i: 0 for i in range(3, k)}
    f_k = d_k = 0
    for face in g.faces:
        if face.size >= k:
            f_k += 1
            d_k += face.size
        else:
            f[face.size] = f.get(face.size, 0) + 1
    return FaceCensus(k, g.n, g.edge_count, f, f_k, d_k)


def eq1_identity(g: PlaneGraph, k: int) -> bool:
    """Check ``m == 3n - 6 - (sum (i-3) f_i + d_k - 3 f_k)`` exactly.

    Requires every face to be a simple cycle.
    """
    for face in g.faces:
        if not face.is_simple:
            raise NotTwoConnected(f"face {face.boundary} repeats a vertex")
    c = census(g, k)
    return g.edge_count == 3 * g.n - 6 - c.deficit


def flower_centers(g: PlaneGraph) -> list[int]:
    """Vertices all of whose incident faces are triangles."""
    return [v for v, fs in enumerate(g.vertex_faces()) if all(f.size == 3 for f in fs)]


def check_extremal(g: PlaneGraph, k: int) -> VerifyReport:
    """Full report; a non-spherical rotation system is never extremal."""
    holds = check_kgon_property(g, k)
    target = t_formula(k, g.n)
    euler_ok = euler_check(g)
    return VerifyReport(
        property_holds=holds,
        census=census(g, k),
        edge_count=g.edge_count,
        formula_target=target,
        extremal=euler_ok and holds and g.edge_count == target,
        flower_centers=flower_centers(g),
        euler_ok=euler_ok,
    )
