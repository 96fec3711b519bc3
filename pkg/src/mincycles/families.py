"""Extremal multigraph constructions and their closed-form cycle counts."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence

from .graph import Multigraph

__all__ = [
    "FamilySpec",
    "multipath_multiplicities",
    "make_multipath",
    "make_cycle_with_multiplicities",
    "make_tCp",
    "expected_cycles_tCp",
    "make_Cpr",
    "cpr_r_for_rate",
    "make_GpRr",
    "expected_cycles_GpRr",
    "gprr_r_for_rate",
    "make_theta",
    "make_complete",
    "make_octahedron",
    "build",
]


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: Dict[str, int]
    expected_cycles: Optional[int] = None


def multipath_multiplicities(p: int, q: int) -> list:
    """Balanced multiplicities for p-1 path positions summing to q, larger ones first."""
    if p < 2:
        raise ValueError(f"need p >= 2, got p={p}")
    if q < p - 1:
        raise ValueError(f"a multipath on {p} vertices needs at least {p - 1} edges, got q={q}")
    m, r = divmod(q, p - 1)
    return [m + 1] * r + [m] * (p - 1 - r)


def make_multipath(p: int, q: int) -> Multigraph:
    """Path ``0 - 1 - ... - p-1`` with balanced multiplicities; ends are 0 and p-1."""
    edges = []
    for i, mult in enumerate(multipath_multiplicities(p, q)):
        edges += [(i, i + 1)] * mult
    return Multigraph(p, tuple(edges))


def make_cycle_with_multiplicities(mults: Sequence[int]) -> Multigraph:
    """Cycle ``0 - 1 - ... - p-1 - 0`` where position i (edge i -> i+1) has ``mults[i]`` copies."""
    p = len(mults)
    if p < 3:
        raise ValueError(f"need p >= 3 positions, got {p}")
    if min(mults) < 1:
        raise ValueError("every position needs multiplicity >= 1")
    edges = []
    for i, mult in enumerate(mults):
        edges += [(i, (i + 1) % p)] * mult
    return Multigraph(p, tuple(edges))


def make_tCp(t: int, p: int) -> Multigraph:
    if t < 1:
        raise ValueError(f"need t >= 1, got t={t}")
    if p < 3:
        raise ValueError(f"need p >= 3, got p={p} (use make_theta for two vertices)")
    return make_cycle_with_multiplicities([t] * p)


def expected_cycles_tCp(t: int, p: int) -> int:
    """Hamiltonian cycles ``t^p`` plus digons ``p * C(t, 2)``."""
    return t ** p + p * math.comb(t, 2)


def make_Cpr(p: int, r: int) -> Multigraph:
    """2C_p with edge 0 subdivided r times; new vertices are p..p+r-1 along the chain."""
    if p < 3:
        raise ValueError(f"need p >= 3, got p={p}")
    if r < 0:
        raise ValueError(f"need r >= 0, got r={r}")
    edges = list(make_tCp(2, p).edges)
    if r:
        chain = [0] + list(range(p, p + r)) + [1]
        edges[0] = (chain[0], chain[1])
        edges += [(chain[i], chain[i + 1]) for i in range(1, r + 1)]
    return Multigraph(p + r, tuple(edges))


def cpr_r_for_rate(p: int, R) -> int:
    """Largest r with ``(p+1)/(2p+r) >= R``."""
    R = Fraction(R).limit_denominator(10 ** 9)
    return math.floor((p + 1) / R - 2 * p)


def make_GpRr(p: int, t: int, r: int) -> Multigraph:
    """tC_p with the first r positions raised to multiplicity t+1."""
    if p < 3 or t < 2:
        raise ValueError(f"need p >= 3 and t >= 2, got p={p}, t={t}")
    if not 0 <= r < p:
        raise ValueError(f"need 0 <= r < p, got r={r}")
    return make_cycle_with_multiplicities([t + 1] * r + [t] * (p - r))


def expected_cycles_GpRr(p: int, t: int, r: int) -> int:
    return t ** (p - r) * (t + 1) ** r + r * math.comb(t + 1, 2) + (p - r) * math.comb(t, 2)


def gprr_r_for_rate(p: int, t: int, R) -> int:
    """``r = floor((p-1)/(1-R)) - pt``: the most extra edges keeping the rate <= R."""
    R = Fraction(R).limit_denominator(10 ** 9)
    return math.floor((p - 1) / (1 - R)) - p * t


def make_theta(q: int) -> Multigraph:
    if q < 2:
        raise ValueError(f"need q >= 2, got q={q}")
    return Multigraph(2, ((0, 1),) * q)


def make_complete(n: int) -> Multigraph:
    return Multigraph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def make_octahedron() -> Multigraph:
    """K_{2,2,2}: six vertices, antipodal pairs (0,1), (2,3), (4,5) non-adjacent."""
    return Multigraph(6, tuple((u, v) for u in range(6) for v in range(u + 1, 6) if v != u + 1 or u % 2))


def build(family: str, **params) -> FamilySpec:
    """Named family with its expected cycle count (None where no closed form)."""
    if family == "multipath":
        return FamilySpec(family, params, 0)
    if family == "tcp":
        return FamilySpec(family, params, expected_cycles_tCp(params["t"], params["p"]))
    if family == "cpr":
        return FamilySpec(family, params, expected_cycles_tCp(2, params["p"]))
    if family == "gprr":
        return FamilySpec(family, params, expected_cycles_GpRr(params["p"], params["t"], params["r"]))
    if family == "theta":
        return FamilySpec(family, params, math.comb(params["q"], 2))
    raise ValueError(f"unknown family {family!r}")


GENERATORS = {
    "multipath": lambda a: make_multipath(a["p"], a["q"]),
    "tcp": lambda a: make_tCp(a["t"], a["p"]),
    "cpr": lambda a: make_Cpr(a["p"], a["r"]),
    "gprr": lambda a: make_GpRr(a["p"], a["t"], a["r"]),
    "theta": lambda a: make_theta(a["q"]),
}
