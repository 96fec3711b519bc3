"""Upper and lower bounds on the number of minimal codewords and on cycle counts.

Counting bounds are exact (ints and Fractions). The rate exponents are floats.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .cycles import f_multipath

__all__ = [
    "BoundReport",
    "RateCurvePoint",
    "trivial_bound",
    "matroid_bound",
    "agrell_bound",
    "corollary1_bound",
    "theorem2_bound",
    "theorem3_bounds",
    "theorem4_check",
    "bound_report",
    "entropy",
    "mu_bounds",
    "mu_g",
    "mu_g_interior",
    "solve_R0",
    "figure1_table",
    "write_curves_csv",
    "rate_grid",
]

CURVE_HEADER = ("R", "trivial_upper", "matroid_upper", "random_lower", "mu_g")


def trivial_bound(k: int) -> int:
    if k < 1:
        raise ValueError(f"need k >= 1, got k={k}")
    return (1 << k) - 1


def matroid_bound(n: int, k: int) -> int:
    """Circuit bound for a binary matroid: ``binomial(n, k-1)``."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return math.comb(n, k - 1)


def agrell_bound(n: int, k: int) -> Optional[Fraction]:
    """``2^k / (4n((k-1)/n - 1/2)^2)``, or None unless ``(k-1)/n > 1/2``."""
    excess = Fraction(k - 1, n) - Fraction(1, 2)
    if excess <= 0:
        return None
    return Fraction(1 << k) / (4 * n * excess ** 2)


def corollary1_bound(p: int, q: int) -> Optional[Fraction]:
    """``q 2^(q-p+1) / (q-2p)^2`` for ``q > 2p``, else None."""
    if q <= 2 * p:
        return None
    return Fraction(q * (1 << (q - p + 1)), (q - 2 * p) ** 2)


def theorem2_bound(p: int, q: int) -> int:
    """``q m^(p-1-r) (m+1)^r`` where ``q-1 = (p-1)m + r``."""
    if p < 2 or q < 1:
        raise ValueError(f"need p >= 2 and q >= 1, got p={p}, q={q}")
    m, r = divmod(q - 1, p - 1)
    return q * m ** (p - 1 - r) * (m + 1) ** r


def theorem3_bounds(p: int, q: int) -> Tuple[int, int]:
    """Cycles guaranteed by some graph, and the most any graph can have."""
    if p < 2 or q < 2:
        raise ValueError(f"need p, q >= 2, got p={p}, q={q}")
    lower = f_multipath(q - 1, p)
    return lower, q * lower


def theorem4_check(p: int, q: int) -> dict:
    """Density threshold past which at most ``2^(q-p)`` cycles are possible.

    ``q > 2p + 3 log2(3p)`` is tested as ``2^(q-2p) > (3p)^3`` in integers.
    """
    if p < 2:
        raise ValueError(f"need p >= 2, got p={p}")
    applies = q >= 2 * p and (1 << (q - 2 * p)) > (3 * p) ** 3
    return {"applies": applies, "bound": (1 << (q - p)) if applies else None}


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    p: Optional[int]
    q: Optional[int]
    trivial: int
    matroid: int
    agrell: Optional[Fraction]
    corollary1: Optional[Fraction] = None
    theorem2: Optional[int] = None
    theorem3_lower: Optional[int] = None
    theorem3_upper: Optional[int] = None
    theorem4_applies: Optional[bool] = None
    theorem4_bound: Optional[int] = None

    def rows(self) -> List[Tuple[str, str]]:
        out = []
        for key, val in asdict(self).items():
            if val is None:
                out.append((key, "n/a"))
            elif isinstance(val, bool):
                out.append((key, str(val).lower()))
            elif isinstance(val, Fraction):
                out.append((key, _fmt_fraction(val)))
            else:
                out.append((key, str(val)))
        if self.theorem3_lower is not None:
            out.append(("theorem3", f"({self.theorem3_lower}, {self.theorem3_upper})"))
        return out


def _fmt_fraction(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator} (~{float(x):.6g})"


def bound_report(*, p: Optional[int] = None, q: Optional[int] = None,
                 n: Optional[int] = None, k: Optional[int] = None) -> BoundReport:
    """All applicable bounds, for a graph shape ``(p, q)`` or a code shape ``(n, k)``."""
    if p is not None and q is not None:
        n, k = q, q - p + 1
        extra = dict(p=p, q=q, corollary1=corollary1_bound(p, q), theorem2=theorem2_bound(p, q))
        if q >= 2:
            lo, hi = theorem3_bounds(p, q)
            extra.update(theorem3_lower=lo, theorem3_upper=hi)
        t4 = theorem4_check(p, q)
        extra.update(theorem4_applies=t4["applies"], theorem4_bound=t4["bound"])
    elif n is not None and k is not None:
        extra = dict(p=None, q=None)
    else:
        raise ValueError("give either (p, q) or (n, k)")
    if k < 1:
        raise ValueError(f"dimension k={k} must be >= 1 (is the graph a forest?)")
    return BoundReport(n=n, k=k, trivial=trivial_bound(k), matroid=matroid_bound(n, k),
                       agrell=agrell_bound(n, k), **extra)


def entropy(x: float) -> float:
    """Binary entropy in bits; ``H(0) = H(1) = 0``."""
    if not 0 <= x <= 1:
        raise ValueError(f"entropy argument {x} outside [0, 1]")
    if x == 0 or x == 1:
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def _check_rate(R: float):
    if not 0 < R < 1:
        raise ValueError(f"rate {R} outside (0, 1)")


def mu_bounds(R: float) -> dict:
    """Envelope for the exponent of general codes: ``lower <= mu(R) <= upper``."""
    _check_rate(R)
    h = entropy(R)
    lower = R if R <= 0.5 else h - 1 + R
    return {"upper": min(R, h), "lower": lower}


def mu_g_interior(R: float, t: int) -> float:
    """Linear piece of the graphic exponent on ``[1-1/t, 1-1/(t+1)]``."""
    s = 1 - R
    return (s * (1 + t) - 1) * math.log2(t) + (1 - t * s) * math.log2(t + 1)


def mu_g(R: float) -> float:
    """Exponent of the maximum cycle count for cycle codes of rate R."""
    _check_rate(R)
    if R <= 0.5:
        return R
    t = max(2, math.floor(1 / (1 - R)))
    return mu_g_interior(R, t)


def solve_R0(tol: float = 1e-9) -> float:
    """Root of ``H(R) = R`` on (0.5, 1) by bisection."""
    lo, hi = 0.5, 1.0 - 1e-12
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if entropy(mid) > mid:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


@dataclass(frozen=True)
class RateCurvePoint:
    R: float
    trivial_upper: float
    matroid_upper: float
    random_lower: float
    mu_g: float


def figure1_table(grid: Iterable[float]) -> List[RateCurvePoint]:
    rows = []
    for R in grid:
        _check_rate(R)
        rows.append(RateCurvePoint(R, R, entropy(R), mu_bounds(R)["lower"], mu_g(R)))
    return rows


def rate_grid(step: float, lo: Optional[float] = None, hi: Optional[float] = None) -> List[float]:
    """Grid ``lo, lo+step, ..., hi`` (default ``step .. 1-step``), rounded to the step's decimals."""
    lo = step if lo is None else lo
    hi = 1 - step if hi is None else hi
    digits = max(0, -math.floor(math.log10(step))) + 3
    count = int(round((hi - lo) / step)) + 1
    return [round(lo + i * step, digits) for i in range(count)]


def write_curves_csv(rows: Sequence[RateCurvePoint], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CURVE_HEADER)
    for r in rows:
        w.writerow([f"{v:.9g}" for v in (r.R, r.trivial_upper, r.matroid_upper, r.random_lower, r.mu_g)])


def curves_csv(rows: Sequence[RateCurvePoint]) -> str:
    buf = io.StringIO()
    write_curves_csv(rows, buf)
    return buf.getvalue()
