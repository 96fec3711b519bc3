"""Binary linear codes over GF(2): construction, enumeration and minimal codewords.

Words are packed into Python ints with coordinate 0 in the least significant
bit. The textual form of a word is always the 0/1 string with coordinate 0
first, so the packing never shows up in files or output.

Echelon convention: a row's pivot is its *highest* set coordinate, and the
generator is fully reduced (each pivot column holds a single 1). Rows are kept
sorted by pivot.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

__all__ = [
    "DEFAULT_CAP",
    "BitWord",
    "LinearCode",
    "MinimalReport",
    "CodeError",
    "CapExceeded",
    "make_code",
    "enumerate_codewords",
    "support",
    "is_minimal",
    "is_minimal_bruteforce",
    "minimal_report",
    "decompose",
    "random_code_experiment",
    "parse_code",
    "format_code",
]

log = logging.getLogger(__name__)

DEFAULT_CAP = 30


class CodeError(ValueError):
    pass


class CapExceeded(CodeError):
    pass


@dataclass(frozen=True)
class BitWord:
    bits: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise CodeError(f"word length must be positive, got {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise CodeError(f"bits do not fit in length {self.length}")

    @classmethod
    def from_string(cls, s: str) -> "BitWord":
        s = "".join(s.split())
        if not s or set(s) - {"0", "1"}:
            raise CodeError(f"not a 0/1 string: {s!r}")
        return cls(int(s[::-1], 2), len(s))

    @classmethod
    def from_indices(cls, indices: Iterable[int], length: int) -> "BitWord":
        bits = 0
        for i in indices:
            if not 0 <= i < length:
                raise CodeError(f"index {i} out of range for length {length}")
            bits |= 1 << i
        return cls(bits, length)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.length}b")[::-1]

    def __xor__(self, other: "BitWord") -> "BitWord":
        self._check(other)
        return BitWord(self.bits ^ other.bits, self.length)

    def __and__(self, other: "BitWord") -> "BitWord":
        self._check(other)
        return BitWord(self.bits & other.bits, self.length)

    def __invert__(self) -> "BitWord":
        return BitWord(self.bits ^ ((1 << self.length) - 1), self.length)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    @property
    def weight(self) -> int:
        return bin(self.bits).count("1")

    def _check(self, other: "BitWord"):
        if self.length != other.length:
            raise CodeError(f"length mismatch: {self.length} vs {other.length}")


def support(w: BitWord) -> frozenset:
    """Coordinates where ``w`` is 1."""
    out = []
    bits = w.bits
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return frozenset(out)


def _reduce(rows: Iterable[int]) -> Tuple[List[int], int]:
    """Fully reduced echelon basis of the span of ``rows`` plus the number of dependent rows."""
    pivots = {}  # pivot bit position -> row
    dropped = 0
    for r in rows:
        for piv in sorted(pivots, reverse=True):
            if (r >> piv) & 1:
                r ^= pivots[piv]
        if not r:
            dropped += 1
            continue
        piv = r.bit_length() - 1
        for other in pivots:
            if (pivots[other] >> piv) & 1:
                pivots[other] ^= r
        pivots[piv] = r
    return [pivots[piv] for piv in sorted(pivots)], dropped


def _rank(rows: Iterable[int]) -> int:
    basis = {}
    for r in rows:
        while r:
            piv = r.bit_length() - 1
            if piv not in basis:
                basis[piv] = r
                break
            r ^= basis[piv]
    return len(basis)


@dataclass(frozen=True)
class LinearCode:
    """An ``[n, k]`` binary code with a fully reduced generator (rows as packed ints)."""

    n: int
    rows: Tuple[int, ...]
    cap: int = field(default=DEFAULT_CAP, compare=False)

    def __post_init__(self):
        if not 1 <= len(self.rows) <= self.n:
            raise CodeError(f"need 1 <= k <= n, got k={len(self.rows)}, n={self.n}")
        reduced, dropped = _reduce(self.rows)
        if dropped or tuple(reduced) != tuple(self.rows):
            raise CodeError("rows must be a reduced echelon basis; build codes with make_code")

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def generator(self) -> List[BitWord]:
        return [BitWord(r, self.n) for r in self.rows]

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(r.bit_length() - 1 for r in self.rows)

    def contains(self, w: BitWord) -> bool:
        if w.length != self.n:
            return False
        bits = w.bits
        for r in reversed(self.rows):
            if (bits >> (r.bit_length() - 1)) & 1:
                bits ^= r
        return bits == 0

    def encode(self, message: int) -> BitWord:
        """Codeword for message bits (bit i selects generator row i)."""
        bits = 0
        for i, r in enumerate(self.rows):
            if (message >> i) & 1:
                bits ^= r
        return BitWord(bits, self.n)

    def __str__(self) -> str:
        return f"[{self.n},{self.k}] code"


@dataclass(frozen=True)
class MinimalReport:
    total_codewords: int
    minimal_count: int
    intersecting: bool
    minimal_words: Optional[List[BitWord]] = None


def make_code(rows: Sequence, cap: int = DEFAULT_CAP) -> LinearCode:
    """Code spanned by ``rows`` (BitWords or 0/1 strings). Dependent rows are dropped."""
    if not rows:
        raise CodeError("at least one generator row is required")
    words = [BitWord.from_string(r) if isinstance(r, str) else r for r in rows]
    n = words[0].length
    if any(w.length != n for w in words):
        raise CodeError("generator rows have inconsistent lengths")
    reduced, dropped = _reduce(w.bits for w in words)
    if not reduced:
        raise CodeError("rows span only the zero word (k = 0)")
    if dropped:
        log.warning("dropped %d dependent generator row(s); k=%d", dropped, len(reduced))
    return LinearCode(n, tuple(reduced), cap)


def _check_cap(code: LinearCode, cap: Optional[int]):
    cap = code.cap if cap is None else cap
    if code.k > cap:
        raise CapExceeded(f"k={code.k} exceeds the exhaustive cap of {cap}")


def enumerate_codewords(code: LinearCode, cap: Optional[int] = None) -> Iterator[BitWord]:
    """All ``2^k`` codewords in Gray-code message order, zero word first."""
    _check_cap(code, cap)
    for bits in _gray_words(code.rows):
        yield BitWord(bits, code.n)


def _gray_words(rows: Sequence[int]) -> Iterator[int]:
    w = 0
    yield w
    for i in range(1, 1 << len(rows)):
        w ^= rows[(i & -i).bit_length() - 1]
        yield w


def _subcode_basis(rows: Sequence[int], mask: int) -> List[int]:
    """Basis of ``{x in C : supp(x) <= mask}`` (kernel of projection off ``mask``)."""
    outside = ~mask
    pivots = {}  # pivot of projected part -> (projected, full)
    kernel = []
    for r in rows:
        proj, full = r & outside, r
        while proj:
            piv = proj.bit_length() - 1
            if piv not in pivots:
                pivots[piv] = (proj, full)
                break
            p2, f2 = pivots[piv]
            proj ^= p2
            full ^= f2
        else:
            kernel.append(full)
    return kernel


def _check_codeword(code: LinearCode, w: BitWord):
    if w.length != code.n:
        raise CodeError(f"word length {w.length} does not match code length {code.n}")
    if not w:
        raise CodeError("the zero word is not a candidate")
    if not code.contains(w):
        raise CodeError(f"{w} is not a codeword")


def _is_minimal_bits(rows: Sequence[int], bits: int) -> bool:
    # dim of subcode supported inside supp(w) = k - rank(columns outside supp(w))
    outside = ~bits
    return len(rows) - _rank(r & outside for r in rows) == 1


def is_minimal(code: LinearCode, w: BitWord) -> bool:
    """True iff no other nonzero codeword has support strictly inside ``supp(w)``."""
    _check_codeword(code, w)
    return _is_minimal_bits(code.rows, w.bits)


def is_minimal_bruteforce(code: LinearCode, w: BitWord) -> bool:
    """Support-inclusion scan over every codeword; the oracle for :func:`is_minimal`."""
    _check_codeword(code, w)
    for x in _gray_words(code.rows):
        if x and x != w.bits and x & ~w.bits == 0:
            return False
    return True


def minimal_report(code: LinearCode, list_cap: int = 12, cap: Optional[int] = None) -> MinimalReport:
    """Count minimal codewords; the words themselves are kept only when ``k <= list_cap``."""
    _check_cap(code, cap)
    keep = code.k <= list_cap
    words = [] if keep else None
    count = 0
    for bits in _gray_words(code.rows):
        if bits and _is_minimal_bits(code.rows, bits):
            count += 1
            if keep:
                words.append(BitWord(bits, code.n))
    total = (1 << code.k) - 1
    return MinimalReport(total, count, count == total, words)


def decompose(code: LinearCode, w: BitWord) -> List[BitWord]:
    """Split ``w`` into minimal codewords with pairwise disjoint supports.

    Each step takes a nonzero codeword inside the residual support and shrinks
    it until minimal: if ``x`` is not minimal, the subcode under ``supp(x)`` has
    dimension >= 2 and some basis vector differs from ``x``, hence has strictly
    smaller support.
    """
    _check_codeword(code, w)
    rest = w.bits
    parts = []
    while rest:
        x = _subcode_basis(code.rows, rest)[0]
        while True:
            below = _subcode_basis(code.rows, x)
            if len(below) == 1:
                break
            x = next(b for b in below if b != x)
        parts.append(BitWord(x, code.n))
        rest ^= x
    return parts


def _random_full_rank(rng: np.random.Generator, n: int, k: int) -> List[int]:
    while True:
        mat = rng.integers(0, 2, size=(k, n))
        rows = [int("".join(map(str, row[::-1])), 2) for row in mat]
        if _rank(rows) == k:
            return rows


def random_code_experiment(n: int, k: int, trials: int, seed: int, cap: int = DEFAULT_CAP) -> dict:
    """Sample uniform full-rank ``k x n`` generators and summarise M(C).

    Trial ``i`` draws from its own child stream of ``seed``, so results do not
    depend on evaluation order.
    """
    if not 1 <= k <= n:
        raise CodeError(f"need 1 <= k <= n, got n={n}, k={k}")
    if trials < 1:
        raise CodeError("trials must be >= 1")
    if k > cap:
        raise CapExceeded(f"k={k} exceeds the exhaustive cap of {cap}")
    counts = []
    best = None
    for child in np.random.SeedSequence(seed).spawn(trials):
        rows = _random_full_rank(np.random.default_rng(child), n, k)
        code = make_code([BitWord(r, n) for r in rows], cap=cap)
        m = minimal_report(code, list_cap=0).minimal_count
        counts.append(m)
        if best is None or m > best[0]:
            best = (m, code)
    return {
        "n": n,
        "k": k,
        "trials": trials,
        "seed": seed,
        "max_M": best[0],
        "mean_M": Fraction(sum(counts), len(counts)),
        "argmax_generator": [str(r) for r in best[1].generator],
    }


def parse_code(text: str, cap: int = DEFAULT_CAP) -> LinearCode:
    """Read the generator-matrix format: ``n k`` header, then k rows of n bits."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise CodeError("empty generator file")
    head = lines[0].split()
    if len(head) != 2:
        raise CodeError(f"bad header line {lines[0]!r}; expected 'n k'")
    n, k = int(head[0]), int(head[1])
    body = ["".join(ln.split()) for ln in lines[1:]]
    if len(body) != k:
        raise CodeError(f"header declares k={k} rows but {len(body)} found")
    for row in body:
        if len(row) != n:
            raise CodeError(f"row {row!r} has length {len(row)}, expected {n}")
    return make_code(body, cap=cap)


def format_code(code: LinearCode) -> str:
    return "\n".join([f"{code.n} {code.k}"] + [str(r) for r in code.generator]) + "\n"
