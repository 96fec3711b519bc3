"""Seeded random samplers, the 4-regular census, and the theorem verification suites."""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np

from . import bounds
from .cycles import count_cycles_backtrack, count_cycles_codespace, count_paths, f_multipath
from .eulerian import EXCEPTION, complement_cycle_pair, theorem6_verdict, validate_witness
from .families import (
    make_complete,
    make_Cpr,
    make_GpRr,
    make_multipath,
    make_octahedron,
    make_tCp,
    make_theta,
)
from .gf2 import minimal_report
from .graph import Multigraph, cycle_code, format_graph, parse_graph

__all__ = [
    "sample_multigraph",
    "sample_eulerian",
    "sample_two_hamiltonian",
    "random_4regular",
    "CensusRecord",
    "search_4regular",
    "read_census",
    "VerifyReport",
    "SUITES",
    "verify",
]

log = logging.getLogger(__name__)


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def _streams(seed: int, n: int) -> List[np.random.Generator]:
    """One independent stream per sample index, derived from ``seed``."""
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(n)]


def sample_multigraph(p: int, q: int, seed) -> Multigraph:
    """Random connected loop-free multigraph: random spanning tree plus random chords.

    Edge order is shuffled so edge ids carry no structure.
    """
    if p < 1 or q < p - 1:
        raise ValueError(f"cannot build a connected graph with p={p}, q={q}")
    if p == 1 and q > 0:
        raise ValueError("a single vertex admits no loop-free edges")
    rng = seed if isinstance(seed, np.random.Generator) else _rng(seed)
    order = rng.permutation(p)
    edges = []
    for i in range(1, p):
        edges.append((int(order[i]), int(order[rng.integers(i)])))
    for _ in range(q - p + 1):
        u, v = rng.choice(p, size=2, replace=False)
        edges.append((int(u), int(v)))
    perm = rng.permutation(len(edges))
    return Multigraph(p, tuple(edges[i] for i in perm))


def sample_eulerian(p: int, extra: int, seed) -> Multigraph:
    """Connected Eulerian multigraph from a random closed walk visiting every vertex.

    The walk has ``p + extra`` steps, so ``q = p + extra``.
    """
    if p < 2:
        raise ValueError("need p >= 2")
    if p == 2 and extra % 2:
        raise ValueError("a closed walk on two vertices has even length")
    if p == 2:
        return make_theta(2 + extra)
    rng = seed if isinstance(seed, np.random.Generator) else _rng(seed)
    while True:
        walk = [int(v) for v in rng.permutation(p)]
        for _ in range(extra):
            walk.insert(int(rng.integers(len(walk) + 1)), int(rng.integers(p)))
        n = len(walk)
        if all(walk[i] != walk[(i + 1) % n] for i in range(n)):
            return Multigraph(p, tuple((walk[i], walk[(i + 1) % n]) for i in range(n)))


def sample_two_hamiltonian(p: int, subdivisions: int, seed) -> Multigraph:
    """Union of two random Hamiltonian cycles on p vertices, then random edge subdivisions."""
    rng = seed if isinstance(seed, np.random.Generator) else _rng(seed)
    edges = []
    for _ in range(2):
        tour = [int(v) for v in rng.permutation(p)]
        edges += [(tour[i], tour[(i + 1) % p]) for i in range(p)]
    n_vertices = p
    for _ in range(subdivisions):
        i = int(rng.integers(len(edges)))
        u, v = edges[i]
        edges[i] = (u, n_vertices)
        edges.append((n_vertices, v))
        n_vertices += 1
    perm = rng.permutation(len(edges))
    return Multigraph(n_vertices, tuple(edges[i] for i in perm))


def random_4regular(p: int, rng: np.random.Generator, max_tries: int = 100000) -> Multigraph:
    """Simple 4-regular graph from the pairing model, rejecting loops and repeated edges."""
    if p < 5:
        raise ValueError(f"no simple 4-regular graph on p={p} < 5 vertices")
    points = np.repeat(np.arange(p), 4)
    for _ in range(max_tries):
        pairs = rng.permutation(points).reshape(-1, 2)
        if np.any(pairs[:, 0] == pairs[:, 1]):
            continue
        keys = {(int(min(a, b)), int(max(a, b))) for a, b in pairs}
        if len(keys) == 2 * p:
            return Multigraph(p, tuple(sorted(keys)))
    raise RuntimeError(f"pairing model found no simple graph in {max_tries} tries")


@dataclass
class CensusRecord:
    p: int
    trial: int
    seed: int
    graph: Multigraph
    cycle_count: int
    verified: Optional[bool] = None

    @property
    def reference_value(self) -> int:
        return 2 ** self.p + self.p

    def csv_row(self) -> List:
        edges = ";".join(f"{u}-{v}" for u, v in self.graph.edges)
        return [self.p, self.seed, self.trial, self.cycle_count, self.reference_value,
                self.cycle_count - self.reference_value,
                "" if self.verified is None else int(self.verified), edges]


CENSUS_HEADER = ["p", "seed", "trial", "cycle_count", "reference_value", "excess", "verified", "edges"]


def search_4regular(p: int, trials: int, seed: int, verify_cap: int = 24,
                    sink: Optional[Callable[[CensusRecord], None]] = None) -> Tuple[CensusRecord, List[CensusRecord]]:
    """Sample simple 4-regular graphs and track the one with the most cycles.

    Every record is handed to ``sink`` as it is produced. The best record is
    recounted by the codespace engine when its cycle-space dimension is at most
    ``verify_cap``.
    """
    if p < 5:
        raise ValueError(f"no simple 4-regular graph on p={p} < 5 vertices")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    records = []
    best = None
    for trial, rng in enumerate(_streams(seed, trials)):
        g = random_4regular(p, rng)
        rec = CensusRecord(p, trial, seed, g, count_cycles_backtrack(g, by_length=False).total)
        records.append(rec)
        if sink is not None:
            sink(rec)
        if best is None or rec.cycle_count > best.cycle_count:
            best = rec
    if best.graph.q - p + 1 <= verify_cap:
        best.verified = count_cycles_codespace(best.graph, by_length=False, cap=verify_cap).total == best.cycle_count
    return best, records


def write_census(records, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CENSUS_HEADER)
    for r in records:
        w.writerow(r.csv_row())


def read_census(fh) -> List[CensusRecord]:
    out = []
    for row in csv.DictReader(fh):
        p = int(row["p"])
        edges = [tuple(int(x) for x in e.split("-")) for e in row["edges"].split(";")]
        g = parse_graph(f"{p} {len(edges)}\n" + "\n".join(f"{u} {v}" for u, v in edges))
        verified = None if row["verified"] == "" else bool(int(row["verified"]))
        out.append(CensusRecord(p, int(row["trial"]), int(row["seed"]), g, int(row["cycle_count"]), verified))
    return out


# --- verification suites -------------------------------------------------


@dataclass
class VerifyReport:
    suite: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, g: Multigraph, msg: str):
        self.failures.append(f"{msg}\n{format_graph(g)}")

    def summary(self) -> str:
        status = "pass" if self.ok else "FAIL"
        return f"{self.suite}: {status} ({self.checked} graphs checked, {len(self.failures)} counterexamples)"


def random_samples(samples: int, seed: int, max_p: int = 7, max_extra: int = 9) -> Iterator[Multigraph]:
    """Connected multigraphs with ``2 <= p <= max_p`` and ``p <= q <= p + max_extra``."""
    for rng in _streams(seed, samples):
        p = int(rng.integers(2, max_p + 1))
        q = int(rng.integers(p, p + max_extra + 1))
        yield sample_multigraph(p, q, rng)


def named_families() -> List[Multigraph]:
    out = [make_theta(q) for q in (2, 3, 4, 5)]
    out += [make_tCp(t, p) for t in (1, 2, 3) for p in (3, 4, 5)]
    out += [make_Cpr(p, r) for p in (3, 4) for r in (0, 1, 2, 3)]
    out += [make_GpRr(p, t, r) for p in (3, 4, 5) for t in (2, 3) for r in range(p)]
    out += [make_multipath(p, q).add_edge(0, p - 1) for p, q in ((3, 4), (4, 6), (5, 9))]
    return out


def eulerian_families() -> List[Multigraph]:
    out = [make_tCp(t, p) for t in (1, 2, 4) for p in (3, 4, 5)]
    out += [make_Cpr(p, r) for p in (3, 4) for r in (1, 3)]
    out += [make_theta(4), make_theta(6), make_octahedron(), make_complete(5)]
    return out


def _check_engines(rep: VerifyReport, g: Multigraph):
    bt = count_cycles_backtrack(g).total
    cs = count_cycles_codespace(g).total
    mr = minimal_report(cycle_code(g), list_cap=0).minimal_count
    if not bt == cs == mr:
        rep.fail(g, f"engines disagree: backtrack={bt} codespace={cs} minimal_report={mr}")


def _check_lemma1(rep: VerifyReport, g: Multigraph):
    f = f_multipath(g.q, g.p)
    for x in range(g.p):
        for y in range(x + 1, g.p):
            n = count_paths(g, x, y)
            if n > f:
                rep.fail(g, f"{n} paths between {x} and {y} exceed f(q,p)={f}")


def _check_thm2(rep: VerifyReport, g: Multigraph):
    b = bounds.theorem2_bound(g.p, g.q)
    if b != g.q * f_multipath(g.q - 1, g.p):
        rep.fail(g, f"theorem2 bound {b} != q f(q-1,p)")
    c = count_cycles_backtrack(g, by_length=False).total
    if c > b:
        rep.fail(g, f"{c} cycles exceed theorem2 bound {b}")


def _check_thm3(rep: VerifyReport, g: Multigraph):
    lo, hi = bounds.theorem3_bounds(g.p, g.q)
    c = count_cycles_backtrack(g, by_length=False).total
    if c > hi:
        rep.fail(g, f"{c} cycles exceed q f(q-1,p) = {hi}")
    witness = make_multipath(g.p, g.q - 1).add_edge(0, g.p - 1)
    wc = count_cycles_backtrack(witness, by_length=False).total
    if wc < lo:
        rep.fail(witness, f"multipath construction has {wc} < f(q-1,p) = {lo} cycles")


def _check_thm4(rep: VerifyReport, g: Multigraph):
    t4 = bounds.theorem4_check(g.p, g.q)
    if not t4["applies"]:
        return
    c = count_cycles_backtrack(g, by_length=False).total
    if c > t4["bound"]:
        rep.fail(g, f"{c} cycles exceed 2^(q-p) = {t4['bound']} above the density threshold")


def dense_samples(samples: int, seed: int) -> Iterator[Multigraph]:
    """Graphs just past the density threshold, at p in {2, 3, 4}."""
    for rng in _streams(seed, samples):
        p = int(rng.choice([2, 3, 4]))
        q0 = 2 * p
        while not bounds.theorem4_check(p, q0)["applies"]:
            q0 += 1
        q = q0 + int(rng.integers(0, 3))
        yield sample_multigraph(p, q, rng)


def eulerian_samples(samples: int, seed: int, max_p: int = 7) -> Iterator[Multigraph]:
    """Mix of closed-walk Eulerian graphs and subdivided two-Hamiltonian unions."""
    for i, rng in enumerate(_streams(seed, samples)):
        if i % 4 == 3:
            p = int(rng.integers(2, 6))
            yield sample_two_hamiltonian(p, int(rng.integers(0, 3)), rng)
        else:
            p = int(rng.integers(2, max_p + 1))
            extra = int(rng.integers(0, 9))
            if p == 2 and extra % 2:
                extra += 1
            yield sample_eulerian(p, extra, rng)


def _check_thm6(rep: VerifyReport, g: Multigraph):
    v = theorem6_verdict(g)
    if v.kind != EXCEPTION and v.cycle_count > v.bound:
        rep.fail(g, f"WithinBound verdict but {v.cycle_count} cycles > 2^(q-p) = {v.bound}")
    if v.kind == EXCEPTION:
        for problem in validate_witness(g, v.witness):
            rep.fail(g, f"bad exception witness: {problem}")
    pair = complement_cycle_pair(g)
    if (pair is not None) != (v.kind == EXCEPTION):
        rep.fail(g, f"verdict {v.kind} disagrees with complement search ({pair is not None})")


SUITES: Dict[str, Tuple[Callable, Callable]] = {
    "engines": (_check_engines, random_samples),
    "lemma1": (_check_lemma1, random_samples),
    "thm2": (_check_thm2, random_samples),
    "thm3": (_check_thm3, random_samples),
    "thm4": (_check_thm4, dense_samples),
    "thm6": (_check_thm6, eulerian_samples),
}


def verify(suite: str, samples: int, seed: int, families: bool = True) -> VerifyReport:
    """Run one suite over seeded random samples (plus the named families where meaningful)."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    check, sampler = SUITES[suite]
    rep = VerifyReport(suite)
    graphs = list(sampler(samples, seed))
    if families and sampler is random_samples:
        graphs += named_families()
    elif families and suite == "thm6":
        graphs += eulerian_families()
    for g in graphs:
        check(rep, g)
        rep.checked += 1
    log.info(rep.summary())
    return rep
