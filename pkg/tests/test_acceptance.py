"""Acceptance checks, one per criterion, each timed against its budget.

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line per
criterion.
"""

import math
import time
from contextlib import contextmanager

import numpy as np
import pytest

from mincycles.bounds import (
    entropy,
    mu_bounds,
    mu_g,
    mu_g_interior,
    rate_grid,
    solve_R0,
    theorem3_bounds,
    theorem4_check,
)
from mincycles.cycles import count_cycles_backtrack, count_cycles_codespace, f_multipath
from mincycles.eulerian import EXCEPTION, WITHIN_BOUND, theorem6_verdict, validate_witness
from mincycles.families import make_complete, make_Cpr, make_multipath, make_octahedron, make_tCp
from mincycles.gf2 import (
    BitWord,
    enumerate_codewords,
    is_minimal,
    is_minimal_bruteforce,
    make_code,
    minimal_report,
    random_code_experiment,
)
from mincycles.graph import cycle_code, is_cycle
from mincycles.harness import dense_samples, eulerian_samples, random_samples

from oracles import pairwise_intersecting


@contextmanager
def criterion(num, title, budget):
    start = time.perf_counter()
    status, note = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if elapsed >= budget:
            note = f" over budget {budget}s"
            raise AssertionError(f"criterion {num} took {elapsed:.2f}s, budget {budget}s")
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        print(f"\n[{status}] criterion {num:>2}: {title} ({elapsed:.2f}s){note}")


@pytest.fixture(scope="module")
def samples():
    return list(random_samples(300, seed=2024))


def cycles(g):
    return count_cycles_backtrack(g, by_length=False).total


def test_c01_tcp_closed_form():
    with criterion(1, "tC_p counts equal t^p + p C(t,2) on both engines", 5):
        for t in (2, 3, 4):
            for p in (3, 4, 5, 6):
                g = make_tCp(t, p)
                expected = t ** p + p * math.comb(t, 2)
                assert cycles(g) == expected, (t, p)
                assert count_cycles_codespace(g, by_length=False).total == expected, (t, p)


def test_c02_flagship_counts():
    with criterion(2, "2C_4 = 20, 2C_5 = 37, K_5 = 37", 1):
        for g, expected in ((make_tCp(2, 4), 20), (make_tCp(2, 5), 37), (make_complete(5), 37)):
            assert cycles(g) == expected
            assert count_cycles_codespace(g, by_length=False).total == expected


def test_c03_engine_equivalence(samples):
    with criterion(3, "backtrack = codespace = minimal codewords on 300 graphs", 20):
        for g in samples:
            assert g.p <= 7 and g.q <= g.p + 9 and g.is_connected()
            bt = cycles(g)
            cs = count_cycles_codespace(g, by_length=False).total
            mr = minimal_report(cycle_code(g), list_cap=0).minimal_count
            assert bt == cs == mr, g


def test_c04_theorem3_sandwich(samples):
    with criterion(4, "count <= q f(q-1,p) and the multipath witness reaches f(q-1,p)", 5):
        for g in samples:
            lo, hi = theorem3_bounds(g.p, g.q)
            assert lo == f_multipath(g.q - 1, g.p) and hi == g.q * lo
            assert cycles(g) <= hi
            witness = make_multipath(g.p, g.q - 1).add_edge(0, g.p - 1)
            assert (witness.p, witness.q) == (g.p, g.q)
            assert cycles(witness) >= lo


def test_c05_dense_graphs():
    with criterion(5, "dense graphs past the threshold stay within 2^(q-p)", 5):
        checked = 0
        for g in dense_samples(200, seed=55):
            if g.p not in (3, 4):
                continue
            t4 = theorem4_check(g.p, g.q)
            assert t4["applies"] and 2 ** (g.q - 2 * g.p) > (3 * g.p) ** 3
            assert cycles(g) <= t4["bound"] == 2 ** (g.q - g.p)
            checked += 1
        assert checked >= 100


def _random_code(rng):
    n = int(rng.integers(1, 15))
    k = int(rng.integers(1, min(n, 8) + 1))
    rows = [BitWord(int(x), n) for x in rng.integers(0, 2 ** n, size=k)]
    if not any(rows):
        return None
    return make_code(rows)


def test_c06_minimality_oracle():
    with criterion(6, "rank criterion = inclusion scan; M = 2^k-1 iff intersecting", 10):
        rng = np.random.default_rng(606)
        done = 0
        while done < 200:
            code = _random_code(rng)
            if code is None:
                continue
            words = [w for w in enumerate_codewords(code) if w]
            for w in words:
                assert is_minimal(code, w) == is_minimal_bruteforce(code, w)
            rep = minimal_report(code, list_cap=0)
            tuples = [tuple(w[i] for i in range(code.n)) for w in words]
            assert (rep.minimal_count == 2 ** code.k - 1) == pairwise_intersecting(tuples)
            assert rep.intersecting == pairwise_intersecting(tuples)
            done += 1


def test_c07_mu_g_curve():
    with criterion(7, "graphic exponent breakpoints, continuity and argmax", 1):
        for t in range(2, 11):
            assert abs(mu_g(1 - 1 / t) - math.log2(t) / t) < 1e-12
        for t in range(2, 10):
            left, right = 1 - 1 / t, 1 - 1 / (t + 1)
            assert abs(mu_g_interior(left, t) - math.log2(t) / t) < 1e-12
            assert abs(mu_g_interior(right, t) - math.log2(t + 1) / (t + 1)) < 1e-12
            # the neighbouring piece meets this one at the shared endpoint
            assert abs(mu_g_interior(right, t + 1) - mu_g_interior(right, t)) < 1e-12
        grid = rate_grid(0.001, 0.01, 0.99)
        assert grid[0] == 0.01 and grid[-1] == 0.99 and len(grid) == 981
        best = max(grid, key=mu_g)
        assert best in (0.666, 0.667)


def test_c08_R0():
    with criterion(8, "H(R0) = R0 with R0 in [0.76, 0.78]", 1):
        r0 = solve_R0()
        assert 0.76 <= r0 <= 0.78
        assert abs(entropy(r0) - r0) < 1e-8


def test_c09_envelope():
    with criterion(9, "graphic exponent and random lower bound under the envelope", 1):
        for R in rate_grid(0.001):
            cap = min(R, entropy(R))
            m = mu_g(R)
            assert m <= cap
            assert (m == cap) == (R <= 0.5)
            if R > 0.5:
                assert entropy(R) - 1 + R <= cap
                assert mu_bounds(R)["lower"] == entropy(R) - 1 + R


def test_c10_eulerian_verdicts():
    with criterion(10, "Eulerian verdicts and exception witnesses", 15):
        n = 0
        for g in eulerian_samples(100, seed=1010):
            assert g.p <= 7 and g.is_connected() and all(d % 2 == 0 for d in g.degrees())
            v = theorem6_verdict(g)
            assert v.cycle_count == cycles(g)
            if v.kind == WITHIN_BOUND:
                assert v.cycle_count <= 2 ** (g.q - g.p)
            else:
                assert not validate_witness(g, v.witness)
            n += 1
        assert n == 100
        for g in (make_tCp(2, 4), make_tCp(2, 5), make_Cpr(4, 3), make_octahedron()):
            v = theorem6_verdict(g)
            assert v.kind == EXCEPTION
            assert not validate_witness(g, v.witness)
            a, b = v.witness
            assert is_cycle(g, a) and is_cycle(g, b)
            assert (a ^ b).weight == g.q and not (a & b)


def test_c11_random_code_smoke():
    with criterion(11, "random [12,6] codes reach M >= 2^5", 10):
        summary = random_code_experiment(12, 6, 200, seed=0)
        assert summary["max_M"] >= 2 ** 5
        assert summary["max_M"] <= 2 ** 6 - 1
