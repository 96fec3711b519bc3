import math
from fractions import Fraction

import pytest

from mincycles.bounds import (
    agrell_bound,
    bound_report,
    corollary1_bound,
    curves_csv,
    entropy,
    figure1_table,
    matroid_bound,
    mu_bounds,
    mu_g,
    mu_g_interior,
    rate_grid,
    solve_R0,
    theorem2_bound,
    theorem3_bounds,
    theorem4_check,
    trivial_bound,
)
from mincycles.cycles import f_multipath


def test_trivial_and_matroid():
    assert [trivial_bound(k) for k in (1, 2, 5)] == [1, 3, 31]
    assert matroid_bound(10, 7) == 10 * 9 * 8 * 7 // 24 == 210
    assert matroid_bound(6, 3) == 15
    assert matroid_bound(5, 1) == 1
    with pytest.raises(ValueError):
        matroid_bound(3, 4)


def test_agrell():
    # 2^k / (4n ((k-1)/n - 1/2)^2) with the arithmetic written out by hand
    assert agrell_bound(8, 6) == Fraction(64) / (32 * Fraction(1, 8) ** 2) == 128
    assert agrell_bound(10, 7) == 320
    assert agrell_bound(10, 6) is None
    # (k-1)/n - 1/2 = 3/22 -> 256 / (44 * 9/484) = 2816/9
    assert agrell_bound(11, 8) == Fraction(2816, 9)


def test_corollary1():
    assert corollary1_bound(10, 25) == 65536
    assert corollary1_bound(4, 9) == 576
    assert corollary1_bound(4, 8) is None
    assert corollary1_bound(4, 11) == Fraction(11 * 2 ** 8, 9)


def test_theorem2():
    assert theorem2_bound(4, 7) == 56
    assert theorem2_bound(3, 5) == 20
    assert theorem2_bound(4, 4) == 4
    assert theorem2_bound(5, 3) == 0  # fewer than p-1 edges: no cycles possible


def test_theorem2_equals_q_times_f():
    for p in range(2, 51):
        for q in range(max(p - 1, 1), 4 * p + 1):
            assert theorem2_bound(p, q) == q * f_multipath(q - 1, p)


def test_theorem3():
    assert theorem3_bounds(4, 7) == (8, 56)
    assert theorem3_bounds(3, 3) == (1, 3)
    assert theorem3_bounds(2, 3) == (2, 6)


def test_theorem4_examples():
    assert theorem4_check(10, 35) == {"applies": True, "bound": 2 ** 25}
    assert not theorem4_check(10, 34)["applies"]
    assert theorem4_check(2, 12)["applies"]
    assert not theorem4_check(2, 11)["applies"]
    assert not theorem4_check(5, 3)["applies"]


def test_theorem4_integer_test_matches_float_threshold():
    for p in range(2, 61):
        for q in range(0, 2 * p + 60):
            threshold = 2 * p + 3 * math.log2(3 * p)
            if abs(q - threshold) < 1e-9:
                continue
            assert theorem4_check(p, q)["applies"] == (q > threshold)


def test_bound_report():
    rep = bound_report(p=4, q=7)
    assert (rep.n, rep.k, rep.trivial, rep.matroid) == (7, 4, 15, 35)
    assert (rep.theorem3_lower, rep.theorem3_upper) == (8, 56)
    assert rep.theorem2 == rep.theorem3_upper
    assert dict(rep.rows())["theorem3"] == "(8, 56)"
    rep = bound_report(n=10, k=7)
    assert rep.agrell == 320 and rep.p is None
    assert dict(bound_report(n=11, k=8).rows())["agrell"].startswith("2816/9 ")
    with pytest.raises(ValueError):
        bound_report(p=4)
    with pytest.raises(ValueError):
        bound_report(p=4, q=3)


def test_entropy():
    assert entropy(0.5) == 1
    assert entropy(0) == entropy(1) == 0
    assert entropy(0.25) == pytest.approx(0.811278, abs=1e-6)
    assert entropy(0.25) == pytest.approx(entropy(0.75), abs=1e-15)
    for i in range(1001):
        x = i / 1000
        assert abs(entropy(x) - entropy(1 - x)) < 1e-12
    with pytest.raises(ValueError):
        entropy(1.5)


def test_mu_bounds():
    assert mu_bounds(0.4) == {"upper": 0.4, "lower": 0.4}
    b = mu_bounds(0.75)
    assert b["upper"] == 0.75
    assert b["lower"] == pytest.approx(0.561278, abs=1e-6)
    assert mu_bounds(0.5) == {"upper": 0.5, "lower": 0.5}
    with pytest.raises(ValueError):
        mu_bounds(1.0)


def test_mu_g_examples():
    assert mu_g(0.4) == 0.4
    assert mu_g(0.75) == pytest.approx(0.5, abs=1e-12)
    assert mu_g(0.7) == pytest.approx(0.516993, abs=1e-6)
    with pytest.raises(ValueError):
        mu_g(0.0)


def test_mu_g_interior_meets_breakpoints():
    for t in range(2, 11):
        for s in (t, t + 1):
            R = 1 - 1 / s
            assert abs(mu_g_interior(R, t) - (-(1 - R) * math.log2(1 - R))) < 1e-12


def test_mu_g_below_envelope():
    for R in rate_grid(0.001):
        cap = min(R, entropy(R))
        if R <= 0.5:
            assert mu_g(R) == cap
        else:
            assert mu_g(R) < cap


def test_solve_R0():
    r0 = solve_R0()
    assert 0.76 <= r0 <= 0.78
    assert abs(entropy(r0) - r0) < 1e-8


def test_figure1_table_and_csv():
    (row,) = figure1_table([0.5])
    assert (row.R, row.trivial_upper, row.matroid_upper, row.random_lower, row.mu_g) == (0.5, 0.5, 1.0, 0.5, 0.5)
    rows = figure1_table(rate_grid(0.01))
    assert len(rows) == 99
    assert all(a.R < b.R for a, b in zip(rows, rows[1:]))
    lines = curves_csv(rows).splitlines()
    assert lines[0] == "R,trivial_upper,matroid_upper,random_lower,mu_g"
    assert len(lines) == 100
    assert lines[1].split(",")[2] == f"{entropy(0.01):.9g}"
    with pytest.raises(ValueError):
        figure1_table([0.2, 1.0])
