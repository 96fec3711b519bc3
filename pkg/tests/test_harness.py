import io

import pytest

from mincycles.cycles import count_cycles_codespace
from mincycles.harness import (
    SUITES,
    read_census,
    sample_eulerian,
    sample_multigraph,
    search_4regular,
    verify,
    write_census,
)


def test_sample_multigraph_is_deterministic():
    a = sample_multigraph(5, 8, 1)
    assert a == sample_multigraph(5, 8, 1)
    assert (a.p, a.q) == (5, 8) and a.is_connected()
    assert all(u != v for u, v in a.edges)
    with pytest.raises(ValueError):
        sample_multigraph(5, 3, 0)


def test_sample_eulerian():
    for seed in range(30):
        g = sample_eulerian(2 + seed % 6, seed % 5 * 2, seed)
        assert g.is_connected()
        assert all(d % 2 == 0 for d in g.degrees())


def test_census_p5_is_k5():
    best, records = search_4regular(5, 4, seed=0)
    assert len(records) == 4
    assert all(r.cycle_count == 37 for r in records)
    assert best.reference_value == 37 and best.verified is True


def test_census_p6_stays_within_bound():
    best, records = search_4regular(6, 200, seed=3)
    assert max(r.cycle_count for r in records) == best.cycle_count <= 2 ** 7
    assert best.verified is True
    assert count_cycles_codespace(best.graph).total == best.cycle_count


def test_census_rejects_small_p():
    with pytest.raises(ValueError):
        search_4regular(4, 10, seed=0)


def test_census_csv_roundtrip():
    _, records = search_4regular(7, 5, seed=11)
    buf = io.StringIO()
    write_census(records, buf)
    buf.seek(0)
    back = read_census(buf)
    assert [(r.graph, r.cycle_count, r.trial) for r in back] == [(r.graph, r.cycle_count, r.trial) for r in records]


def test_census_sink_sees_every_record():
    seen = []
    _, records = search_4regular(6, 6, seed=2, sink=seen.append)
    assert seen == records


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suites_pass(suite):
    rep = verify(suite, 60, seed=5)
    assert rep.ok, rep.failures[:1]
    assert rep.checked >= 60


def test_verify_unknown_suite():
    with pytest.raises(ValueError):
        verify("nope", 1, 0)
