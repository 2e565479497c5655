import io
import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cfpoly.errors import InvalidArgumentError
from cfpoly.hypergraphs import (
    HypergraphFamily,
    cycle,
    disjoint_paths,
    enum_hyperedges,
    fc,
    gale_is_facet,
    hyperedge_count,
    matching,
    read_hyperedges,
    two_intervals,
    write_hyperedges,
)
from oracles import (
    disjoint_edge_unions,
    gale_facets_bruteforce,
    path_pairs_bruteforce,
    two_interval_bruteforce,
)


@pytest.mark.parametrize(
    "S, expected",
    [({1, 2, 3, 4}, True), ({2, 3, 5, 6}, True), ({2, 3, 4, 6}, False), ({1, 2, 4, 5}, True), ({3, 4, 9, 10}, True)],
)
def test_gale_examples(S, expected):
    assert gale_is_facet(S, 4, 10) is expected


@pytest.mark.parametrize("S", [{1, 2, 3}, {0, 1, 2, 3}, {8, 9, 10, 11}])
def test_gale_rejects_malformed_sets(S):
    with pytest.raises(InvalidArgumentError):
        gale_is_facet(S, 4, 10)


def test_simplex_boundary():
    assert list(enum_hyperedges(fc(3, 4))) == list(itertools.combinations(range(1, 5), 3))
    assert hyperedge_count(fc(3, 4)) == 4


def test_frozen_counts(small_values):
    counts = small_values["counts"]
    assert hyperedge_count(fc(4, 10)) == counts["FC(4,10)"] == 35
    assert hyperedge_count(disjoint_paths(2, 2, 8)) == counts["D(2,2,8)"]
    assert hyperedge_count(disjoint_paths(3, 2, 10)) == counts["D(3,2,10)"]
    assert hyperedge_count(two_intervals(4)) == counts["I2(4)"]
    assert hyperedge_count(two_intervals(7)) == counts["I2(7)"]


@pytest.mark.parametrize("d", range(2, 9))
def test_fc_matches_bruteforce_gale(d):
    for n in range(d + 1, 13):
        got = list(enum_hyperedges(fc(d, n)))
        assert got == sorted(gale_facets_bruteforce(d, n)), (d, n)
        assert hyperedge_count(fc(d, n)) == len(got)


@pytest.mark.parametrize("d", [2, 4, 6, 8])
def test_even_facets_are_disjoint_edge_unions(d):
    for n in range(d + 1, 15):
        assert set(enum_hyperedges(fc(d, n))) == disjoint_edge_unions(d, n)


def test_disjoint_paths_and_intervals_match_bruteforce():
    for r in (2, 3):
        for n in range(2 * r + 2, 14):
            assert list(enum_hyperedges(disjoint_paths(r, 2, n))) == sorted(path_pairs_bruteforce(r, n))
    for n in range(3, 12):
        assert list(enum_hyperedges(two_intervals(n))) == sorted(two_interval_bruteforce(n))


def test_d2m_equals_fc2m():
    for n in range(9, 13):
        assert list(enum_hyperedges(disjoint_paths(2, 2, n))) == list(enum_hyperedges(fc(4, n)))
        assert list(enum_hyperedges(disjoint_paths(2, 3, n))) == list(enum_hyperedges(fc(6, n)))


def test_cycle_and_matching():
    assert list(enum_hyperedges(cycle(4))) == [(1, 2), (1, 4), (2, 3), (3, 4)]
    assert list(enum_hyperedges(matching(6))) == [(1, 2), (3, 4), (5, 6)]


@pytest.mark.parametrize(
    "make",
    [
        lambda: fc(4, 4),
        lambda: fc(1, 5),
        lambda: disjoint_paths(2, 2, 5),
        lambda: two_intervals(2),
        lambda: cycle(2),
        lambda: HypergraphFamily("nope", 5),
    ],
)
def test_preconditions(make):
    with pytest.raises(InvalidArgumentError):
        make()


def test_enumeration_is_lazy():
    stream = enum_hyperedges(fc(10, 200))
    assert next(stream) == tuple(range(1, 11))


def test_dump_round_trip():
    edges = list(enum_hyperedges(fc(4, 8)))
    buf = io.StringIO()
    assert write_hyperedges(edges, buf) == len(edges)
    assert buf.getvalue().splitlines()[0] == "1 2 3 4"
    buf.seek(0)
    assert list(read_hyperedges(buf)) == edges


@given(st.integers(2, 9).flatmap(lambda d: st.tuples(st.just(d), st.integers(d + 1, d + 8))))
def test_hyperedge_shape(dn):
    d, n = dn
    prev = None
    for e in enum_hyperedges(fc(d, n)):
        assert len(e) == d and list(e) == sorted(set(e)) and 1 <= e[0] and e[-1] <= n
        assert prev is None or prev < e
        prev = e
        # contains an interval of size 2
        assert d < 3 or any(b == a + 1 for a, b in zip(e, e[1:]))
        # odd d: every facet touches an end
        assert d % 2 == 0 or 1 in e or n in e


@given(st.integers(3, 10), st.integers(0, 5))
def test_two_interval_monotone(n, extra):
    bigger = set(enum_hyperedges(two_intervals(n + extra)))
    assert set(enum_hyperedges(two_intervals(n))) <= bigger


@given(st.integers(2, 9).flatmap(lambda d: st.tuples(st.just(d), st.integers(d + 1, 16))))
def test_closed_form_count(dn):
    d, n = dn
    assert hyperedge_count(fc(d, n)) == sum(1 for _ in enum_hyperedges(fc(d, n)))
