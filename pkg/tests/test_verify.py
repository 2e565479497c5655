import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cfpoly.errors import InvalidArgumentError, ResourceLimitError
from cfpoly.hypergraphs import disjoint_paths, enum_hyperedges, fc, two_intervals
from cfpoly.verify import (
    Coloring,
    SearchBudget,
    cf_chromatic_exact,
    cf_coloring_exact,
    chi_exact,
    find_cf_violation,
    find_proper_violation,
    is_conflict_free,
    is_conflict_free_bruteforce,
    is_proper,
    spot_check_cf,
)
from oracles import gale_facets_bruteforce, is_cf, min_colors_bruteforce

K5_TOUR = Coloring((0, 1, 2, 0, 3, 1, 4, 2, 3, 4))


def parity(n):
    return Coloring(tuple((v - 1) % 2 for v in range(1, n + 1)))


def test_coloring_validation_and_relabel():
    with pytest.raises(InvalidArgumentError):
        Coloring((0, 2))
    with pytest.raises(InvalidArgumentError):
        Coloring(())
    phi = Coloring.from_labels("bab c".replace(" ", ""))
    assert phi.colors == (0, 1, 0, 2) and phi.c == 3 and phi[2] == 1


def test_coloring_json_round_trip():
    phi = Coloring((0, 1, 0, 2), {"kind": "test"})
    data = json.loads(phi.to_json())
    assert data == {"n": 4, "colors": [0, 1, 0, 2], "c": 3, "construction": {"kind": "test"}}
    assert Coloring.from_json(phi.to_json()) == phi
    with pytest.raises(InvalidArgumentError):
        Coloring.from_dict({"n": 5, "colors": [0, 1], "c": 2})


def test_restrict_relabels():
    assert Coloring((0, 1, 2, 1, 0)).restrict(3).colors == (0, 1, 2)
    assert Coloring((1, 0, 0)).restrict(2).colors == (0, 1)


def test_proper_examples():
    assert is_proper(fc(3, 10), parity(10))
    assert not is_proper(fc(2, 7), parity(7))
    assert is_proper(fc(5, 9), Coloring(tuple(range(9))))


def test_cf_examples():
    assert is_conflict_free(fc(4, 10), K5_TOUR)
    assert find_cf_violation(fc(4, 10), Coloring((0,) * 10)) == (1, 2, 3, 4)
    assert is_conflict_free(fc(5, 8), Coloring((0, 2, 2, 2, 2, 2, 2, 1)))


def test_size_mismatch():
    with pytest.raises(InvalidArgumentError):
        is_conflict_free(fc(4, 10), parity(9))


def test_witness_is_lexicographically_first():
    phi = Coloring((0, 1, 0, 1, 0, 1, 2, 2))
    f = fc(4, 8)
    bad = [e for e in enum_hyperedges(f) if not is_cf([e], phi.colors)]
    assert find_cf_violation(f, phi) == bad[0]
    assert find_proper_violation(fc(2, 8), phi) == (7, 8)


def test_small_exact_values(small_values):
    assert cf_chromatic_exact(fc(3, 6)) == 2
    assert cf_chromatic_exact(fc(5, 8)) == 3
    assert chi_exact(fc(2, 7)) == 3
    assert chi_exact(fc(2, 8)) == 2
    assert chi_exact(fc(4, 8)) == 2
    for key, value in small_values["cf_bruteforce"].items():
        n = int(key[len("FC(4,"):-1])
        assert cf_chromatic_exact(fc(4, n)) == value
    for key, value in small_values["cf_search"].items():
        n = int(key[len("FC(4,"):-1])
        assert cf_chromatic_exact(fc(4, n)) == value


def test_exact_matches_bruteforce_oracle():
    for d in (3, 4, 5):
        for n in range(d + 1, 9):
            edges = gale_facets_bruteforce(d, n)
            assert cf_chromatic_exact(fc(d, n)) == min_colors_bruteforce(edges, n), (d, n)
            assert chi_exact(fc(d, n)) == min_colors_bruteforce(edges, n, conflict_free=False), (d, n)


def test_exact_other_families():
    phi = cf_coloring_exact(two_intervals(7))
    assert is_conflict_free(two_intervals(7), phi)
    assert cf_chromatic_exact(disjoint_paths(2, 2, 8)) == cf_chromatic_exact(fc(4, 8))


def test_odd_dimension_rejects_two_colors():
    for d in (5, 7):
        for n in range(d + 1, 11):
            assert cf_chromatic_exact(fc(d, n)) == 3


def test_budget():
    with pytest.raises(ResourceLimitError):
        cf_chromatic_exact(fc(4, 12), SearchBudget(max_nodes=50))


def test_spot_check():
    assert spot_check_cf(fc(4, 10), K5_TOUR, 200) is None
    assert spot_check_cf(fc(4, 10), Coloring((0,) * 10), 5) is not None
    with pytest.raises(InvalidArgumentError):
        spot_check_cf(fc(5, 10), parity(10), 5)


colorings = st.integers(5, 11).flatmap(lambda n: st.lists(st.integers(0, 3), min_size=n, max_size=n))


@given(colorings, st.sampled_from([2, 3, 4]))
def test_verifier_agrees_with_bruteforce(labels, d):
    phi = Coloring.from_labels(labels)
    n = phi.n
    if n < d + 1:
        return
    edges = gale_facets_bruteforce(d, n)
    assert is_conflict_free(fc(d, n), phi) == is_cf(edges, phi.colors)
    assert is_conflict_free_bruteforce(edges, phi) == is_cf(edges, phi.colors)
    assert is_proper(fc(d, n), phi) == all(len({phi[v] for v in e}) > 1 for e in edges)


@given(st.integers(3, 12).flatmap(lambda n: st.lists(st.integers(0, 4), min_size=n, max_size=n)))
def test_two_interval_fast_path_agrees(labels):
    phi = Coloring.from_labels(labels)
    f = two_intervals(phi.n)
    assert is_conflict_free(f, phi) == is_conflict_free_bruteforce(enum_hyperedges(f), phi)


@given(st.sampled_from([(3, 6), (4, 6), (4, 7), (5, 7), (2, 6)]))
def test_cf_at_least_chi(dn):
    f = fc(*dn)
    phi = cf_coloring_exact(f)
    assert is_conflict_free(f, phi)
    assert phi.c >= chi_exact(f)
