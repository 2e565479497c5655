import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cfpoly.errors import InvalidArgumentError, NotEulerianError
from cfpoly.girthgraphs import (
    SimpleGraph,
    certify_for_dimension,
    complete_bipartite,
    complete_graph,
    components,
    cycle_lengths_up_to,
    euler_tour,
    forbidden_cycle_lengths,
    girth,
    gq_incidence,
    is_bipartite,
    lu_component,
    lu_graph,
    pg2_incidence,
    symplectic_form,
)
from cfpoly.palette import Multigraph
from oracles import girth_bruteforce


def cycle_graph(n):
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.c))
    H.add_edges_from(G.edges)
    return H


def test_simple_graph_rejects_loops_and_parallels():
    with pytest.raises(InvalidArgumentError):
        SimpleGraph.from_edges(2, [(0, 0)])
    with pytest.raises(InvalidArgumentError):
        SimpleGraph.from_edges(2, [(0, 1), (1, 0)])


def test_small_constructions():
    assert complete_graph(5).n_edges == 10
    assert complete_graph(3).edges == ((0, 1), (0, 2), (1, 2))
    K44 = complete_bipartite(4, 4)
    assert K44.n_edges == 16 and girth(K44) == 4


@pytest.mark.parametrize("q, vertices, edges, g", [(3, 26, 52, 6), (5, 62, 186, 6), (7, 114, 456, 6)])
def test_projective_plane(q, vertices, edges, g):
    G = pg2_incidence(q)
    assert (G.c, G.n_edges, girth(G)) == (vertices, edges, g)
    assert set(G.degrees()) == {q + 1}
    assert 4 not in cycle_lengths_up_to(G, 5)


@pytest.mark.parametrize("q, vertices, edges", [(3, 80, 160), (5, 312, 936)])
def test_generalized_quadrangle(q, vertices, edges):
    G = gq_incidence(q)
    assert (G.c, G.n_edges, girth(G)) == (vertices, edges, 8)
    assert set(G.degrees()) == {q + 1}


def test_symplectic_form_is_alternating():
    for x in [(1, 0, 0, 0), (1, 2, 0, 1), (0, 1, 1, 1)]:
        assert symplectic_form(x, x, 3) == 0
    assert symplectic_form((1, 0, 0, 0), (0, 1, 0, 0), 3) == 1


@pytest.mark.parametrize("k, vertices, g, comps", [(2, 32, 6, 1), (3, 128, 8, 1), (4, 512, 8, 4)])
def test_lu_graphs(k, vertices, g, comps):
    D = lu_graph(k, 4)
    assert D.c == vertices and D.n_edges == 4 * vertices // 2
    assert set(D.degrees()) == {4} and is_bipartite(D)
    assert girth(D) == g and len(components(D)) == comps
    C = lu_component(k, 4)
    assert C.c == vertices // comps and set(C.degrees()) == {4} and girth(C) == g


def test_lu_parameters():
    with pytest.raises(InvalidArgumentError):
        lu_graph(3, 3)
    with pytest.raises(InvalidArgumentError):
        lu_graph(1, 4)


def test_girth_matches_networkx_and_bruteforce():
    graphs = [pg2_incidence(3), gq_incidence(3), lu_component(3, 4), complete_graph(6), complete_bipartite(3, 5)]
    for G in graphs:
        adj = {u: set(G.adj[u]) for u in range(G.c)}
        assert girth(G) == nx.girth(to_nx(G)) == girth_bruteforce(adj)
    assert girth(SimpleGraph.from_edges(3, [(0, 1), (1, 2)])) is None


@pytest.mark.parametrize(
    "G, L, expected",
    [(cycle_graph(5), 6, {5}), (complete_graph(4), 4, {3, 4}), (complete_bipartite(3, 3), 6, {4, 6})],
)
def test_cycle_lengths(G, L, expected):
    assert cycle_lengths_up_to(G, L) == expected


def test_cycle_lengths_against_networkx():
    for G in (complete_graph(5), pg2_incidence(3), complete_bipartite(2, 3)):
        lengths = {len(c) for c in nx.simple_cycles(to_nx(G), length_bound=6)}
        assert cycle_lengths_up_to(G, 6) == {j for j in lengths if j >= 3}


def test_forbidden_lengths():
    assert forbidden_cycle_lengths(4) == set()
    assert forbidden_cycle_lengths(10) == {3, 5}
    assert forbidden_cycle_lengths(20) == {3, 4, 5, 6, 7, 8, 10}


@pytest.mark.parametrize(
    "G, d, passed",
    [
        (complete_graph(5), 4, True),
        (complete_bipartite(4, 4), 10, True),
        (complete_bipartite(4, 4), 8, False),
        (complete_graph(4), 6, False),
        (pg2_incidence(3), 8, True),
        (pg2_incidence(3), 14, True),
        (gq_incidence(3), 12, True),
        (gq_incidence(3), 18, True),
        (lu_component(5, 4), 16, True),
    ],
)
def test_certificates(G, d, passed):
    assert certify_for_dimension(G, d).passed is passed


def test_certificate_reasons():
    cert = certify_for_dimension(complete_graph(4), 6)
    assert any("odd degree" in v for v in cert.violations)
    assert "contains C_3" in cert.violations
    assert "contains C_4" in certify_for_dimension(complete_bipartite(4, 4), 8).violations
    multi = Multigraph(3, ((0, 1), (0, 1), (1, 2), (0, 2)))
    cert = certify_for_dimension(multi, 4)
    assert not cert and any("not simple" in v for v in cert.violations)
    two = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert "disconnected: 2 components" in certify_for_dimension(two, 4).violations


def check_tour(G, tour):
    assert tour.vertices[0] == tour.vertices[-1] == tour.start
    assert sorted(tour.edges) == list(range(G.n_edges))
    for u, v, e in tour.steps():
        assert {u, v} == set(G.edges[e])


def test_euler_tours():
    tri = complete_graph(3)
    assert len(euler_tour(tri)) == 3
    K5 = complete_graph(5)
    tour = euler_tour(K5, start=0)
    check_tour(K5, tour)
    assert tour.vertices == (0, 1, 2, 0, 3, 1, 4, 2, 3, 4, 0)
    with pytest.raises(NotEulerianError):
        euler_tour(SimpleGraph.from_edges(3, [(0, 1), (1, 2)]))
    with pytest.raises(NotEulerianError):
        euler_tour(SimpleGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]), start=0)


def test_euler_tour_on_multigraph_with_loops():
    P = Multigraph(2, ((0, 0), (0, 1), (0, 1), (1, 1)))
    tour = euler_tour(P, start=0)
    assert len(tour) == 4 and tour.vertices[0] == tour.vertices[-1] == 0


@given(st.sampled_from([3, 5, 7, 9]), st.integers(0, 8))
def test_tours_of_complete_graphs(c, start):
    G = complete_graph(c)
    check_tour(G, euler_tour(G, start=start % c))


@given(st.integers(1, 4).map(lambda m: 2 * m))
def test_tours_of_bipartite_graphs(m):
    G = complete_bipartite(m, m)
    check_tour(G, euler_tour(G))
