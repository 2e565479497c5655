"""Eulerian graphs with forbidden short cycles, and their certification.

Constructions: complete and complete bipartite graphs, the point-line
incidence graphs of PG(2, q) and of the symplectic quadrangle W(q), and the
algebraic graphs D(k, q) with their connected components CD(k, q).
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Union

from .errors import InvalidArgumentError, NotEulerianError, ResourceLimitError
from .fields import FiniteField, field, is_prime
from .palette import Multigraph


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    """Undirected graph on 0..c-1 without loops or parallel edges."""

    c: int
    adj: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, c: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        nbrs: list[set[int]] = [set() for _ in range(c)]
        for u, v in edges:
            if u == v:
                raise InvalidArgumentError(f"loop at {u} in a simple graph")
            if v in nbrs[u]:
                raise InvalidArgumentError(f"parallel edge {u}-{v} in a simple graph")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(c, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def from_multigraph(cls, P: Multigraph) -> "SimpleGraph":
        return cls.from_edges(P.c, P.edges)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.c) for v in self.adj[u] if u < v)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def to_multigraph(self) -> Multigraph:
        return Multigraph(self.c, self.edges)

    def __repr__(self):
        return f"SimpleGraph(c={self.c}, edges={self.n_edges})"


AnyGraph = Union[SimpleGraph, Multigraph]


def _edge_list(G: AnyGraph) -> list[tuple[int, int]]:
    return list(G.edges)


def components(G: AnyGraph) -> list[list[int]]:
    """Connected components spanned by edges; isolated vertices are skipped."""
    adj: list[list[int]] = [[] for _ in range(G.c)]
    for u, v in _edge_list(G):
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * G.c
    comps = []
    for s in range(G.c):
        if seen[s] or not adj[s]:
            continue
        seen[s] = True
        comp, queue = [], [s]
        while queue:
            u = queue.pop()
            comp.append(u)
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_bipartite(G: SimpleGraph) -> bool:
    side = [-1] * G.c
    for s in range(G.c):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def girth(G: SimpleGraph, cap: int | None = None) -> int | None:
    """Length of a shortest cycle; None if acyclic or (with ``cap``) if girth > cap.

    BFS from every vertex; a non-tree edge met at depths a and b closes a
    walk of length a + b + 1 and the minimum over all roots is the girth.
    """
    limit = cap + 1 if cap is not None else G.c + 1
    best = limit
    adj = G.adj
    dist = [-1] * G.c
    parent = [-1] * G.c
    for s in range(G.c):
        dist[s] = 0
        parent[s] = -1
        queue = [s]
        i = 0
        while i < len(queue):
            u = queue[i]
            i += 1
            du = dist[u]
            if 2 * du + 1 >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = du + dist[w] + 1
                    if length < best:
                        best = length
        for v in queue:
            dist[v] = -1
    return best if best < limit else None


def cycle_lengths_up_to(G: SimpleGraph, L: int, max_steps: int = 20_000_000) -> set[int]:
    """Exact set of lengths j <= L such that G contains a cycle C_j."""
    g = girth(G, cap=L)
    if g is None:
        return set()
    found = {g}
    bip = is_bipartite(G)
    wanted = {j for j in range(g + 1, L + 1) if not (bip and j % 2)}
    if not wanted:
        return found
    adj = G.adj
    on_path = [False] * G.c
    steps = 0
    # each cycle is enumerated from its smallest vertex
    for root in range(G.c):
        on_path[root] = True
        stack = [(root, iter(adj[root]), 0)]
        while stack:
            u, it, k = stack[-1]
            advanced = False
            for w in it:
                steps += 1
                if steps > max_steps:
                    raise ResourceLimitError(f"cycle enumeration exceeded {max_steps} steps")
                if w == root:
                    if k + 1 >= 3:
                        found.add(k + 1)
                elif w > root and not on_path[w] and k + 2 <= L:
                    on_path[w] = True
                    stack.append((w, iter(adj[w]), k + 1))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if u != root:
                    on_path[u] = False
            if wanted <= found:
                return found
        on_path[root] = False
    return found


def forbidden_cycle_lengths(d: int) -> set[int]:
    """Lengths j with 3 <= j <= d/2 and j != d/2 - 1."""
    if d < 4 or d % 2:
        raise InvalidArgumentError(f"d must be even and >= 4, got {d}")
    return {j for j in range(3, d // 2 + 1) if j != d // 2 - 1}


@dataclass(frozen=True)
class Certificate:
    passed: bool
    violations: tuple[str, ...] = ()

    def __bool__(self):
        return self.passed


def certify_for_dimension(G: AnyGraph, d: int) -> Certificate:
    """Check that G is Eulerian, simple, and has no cycle of a forbidden length for ``d``."""
    forbidden = forbidden_cycle_lengths(d)
    violations = []
    degrees = G.degrees()
    if isinstance(G, Multigraph):
        if not G.is_simple():
            violations.append("not simple: has loops or parallel edges")
        G = SimpleGraph.from_edges(G.c, sorted({e for e in G.edges if e[0] != e[1]}))
    odd = [v + 1 for v, k in enumerate(degrees) if k % 2]
    if odd:
        violations.append(f"odd degree at vertices {odd[:10]}{' ...' if len(odd) > 10 else ''}")
    comps = components(G)
    if len(comps) > 1:
        violations.append(f"disconnected: {len(comps)} components")
    if is_bipartite(G):
        forbidden = {j for j in forbidden if j % 2 == 0}
    if forbidden and girth(G, cap=max(forbidden)) is not None:
        for j in sorted(forbidden & cycle_lengths_up_to(G, max(forbidden))):
            violations.append(f"contains C_{j}")
    return Certificate(not violations, tuple(violations))


# --- Euler tours -----------------------------------------------------------


@dataclass(frozen=True)
class EulerianTour:
    """Closed walk using every edge once; ``vertices[i] -> vertices[i+1]`` uses ``edges[i]``."""

    start: int
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self):
        return len(self.edges)

    def steps(self) -> list[tuple[int, int, int]]:
        return [(self.vertices[i], self.vertices[i + 1], e) for i, e in enumerate(self.edges)]


def euler_tour(G: AnyGraph, start: int | None = None) -> EulerianTour:
    """Hierholzer's algorithm; neighbors are tried in ascending (vertex, edge id) order."""
    edges = _edge_list(G)
    deg = [0] * G.c
    adj: list[list[tuple[int, int]]] = [[] for _ in range(G.c)]
    for i, (u, v) in enumerate(edges):
        deg[u] += 1
        deg[v] += 1
        adj[u].append((v, i))
        if u != v:
            adj[v].append((u, i))
    for a in adj:
        a.sort()
    odd = [v for v in range(G.c) if deg[v] % 2]
    if odd:
        raise NotEulerianError(f"vertex {odd[0]} has odd degree {deg[odd[0]]}")
    if start is None:
        start = next((v for v in range(G.c) if deg[v]), 0)
    if not edges:
        return EulerianTour(start, (start,), ())
    if deg[start] == 0:
        raise NotEulerianError(f"start vertex {start} has no edges")
    used = [False] * len(edges)
    ptr = [0] * G.c
    stack = [(start, -1)]
    circuit = []
    while stack:
        v, e_in = stack[-1]
        a = adj[v]
        while ptr[v] < len(a) and used[a[ptr[v]][1]]:
            ptr[v] += 1
        if ptr[v] == len(a):
            stack.pop()
            circuit.append((v, e_in))
        else:
            w, e = a[ptr[v]]
            used[e] = True
            stack.append((w, e))
    circuit.reverse()
    if len(circuit) - 1 != len(edges):
        missed = next(i for i, u in enumerate(used) if not u)
        comp = next(c for c in components(G) if edges[missed][0] in c)
        raise NotEulerianError(
            f"graph is disconnected: component containing vertex {comp[0]} is unreachable from {start}"
        )
    return EulerianTour(start, tuple(v for v, _ in circuit), tuple(e for _, e in circuit[1:]))


# --- constructions -----------------------------------------------------------


@lru_cache(maxsize=None)
def complete_graph(c: int) -> SimpleGraph:
    if c < 1:
        raise InvalidArgumentError(f"c must be positive, got {c}")
    return SimpleGraph.from_edges(c, itertools.combinations(range(c), 2))


@lru_cache(maxsize=None)
def complete_bipartite(a: int, b: int) -> SimpleGraph:
    if a < 1 or b < 1:
        raise InvalidArgumentError(f"sides must be positive, got {a}, {b}")
    return SimpleGraph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def _normalized_vectors(F: FiniteField, dim: int) -> list[tuple[int, ...]]:
    """Representatives of the 1-dim subspaces of F^dim: first nonzero entry is 1."""
    out = []
    for v in itertools.product(F.elements, repeat=dim):
        lead = next((x for x in v if x), 0)
        if lead == 1:
            out.append(v)
    return out


def _normalize(F: FiniteField, v: tuple[int, ...]) -> tuple[int, ...]:
    lead = next(x for x in v if x)
    s = F.inv(lead)
    return tuple(F.mul(s, x) for x in v)


def _require_odd_prime(q: int):
    if q < 3 or not is_prime(q):
        raise InvalidArgumentError(f"q must be an odd prime, got {q}")


@lru_cache(maxsize=None)
def pg2_incidence(q: int) -> SimpleGraph:
    """Point-line incidence graph of PG(2, q): points 0..N-1, lines N..2N-1."""
    _require_odd_prime(q)
    F = field(q)
    vecs = _normalized_vectors(F, 3)
    N = len(vecs)

    def dot(x, y):
        return (x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q

    edges = [(i, N + j) for i, p in enumerate(vecs) for j, l in enumerate(vecs) if dot(p, l) == 0]
    return SimpleGraph.from_edges(2 * N, edges)


def symplectic_form(x: tuple[int, ...], y: tuple[int, ...], q: int) -> int:
    """x1*y2 - x2*y1 + x3*y4 - x4*y3 over F_q (q prime)."""
    return (x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2]) % q


@lru_cache(maxsize=None)
def gq_incidence(q: int) -> SimpleGraph:
    """Incidence graph of the symplectic generalized quadrangle W(q).

    Points are the 1-dim subspaces of F_q^4 (ids 0..N-1); lines are the
    totally isotropic 2-dim subspaces (ids N..2N-1, sorted by point set).
    """
    _require_odd_prime(q)
    F = field(q)
    points = _normalized_vectors(F, 4)
    index = {p: i for i, p in enumerate(points)}
    lines: set[tuple[int, ...]] = set()
    for i, p in enumerate(points):
        for j in range(i + 1, len(points)):
            r = points[j]
            if symplectic_form(p, r, q):
                continue
            span = {j}
            for a in range(q):
                v = tuple((a * x + y) % q for x, y in zip(p, r))
                span.add(index[_normalize(F, v)])
            span.add(i)
            lines.add(tuple(sorted(span)))
    N = len(points)
    ordered = sorted(lines)
    if len(ordered) != N:
        raise AssertionError(f"expected {N} lines, found {len(ordered)}")
    edges = [(p, N + j) for j, line in enumerate(ordered) for p in line]
    return SimpleGraph.from_edges(2 * N, edges)


def _lu_relations(k: int) -> list[tuple[int, int]]:
    """For coordinate j >= 1: (a, b) with l_j - p_j = l_a * p_b (a, b < j)."""
    labels: list = ["1", (1, 1), (1, 2), (2, 1)]
    i = 2
    while len(labels) < k:
        labels += [(i, i), (i, i, "'"), (i, i + 1), (i + 1, i)]
        i += 1
    labels = labels[:k]
    pos = {lab: j for j, lab in enumerate(labels)}
    rel = [(0, 0)]
    for lab in labels[1:]:
        if lab == (1, 1):
            ab = ("1", "1")
        elif lab == (1, 2):
            ab = ((1, 1), "1")
        elif lab == (2, 1):
            ab = ("1", (1, 1))
        elif len(lab) == 3:
            ab = ((lab[0], lab[0] - 1), "1")
        elif lab[0] == lab[1]:
            ab = ("1", (lab[0] - 1, lab[0]))
        elif lab[1] == lab[0] + 1:
            ab = ((lab[0], lab[0]), "1")
        else:
            ab = ("1", (lab[1], lab[1], "'"))
        rel.append((pos[ab[0]], pos[ab[1]]))
    return rel


def _require_lu_params(k: int, q: int):
    if k < 2:
        raise InvalidArgumentError(f"k must be >= 2, got {k}")
    if q not in (4, 8, 16):
        raise InvalidArgumentError(f"q must be 2^t with t in {{2, 3, 4}}, got {q}")


class _LU:
    def __init__(self, k: int, q: int):
        self.k, self.q = k, q
        self.F = field(q)
        self.rel = _lu_relations(k)

    def line_of(self, p: tuple[int, ...], l1: int) -> tuple[int, ...]:
        add, mul = self.F.add_table, self.F.mul_table
        l = [l1]
        for j in range(1, self.k):
            a, b = self.rel[j]
            l.append(add[p[j]][mul[l[a]][p[b]]])
        return tuple(l)

    def point_of(self, l: tuple[int, ...], p1: int) -> tuple[int, ...]:
        sub, mul = self.F.sub, self.F.mul_table
        p = [p1]
        for j in range(1, self.k):
            a, b = self.rel[j]
            p.append(sub(l[j], mul[l[a]][p[b]]))
        return tuple(p)

    def encode(self, v: tuple[int, ...]) -> int:
        out = 0
        for x in v:
            out = out * self.q + x
        return out


@lru_cache(maxsize=None)
def lu_graph(k: int, q: int) -> SimpleGraph:
    """The bipartite graph D(k, q): points 0..q^k-1, lines q^k..2q^k-1."""
    _require_lu_params(k, q)
    lu = _LU(k, q)
    size = q**k
    edges = []
    for p in itertools.product(range(q), repeat=k):
        pid = lu.encode(p)
        for l1 in range(q):
            edges.append((pid, size + lu.encode(lu.line_of(p, l1))))
    return SimpleGraph.from_edges(2 * size, edges)


@lru_cache(maxsize=None)
def lu_component(k: int, q: int) -> SimpleGraph:
    """CD(k, q): the component of D(k, q) containing the zero point, ids in BFS order."""
    _require_lu_params(k, q)
    lu = _LU(k, q)
    zero = ("p", (0,) * k)
    ids = {zero: 0}
    queue = deque([zero])
    edges = []
    while queue:
        kind, v = queue.popleft()
        vid = ids[(kind, v)]
        for x in range(q):
            w = ("l", lu.line_of(v, x)) if kind == "p" else ("p", lu.point_of(v, x))
            if w not in ids:
                ids[w] = len(ids)
                queue.append(w)
            if kind == "p":
                edges.append((vid, ids[w]))
    return SimpleGraph.from_edges(len(ids), edges)
