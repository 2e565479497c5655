"""Constructive colorings.

* Euler-tour colorings of FC_d(n), d even, from certified girth graphs.
* The explicit 2- and 3-colorings for odd d and the proper 2/3-colorings.
* The Walecki-path coloring of the 2-interval hypergraph.
* Universal-cycle colorings of D^2_r(n).

Restricting a tour coloring of C_[n'] to [n] < n' changes the closing edge
{n, 1} of the cycle, so the plain prefix is not CF in general. We slide the
window along the tour until the new closing pair keeps the palette graph
simple and free of forbidden cycles; if no offset works, vertex n gets a
fresh color of its own.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd
from typing import Iterator

from .errors import (
    InvalidArgumentError,
    NoUniversalCycleError,
    ResourceLimitError,
    UnsupportedParametersError,
)
from .fields import is_prime
from .girthgraphs import (
    EulerianTour,
    SimpleGraph,
    certify_for_dimension,
    complete_bipartite,
    complete_graph,
    euler_tour,
    forbidden_cycle_lengths,
    gq_incidence,
    lu_component,
    pg2_incidence,
)
from .hypergraphs import disjoint_paths, fc
from .verify import Coloring, SearchBudget

FRESH = "fresh"


def color_from_eulerian(G: SimpleGraph, tour: EulerianTour, n: int) -> Coloring:
    """Walk C_[n] and the tour together; vertex i gets the tour's i-th graph vertex."""
    if n < 3:
        raise InvalidArgumentError(f"n must be >= 3, got {n}")
    if len(tour) != n:
        raise InvalidArgumentError(f"tour has {len(tour)} edges but n={n}")
    if len(tour) != G.n_edges:
        raise InvalidArgumentError("tour does not cover the graph")
    return Coloring.from_labels(tour.vertices[:n], {"kind": "tour", "edges": n})


# --- restriction of tour colorings ---------------------------------------------


def _closes_forbidden_cycle(G: SimpleGraph, a: int, b: int, forbidden: set[int], usable) -> bool:
    """True if some simple a-b path over usable edges has length j-1 for a forbidden j."""
    if not forbidden:
        return False
    targets = {j - 1 for j in forbidden}
    depth_cap = max(targets)
    on_path = {a}

    def rec(u: int, k: int) -> bool:
        for w in G.adj[u]:
            if w in on_path or not usable(u, w):
                continue
            if w == b:
                if k + 1 in targets:
                    return True
                continue
            if k + 1 < depth_cap:
                on_path.add(w)
                if rec(w, k + 1):
                    return True
                on_path.discard(w)
        return False

    return rec(a, 0)


def restrict_tour_coloring(G: SimpleGraph, tour: EulerianTour, n: int, d: int):
    """Labels for [n] taken from a window of the tour; returns (labels, offset, fresh).

    Accepts an offset when the closing pair (first, last) of the window,
    added to the window's edges, still gives a simple graph with no cycle of
    a length forbidden for ``d``.
    """
    N = len(tour)
    verts = tour.vertices
    if n == N:
        return list(verts[:n]), 0, False
    if not 3 <= n < N:
        raise InvalidArgumentError(f"cannot restrict a tour of {N} edges to n={n}")
    forbidden = forbidden_cycle_lengths(d)
    pos = {e: i for i, e in enumerate(tour.edges)}
    index = G.edge_index
    for s in range(N):
        a, b = verts[s], verts[(s + n - 1) % N]
        if a == b:
            continue

        def in_window(p: int, s=s) -> bool:
            return (p - s) % N <= n - 2

        e = index.get((min(a, b), max(a, b)))
        if e is not None:
            if in_window(pos[e]):
                continue
            return [verts[(s + i) % N] for i in range(n)], s, False

        def usable(u: int, w: int) -> bool:
            return in_window(pos[index[(min(u, w), max(u, w))]])

        if not _closes_forbidden_cycle(G, a, b, forbidden, usable):
            return [verts[(s + i) % N] for i in range(n)], s, False
    return list(verts[: n - 1]) + [FRESH], 0, True


# --- dispatcher for even d ---------------------------------------------------------

# D(k, q) with more than this many points is not built (certification would take hours)
_LU_MAX_POINTS = 1 << 18


def _odd_primes() -> Iterator[int]:
    return (p for p in itertools.count(3, 2) if is_prime(p))


def _candidates(d: int) -> Iterator[tuple[tuple, int | None]]:
    """(key, edge count or None if only known after building), by increasing size."""
    if d == 4:
        for c in itertools.count(3, 2):
            yield ("K", c), comb(c, 2)
    elif d in (6, 10):
        for m in itertools.count(1):
            yield ("Kbip", 2 * m), 4 * m * m
    elif d in (8, 14):
        for q in _odd_primes():
            yield ("PG2", q), (q + 1) * (q * q + q + 1)
    elif d in (12, 18):
        for q in _odd_primes():
            yield ("GQ", q), (q + 1) * (q**3 + q * q + q + 1)
    else:
        a = 2 * (d // 4) - 3
        for q in (4, 8, 16):
            if q**a > _LU_MAX_POINTS:
                return
            yield ("CD", a, q), None


@lru_cache(maxsize=None)
def construction_graph(key: tuple) -> SimpleGraph:
    kind = key[0]
    if kind == "K":
        return complete_graph(key[1])
    if kind == "Kbip":
        return complete_bipartite(key[1], key[1])
    if kind == "PG2":
        return pg2_incidence(key[1])
    if kind == "GQ":
        return gq_incidence(key[1])
    if kind == "CD":
        return lu_component(key[1], key[2])
    raise InvalidArgumentError(f"unknown construction {key!r}")


@lru_cache(maxsize=None)
def _certified(key: tuple, d: int) -> bool:
    return certify_for_dimension(construction_graph(key), d).passed


@lru_cache(maxsize=None)
def _tour(key: tuple) -> EulerianTour:
    return euler_tour(construction_graph(key), start=0)


def describe(key: tuple) -> dict:
    names = {"K": ("c",), "Kbip": ("side",), "PG2": ("q",), "GQ": ("q",), "CD": ("k", "q")}
    return {"kind": key[0], **dict(zip(names[key[0]], key[1:]))}


def pick_construction(d: int, n: int, max_tries: int = 8) -> tuple:
    """Smallest construction key for dimension d with >= n edges that certifies."""
    if d < 4 or d % 2:
        raise InvalidArgumentError(f"d must be even and >= 4, got {d}")
    tried = []
    for key, edges in _candidates(d):
        if edges is not None and edges < n:
            continue
        if edges is None and construction_graph(key).n_edges < n:
            continue
        if _certified(key, d):
            return key
        tried.append(f"{describe(key)} failed certification")
        if len(tried) >= max_tries:
            break
    raise UnsupportedParametersError(
        f"no certified construction for d={d}, n={n}; tried: {tried or 'nothing within size limits'}"
    )


def cf_color_fc(d: int, n: int) -> Coloring:
    """CF-coloring of FC_d(n), d even, from the smallest certified Euler-tour graph."""
    fc(d, n)
    key = pick_construction(d, n)
    G = construction_graph(key)
    labels, offset, fresh = restrict_tour_coloring(G, _tour(key), n, d)
    meta = {**describe(key), "edges": G.n_edges, "offset": offset, "fresh_color": fresh}
    if fresh and d == 4:
        padded = _pad_with_loops(G, _tour(key), n)
        if padded is not None:
            labels, offset, loops = padded
            meta.update(offset=offset, fresh_color=False, loops=loops)
    return Coloring.from_labels(labels, meta)


def _pad_with_loops(G: SimpleGraph, tour: EulerianTour, n: int):
    """d = 4 only: a simple closed walk of length n-1 or n-2, padded by repeating its first color.

    The repeats add one or two loops on consecutive cycle edges. Two cycle
    edges sharing a vertex never lie in a common facet of FC_4(n), and a loop
    next to any other edge leaves a unique color, so the coloring stays CF.
    """
    for loops in (1, 2):
        m = n - loops
        if m < 3:
            break
        labels, offset, fresh = restrict_tour_coloring(G, tour, m, 4)
        if not fresh:
            return [labels[0]] * loops + labels, offset, loops
    return None


def cf_color_odd(d: int, n: int) -> Coloring:
    """Two colors by parity for d = 3; otherwise 1 and n get their own colors."""
    if d < 3 or d % 2 == 0:
        raise InvalidArgumentError(f"d must be odd and >= 3, got {d}")
    fc(d, n)
    if d == 3:
        return Coloring(tuple((v - 1) % 2 for v in range(1, n + 1)), {"kind": "parity"})
    return Coloring(tuple([0] + [2] * (n - 2) + [1]), {"kind": "ends"})


def proper_color(d: int, n: int) -> Coloring:
    if n < max(3, d + 1):
        raise InvalidArgumentError(f"need n >= max(3, d+1), got n={n}")
    cols = [(v - 1) % 2 for v in range(1, n + 1)]
    if d == 2 and n % 2:
        cols[-1] = 2
    return Coloring(tuple(cols), {"kind": "parity"})


# --- Walecki paths and the 2-interval coloring ------------------------------------


@dataclass(frozen=True)
class WaleckiDecomposition:
    """k Hamiltonian paths of K_2k; vertex id j stands for v_{j+1}."""

    k: int
    paths: tuple[tuple[int, ...], ...]

    def edge_sets(self) -> list[set[frozenset]]:
        return [{frozenset(p) for p in zip(path, path[1:])} for path in self.paths]

    def violations(self) -> list[str]:
        k, out = self.k, []
        if len(self.paths) != k:
            out.append(f"expected {k} paths, got {len(self.paths)}")
        for i, path in enumerate(self.paths):
            if sorted(path) != list(range(2 * k)):
                out.append(f"Z{i + 1} is not Hamiltonian")
            if path[0] != i or path[-1] != (i + k) % (2 * k):
                out.append(f"Z{i + 1} runs {path[0]}->{path[-1]}, expected {i}->{(i + k) % (2 * k)}")
        sets = self.edge_sets()
        for i, j in itertools.combinations(range(len(sets)), 2):
            if sets[i] & sets[j]:
                out.append(f"Z{i + 1} and Z{j + 1} share an edge")
        if set().union(*sets) != {frozenset(e) for e in itertools.combinations(range(2 * k), 2)}:
            out.append("paths do not cover K_2k")
        return out


def walecki_paths(k: int) -> WaleckiDecomposition:
    """Zigzag Hamiltonian paths Z_1..Z_k of K_2k.

    Z_1 leaves v_1 along the arc v_2k, v_2k-1, ... first, then alternates
    with the arc v_2, v_3, ... until both meet at v_{k+1}; Z_i is Z_1 rotated
    by i-1.
    """
    if k < 2:
        raise InvalidArgumentError(f"k must be >= 2, got {k}")
    down = list(range(2 * k - 1, k, -1))
    up = list(range(1, k))
    z1 = [0] + [x for pair in zip(down, up) for x in pair] + [k]
    paths = tuple(tuple((v + i) % (2 * k) for v in z1) for i in range(k))
    return WaleckiDecomposition(k, paths)


def i2_half_order(n: int) -> int:
    k = 2
    while 2 * k * k - 1 < n:
        k += 1
    return k


def cf_color_i2(n: int) -> Coloring:
    """CF-coloring of the 2-interval hypergraph on [n] with at most 3k-1 colors.

    [2k^2-1] is cut into blocks of 2k-1 by k-1 separators; block i follows Z_i
    up to, but not including, its end vertex, and separator i has color x_i.
    """
    if n < 3:
        raise InvalidArgumentError(f"n must be >= 3, got {n}")
    k = i2_half_order(n)
    W = walecki_paths(k)
    labels: list = []
    for i, path in enumerate(W.paths):
        labels.extend(("v", v) for v in path[: 2 * k - 1])
        if i < k - 1:
            labels.append(("x", i))
    return Coloring.from_labels(labels[:n], {"kind": "walecki", "k": k})


# --- universal cycles ----------------------------------------------------------------


@dataclass(frozen=True)
class UniversalCycle:
    """Cyclic sequence over {0..c-1} whose r-windows are exactly the r-subsets, once each."""

    c: int
    r: int
    sequence: tuple[int, ...]

    def windows(self) -> list[frozenset]:
        N, r, s = len(self.sequence), self.r, self.sequence
        return [frozenset(s[(i + j) % N] for j in range(r)) for i in range(N)]

    def violations(self) -> list[str]:
        out = []
        N = comb(self.c, self.r)
        if len(self.sequence) != N:
            out.append(f"length {len(self.sequence)} != C({self.c},{self.r}) = {N}")
        wins = self.windows()
        short = [i for i, w in enumerate(wins) if len(w) != self.r]
        if short:
            out.append(f"windows with repeated symbols at {short[:5]}")
        if len(set(wins)) != len(wins):
            out.append("some r-subset appears twice")
        if any(not 0 <= x < self.c for x in self.sequence):
            out.append("symbol out of range")
        return out


def universal_cycle(c: int, r: int, budget: SearchBudget | None = None) -> UniversalCycle:
    """Backtracking search, extending by the smallest admissible symbol.

    When gcd(c, r) = 1 a rotation-invariant cycle is tried first; it only
    needs a block of length C(c, r)/c and is found almost instantly. The
    general search fixes the first window is fixed to 0, 1, ..., r-1 (any cycle can be rotated and
    relabelled to start this way) and every symbol is capped at its exact
    occurrence count C(c-1, r-1)/r.
    """
    if r < 2 or c < r + 1:
        raise InvalidArgumentError(f"need r >= 2 and c >= r+1, got c={c}, r={r}")
    if comb(c - 1, r - 1) % r:
        raise NoUniversalCycleError(f"{r} does not divide C({c - 1},{r - 1}) = {comb(c - 1, r - 1)}")
    budget = budget or SearchBudget()
    spent = [0]
    if gcd(c, r) == 1:
        seq = _rotational_cycle(c, r, budget, spent)
        if seq is not None:
            return UniversalCycle(c, r, tuple(seq))
    N = comb(c, r)
    occ = comb(c - 1, r - 1) // r
    seq = list(range(r))
    count = [1] * r + [0] * (c - r)
    used = {(1 << r) - 1}

    def mask(xs) -> int:
        m = 0
        for x in xs:
            m |= 1 << x
        return m

    def closes() -> bool:
        wraps = set()
        for j in range(1, r):
            w = seq[N - r + j:] + seq[:j]
            m = mask(w)
            if bin(m).count("1") != r or m in used or m in wraps:
                return False
            wraps.add(m)
        return True

    def rec() -> bool:
        if len(seq) == N:
            return closes()
        tail = mask(seq[len(seq) - r + 1:])
        for s in range(c):
            if tail >> s & 1 or count[s] >= occ:
                continue
            w = tail | 1 << s
            if w in used:
                continue
            _tick(spent, budget, c, r)
            seq.append(s)
            count[s] += 1
            used.add(w)
            if rec():
                return True
            used.discard(w)
            count[s] -= 1
            seq.pop()
        return False

    if not rec():
        raise NoUniversalCycleError(f"exhaustive search found no universal cycle for c={c}, r={r}")
    return UniversalCycle(c, r, tuple(seq))


def _tick(spent: list[int], budget: SearchBudget, c: int, r: int) -> None:
    spent[0] += 1
    if spent[0] > budget.max_nodes:
        raise ResourceLimitError(f"universal cycle search for c={c}, r={r} exceeded {budget.max_nodes} nodes")


def _rotational_cycle(c: int, r: int, budget: SearchBudget, spent: list[int]) -> list[int] | None:
    """Search for a cycle with x[j + L] = x[j] + 1 (mod c), L = C(c, r) / c.

    With gcd(c, r) = 1 every rotation orbit of r-subsets has size c, so the
    block x[0..L-1] must hit each of the L orbits with exactly one window.
    Returns None when no such cycle exists.
    """
    N = comb(c, r)
    L = N // c
    orbit: dict[int, int] = {}
    for S in itertools.combinations(range(c), r):
        m = sum(1 << x for x in S)
        if m not in orbit:
            for t in range(c):
                orbit[sum(1 << ((x + t) % c) for x in S)] = m
    x = [0]
    seen: set[int] = set()

    def val(i: int) -> int:
        return (x[i % L] + i // L) % c

    def window(j: int) -> int:
        m = 0
        for t in range(r):
            m |= 1 << val(j + t)
        return m

    def good(w: int) -> bool:
        return bin(w).count("1") == r and orbit[w] not in seen

    def rec() -> bool:
        i = len(x)
        if i == L:
            added = []
            for j in range(max(0, L - r + 1), L):
                w = window(j)
                if not good(w):
                    seen.difference_update(added)
                    return False
                seen.add(orbit[w])
                added.append(orbit[w])
            return True
        for s in range(c):
            _tick(spent, budget, c, r)
            x.append(s)
            j = i - r + 1
            if j < 0:
                if len(set(x)) == len(x) and rec():
                    return True
            else:
                w = window(j)
                if good(w):
                    seen.add(orbit[w])
                    if rec():
                        return True
                    seen.discard(orbit[w])
            x.pop()
        return False

    return [val(i) for i in range(N)] if rec() else None


def _restrict_cycle(U: UniversalCycle, n: int):
    """Window of U of length n whose cyclic r-windows on C_[n] are distinct r-sets."""
    N, r, seq = len(U.sequence), U.r, U.sequence
    if n == N:
        return list(seq), 0, False
    for s in range(N):
        u = [seq[(s + i) % N] for i in range(n)]
        inner = {frozenset(u[j:j + r]) for j in range(n - r + 1)}
        ok = True
        for j in range(n - r + 1, n):
            w = frozenset(u[(j + t) % n] for t in range(r))
            if len(w) != r or w in inner:
                ok = False
                break
            inner.add(w)
        if ok:
            return u, s, False
    return list(seq[: n - 1]) + [FRESH], 0, True


def cf_color_d2r(r: int, n: int, budget: SearchBudget | None = None) -> Coloring:
    """CF-coloring of D^2_r(n) by walking a universal cycle for r-subsets of [c]."""
    if r < 2:
        raise InvalidArgumentError(f"r must be >= 2, got {r}")
    disjoint_paths(r, 2, n)
    for c in itertools.count(r + 1):
        if comb(c, r) < n or comb(c - 1, r - 1) % r:
            continue
        try:
            U = universal_cycle(c, r, budget)
        except NoUniversalCycleError:
            continue
        labels, offset, fresh = _restrict_cycle(U, n)
        meta = {"kind": "ucycle", "c": c, "r": r, "offset": offset, "fresh_color": fresh}
        return Coloring.from_labels(labels, meta)
    raise AssertionError("unreachable")

