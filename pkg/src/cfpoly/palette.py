"""Palette multigraphs and the counting / sub-multigraph lower-bound certificates."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import IO, Any

from .errors import InvalidArgumentError
from .hypergraphs import CYCLE, MATCHING, HypergraphFamily, enum_hyperedges
from .verify import Coloring


@dataclass(frozen=True)
class Multigraph:
    """Vertices 0..c-1 with an edge multiset; a loop is an edge (u, u).

    ``labels[i]``, when present, is the base-graph edge that edge i came from.
    """

    c: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[Any, ...] | None = None

    def __post_init__(self):
        edges = tuple((min(u, v), max(u, v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        for u, v in edges:
            if not (0 <= u < self.c and 0 <= v < self.c):
                raise InvalidArgumentError(f"edge ({u}, {v}) outside 0..{self.c - 1}")
        if self.labels is not None and len(self.labels) != len(edges):
            raise InvalidArgumentError("labels must match edges one-to-one")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.c
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1  # a loop adds 2
        return deg

    def multiplicities(self) -> Counter:
        return Counter(self.edges)

    def is_simple(self) -> bool:
        return all(u != v for u, v in self.edges) and len(set(self.edges)) == len(self.edges)


def palette_graph(base: HypergraphFamily, phi: Coloring) -> Multigraph:
    """Multigraph on the colors of ``phi`` with one edge per base edge {v1, v2}."""
    if base.kind not in (CYCLE, MATCHING):
        raise InvalidArgumentError(f"palette base must be a cycle or matching, got {base}")
    if phi.n != base.n:
        raise InvalidArgumentError(f"coloring has n={phi.n} but base has n={base.n}")
    if base.kind == CYCLE:
        base_edges = [(i, i % base.n + 1) for i in range(1, base.n + 1)]
    else:
        base_edges = list(enum_hyperedges(base))
    return Multigraph(
        phi.c,
        tuple((phi[a], phi[b]) for a, b in base_edges),
        tuple(base_edges),
    )


def find_bad_submultigraph(P: Multigraph, l: int) -> tuple[int, ...] | None:
    """Indices of exactly ``l`` edges whose support has minimum degree >= 2, or None."""
    if l < 1:
        raise InvalidArgumentError(f"l must be >= 1, got {l}")
    edges = P.edges
    m = len(edges)
    deg: Counter = Counter()
    chosen: list[int] = []

    def deficit() -> int:
        return sum(2 - k for k in deg.values() if k < 2)

    def rec(start: int) -> bool:
        left = l - len(chosen)
        if left == 0:
            return deficit() == 0
        # each further edge raises total degree by exactly 2
        if deficit() > 2 * left or m - start < left:
            return False
        for i in range(start, m - left + 1):
            u, v = edges[i]
            deg[u] += 1
            deg[v] += 1
            chosen.append(i)
            if rec(i + 1):
                return True
            chosen.pop()
            for w in (u, v):
                deg[w] -= 1
                if deg[w] == 0:
                    del deg[w]
        return False

    return tuple(chosen) if rec(0) else None


def has_bad_submultigraph(P: Multigraph, l: int) -> bool:
    return find_bad_submultigraph(P, l) is not None


def multiplicity_ok(P: Multigraph, l: int) -> bool:
    if l < 2:
        raise InvalidArgumentError(f"l must be >= 2, got {l}")
    return all(k <= l - 1 for k in P.multiplicities().values())


def sqrt_lower_bound(n: int, d: int) -> int:
    """Smallest c with floor(n/2) <= (c^2 + c)/2 * (d/2 - 1).

    Any CF-coloring of FC_d(n) uses at least this many colors: the floor(n/2)
    matching pairs {2i-1, 2i} can repeat an unordered color pair at most
    d/2 - 1 times.
    """
    if d < 4 or d % 2:
        raise InvalidArgumentError(f"d must be even and >= 4, got {d}")
    if n < d + 1:
        raise InvalidArgumentError(f"need n >= d+1, got n={n}")
    pairs = n // 2
    c = 1
    while (c * c + c) * (d // 2 - 1) < 2 * pairs:
        c += 1
    return c


def write_multigraph(P: Multigraph, fp: IO[str]) -> None:
    """Text format: ``c m`` then one ``u v`` line per edge, 1-based; u == v is a loop."""
    fp.write(f"{P.c} {P.m}\n")
    for u, v in P.edges:
        fp.write(f"{u + 1} {v + 1}\n")


def read_multigraph(fp: IO[str]) -> Multigraph:
    lines = [ln.split() for ln in fp if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise InvalidArgumentError("missing 'c m' header")
    c, m = int(lines[0][0]), int(lines[0][1])
    body = lines[1:]
    if len(body) != m:
        raise InvalidArgumentError(f"header says {m} edges, found {len(body)}")
    edges = []
    for tok in body:
        if len(tok) != 2:
            raise InvalidArgumentError(f"bad edge line {' '.join(tok)!r}")
        edges.append((int(tok[0]) - 1, int(tok[1]) - 1))
    return Multigraph(c, tuple(edges))

