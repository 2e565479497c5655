"""Hypergraph families on the ground set [n] = {1, ..., n}.

Hyperedges are sorted tuples of 1-based vertex ids. Every enumerator is a
lazy generator emitting hyperedges in lexicographic order.
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass
from math import comb
from typing import IO, Iterable, Iterator

from .errors import InvalidArgumentError

Hyperedge = tuple[int, ...]

FC = "FC"
D = "D"
I2 = "I2"
CYCLE = "Cycle"
MATCHING = "Matching"


@dataclass(frozen=True)
class HypergraphFamily:
    """Immutable descriptor of one hypergraph; parameters are validated on creation."""

    kind: str
    n: int
    d: int | None = None
    r: int | None = None
    m: int | None = None

    def __post_init__(self):
        n = self.n
        if self.kind == FC:
            if self.d is None or self.d < 2:
                raise InvalidArgumentError(f"FC needs d >= 2, got d={self.d}")
            if n < self.d + 1:
                raise InvalidArgumentError(f"FC_{self.d}(n) needs n >= d+1, got n={n}")
        elif self.kind == D:
            if self.r is None or self.m is None or self.r < 1 or self.m < 1:
                raise InvalidArgumentError("D needs positive r and m")
            if n < self.m * self.r + self.m:
                raise InvalidArgumentError(
                    f"D(r={self.r}, m={self.m}) needs n >= m*r + m = {self.m * self.r + self.m}, got n={n}"
                )
        elif self.kind == I2:
            if n < 3:
                raise InvalidArgumentError(f"I2 needs n >= 3, got n={n}")
        elif self.kind == CYCLE:
            if n < 3:
                raise InvalidArgumentError(f"Cycle needs n >= 3, got n={n}")
        elif self.kind == MATCHING:
            if n < 2:
                raise InvalidArgumentError(f"Matching needs n >= 2, got n={n}")
        else:
            raise InvalidArgumentError(f"unknown family kind {self.kind!r}")

    @property
    def uniform_size(self) -> int | None:
        """Common hyperedge cardinality, or None for I2."""
        if self.kind == FC:
            return self.d
        if self.kind == D:
            return self.m * self.r
        if self.kind in (CYCLE, MATCHING):
            return 2
        return None

    def __str__(self):
        if self.kind == FC:
            return f"FC_{self.d}({self.n})"
        if self.kind == D:
            return f"D^{self.m}_{self.r}({self.n})"
        if self.kind == I2:
            return f"I2_{self.n}"
        return f"{self.kind}({self.n})"


def fc(d: int, n: int) -> HypergraphFamily:
    return HypergraphFamily(FC, n, d=d)


def disjoint_paths(r: int, m: int, n: int) -> HypergraphFamily:
    return HypergraphFamily(D, n, r=r, m=m)


def two_intervals(n: int) -> HypergraphFamily:
    return HypergraphFamily(I2, n)


def cycle(n: int) -> HypergraphFamily:
    return HypergraphFamily(CYCLE, n)


def matching(n: int) -> HypergraphFamily:
    return HypergraphFamily(MATCHING, n)


def gale_is_facet(S: Iterable[int], d: int, n: int) -> bool:
    """Gale's evenness test for a d-subset S of [n].

    Every maximal run of consecutive elements of S that contains neither 1
    nor n must have even length.

    >>> gale_is_facet({2, 3, 5, 6}, 4, 10)
    True
    >>> gale_is_facet({2, 3, 4, 6}, 4, 10)
    False
    """
    s = sorted(S)
    if d < 1 or n < d + 1:
        raise InvalidArgumentError(f"need d >= 1 and n >= d+1, got d={d}, n={n}")
    if len(s) != d or len(set(s)) != d:
        raise InvalidArgumentError(f"S must have exactly d={d} distinct elements")
    if s[0] < 1 or s[-1] > n:
        raise InvalidArgumentError(f"S must be a subset of [1, {n}]")
    start = 0
    for i in range(1, d + 1):
        if i == d or s[i] != s[i - 1] + 1:
            run_lo, run_hi = s[start], s[i - 1]
            if run_lo != 1 and run_hi != n and (i - start) % 2:
                return False
            start = i
    return True


def _gale_facets(d: int, n: int) -> Iterator[Hyperedge]:
    # depth-first over sorted prefixes; a run may only be closed when it is
    # even or contains 1, and the last run may also be closed by touching n
    prefix: list[int] = []

    def rec(last: int, run_len: int, run_has_one: bool) -> Iterator[Hyperedge]:
        k = d - len(prefix)
        if k == 0:
            if run_has_one or last == n or run_len % 2 == 0:
                yield tuple(prefix)
            return
        if last + 1 <= n - k + 1:
            prefix.append(last + 1)
            yield from rec(last + 1, run_len + 1, run_has_one)
            prefix.pop()
        if not (run_has_one or run_len % 2 == 0):
            return
        for x in range(last + 2, n - k + 2):
            prefix.append(x)
            yield from rec(x, 1, False)
            prefix.pop()

    for x in range(1, n - d + 2):
        prefix.append(x)
        yield from rec(x, 1, x == 1)
        prefix.pop()


def _edge_union_facets(d: int, n: int) -> Iterator[Hyperedge]:
    """Even d only: unions of d/2 pairwise disjoint edges of the n-cycle."""
    l = d // 2

    def spread(base: tuple[int, ...], first: int) -> list[int]:
        # strictly increasing picks -> edge starts at pairwise distance >= 2
        return [b + j + first for j, b in enumerate(base)]

    def plain() -> Iterator[Hyperedge]:
        # edges {i, i+1}, 1 <= i <= n-1
        for base in itertools.combinations(range(n - l), l):
            out: list[int] = []
            for i in spread(base, 1):
                out.append(i)
                out.append(i + 1)
            yield tuple(out)

    def wrapped() -> Iterator[Hyperedge]:
        # edge {n, 1} plus l-1 disjoint edges {i, i+1} with 2 <= i <= n-2
        for base in itertools.combinations(range(n - l - 1), l - 1):
            out = [1]
            for i in spread(base, 2):
                out.append(i)
                out.append(i + 1)
            out.append(n)
            yield tuple(out)

    return heapq.merge(plain(), wrapped())


def random_even_facet(d: int, n: int, rng: random.Random) -> Hyperedge:
    """Uniformly random facet of FC_d(n) for even d, without enumerating."""
    fc(d, n)
    if d % 2:
        raise InvalidArgumentError(f"d must be even, got {d}")
    l = d // 2
    plain, wrapped = comb(n - l, l), comb(n - l - 1, l - 1)
    out: list[int] = []
    if rng.randrange(plain + wrapped) < plain:
        base = sorted(rng.sample(range(n - l), l))
        for j, b in enumerate(base):
            out += [b + j + 1, b + j + 2]
    else:
        base = sorted(rng.sample(range(n - l - 1), l - 1))
        out.append(1)
        for j, b in enumerate(base):
            out += [b + j + 2, b + j + 3]
        out.append(n)
    return tuple(out)


def _disjoint_path_unions(r: int, m: int, n: int) -> Iterator[Hyperedge]:
    paths = [frozenset((s + i) % n + 1 for i in range(r)) for s in range(n)]
    seen = set()
    for starts in itertools.combinations(range(n), m):
        union = frozenset().union(*(paths[s] for s in starts))
        if len(union) == m * r:
            seen.add(tuple(sorted(union)))
    return iter(sorted(seen))


def _two_interval_sets(n: int) -> Iterator[Hyperedge]:
    # subsets of [n] with at most two maximal runs and at least 3 elements
    prefix: list[int] = []

    def rec(last: int, runs: int) -> Iterator[Hyperedge]:
        if len(prefix) >= 3:
            yield tuple(prefix)
        if last + 1 <= n:
            prefix.append(last + 1)
            yield from rec(last + 1, runs)
            prefix.pop()
        if runs < 2:
            for x in range(last + 2, n + 1):
                prefix.append(x)
                yield from rec(x, runs + 1)
                prefix.pop()

    for x in range(1, n + 1):
        prefix.append(x)
        yield from rec(x, 1)
        prefix.pop()


def enum_hyperedges(f: HypergraphFamily) -> Iterator[Hyperedge]:
    """Stream the hyperedges of ``f`` once each, in lexicographic order."""
    if f.kind == FC:
        if f.d % 2 == 0:
            return _edge_union_facets(f.d, f.n)
        return _gale_facets(f.d, f.n)
    if f.kind == D:
        return _disjoint_path_unions(f.r, f.m, f.n)
    if f.kind == I2:
        return _two_interval_sets(f.n)
    if f.kind == CYCLE:
        return iter(sorted([(i, i + 1) for i in range(1, f.n)] + [(1, f.n)]))
    if f.kind == MATCHING:
        return ((2 * i - 1, 2 * i) for i in range(1, f.n // 2 + 1))
    raise InvalidArgumentError(f"unknown family kind {f.kind!r}")


def hyperedge_count(f: HypergraphFamily) -> int:
    if f.kind == FC:
        n, d = f.n, f.d
        if d % 2 == 0:
            l = d // 2
            return comb(n - l, l) + comb(n - l - 1, l - 1)
        m = (d - 1) // 2
        return 2 * comb(n - m - 1, m)
    if f.kind == I2:
        return comb(f.n + 1, 4)
    if f.kind == CYCLE:
        return f.n
    if f.kind == MATCHING:
        return f.n // 2
    return sum(1 for _ in enum_hyperedges(f))


def write_hyperedges(edges: Iterable[Hyperedge], fp: IO[str]) -> int:
    """Dump one hyperedge per line, space separated; returns the count."""
    count = 0
    for e in edges:
        fp.write(" ".join(map(str, e)))
        fp.write("\n")
        count += 1
    return count


def read_hyperedges(fp: IO[str]) -> Iterator[Hyperedge]:
    for line in fp:
        line = line.strip()
        if line:
            yield tuple(int(tok) for tok in line.split())
