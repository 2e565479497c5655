"""Colorings, proper / conflict-free verification, and exact backtracking oracles."""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Sequence

import numpy as np

from .errors import InvalidArgumentError, ResourceLimitError
from .hypergraphs import FC, I2, Hyperedge, HypergraphFamily, enum_hyperedges, random_even_facet

_CHUNK = 1 << 15


@dataclass(frozen=True)
class Coloring:
    """Total assignment [n] -> {0, ..., c-1}; ``colors[i]`` is the color of vertex i+1.

    Every color id below ``c`` is used at least once.
    """

    colors: tuple[int, ...]
    construction: dict[str, Any] | None = field(default=None, compare=False)

    def __post_init__(self):
        cols = tuple(int(x) for x in self.colors)
        object.__setattr__(self, "colors", cols)
        if not cols:
            raise InvalidArgumentError("empty coloring")
        if min(cols) < 0 or set(cols) != set(range(max(cols) + 1)):
            raise InvalidArgumentError("color ids must be exactly 0..c-1, each used")

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def c(self) -> int:
        return max(self.colors) + 1

    def __getitem__(self, v: int) -> int:
        """Color of the 1-based vertex ``v``."""
        return self.colors[v - 1]

    @classmethod
    def from_labels(cls, labels: Iterable[Any], construction: dict | None = None) -> "Coloring":
        """Relabel arbitrary hashable labels to 0..c-1 in order of first appearance."""
        ids: dict[Any, int] = {}
        cols = [ids.setdefault(x, len(ids)) for x in labels]
        return cls(tuple(cols), construction)

    def restrict(self, n: int) -> "Coloring":
        if not 1 <= n <= self.n:
            raise InvalidArgumentError(f"cannot restrict a coloring of [{self.n}] to [{n}]")
        return Coloring.from_labels(self.colors[:n], self.construction)

    def to_dict(self) -> dict:
        out = {"n": self.n, "colors": list(self.colors), "c": self.c}
        if self.construction is not None:
            out["construction"] = self.construction
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Coloring":
        col = cls(tuple(data["colors"]), data.get("construction"))
        if "n" in data and data["n"] != col.n:
            raise InvalidArgumentError(f"n={data['n']} but {col.n} colors given")
        if "c" in data and data["c"] != col.c:
            raise InvalidArgumentError(f"c={data['c']} but {col.c} distinct colors used")
        return col

    @classmethod
    def from_json(cls, text: str) -> "Coloring":
        return cls.from_dict(json.loads(text))


def _check_size(f: HypergraphFamily, phi: Coloring):
    if phi.n != f.n:
        raise InvalidArgumentError(f"coloring has n={phi.n} but {f} has n={f.n}")


def has_unique_color(colors: Sequence[int]) -> bool:
    return any(colors.count(x) == 1 for x in colors)


def _chunks(stream: Iterator[Hyperedge], size: int) -> Iterator[list[Hyperedge]]:
    while True:
        chunk = list(itertools.islice(stream, size))
        if not chunk:
            return
        yield chunk


def _first_bad_uniform(stream, colors: np.ndarray, conflict_free: bool) -> Hyperedge | None:
    for chunk in _chunks(stream, _CHUNK):
        s = np.sort(colors[np.asarray(chunk) - 1], axis=1)
        if conflict_free:
            neq = s[:, 1:] != s[:, :-1]
            edge = np.ones((len(chunk), 1), dtype=bool)
            left = np.hstack([edge, neq])
            right = np.hstack([neq, edge])
            bad = ~(left & right).any(axis=1)
        else:
            bad = (s[:, 0] == s[:, -1]) if s.shape[1] >= 2 else np.zeros(len(chunk), bool)
        hits = np.flatnonzero(bad)
        if hits.size:
            return chunk[hits[0]]
    return None


def _i2_cf_holds(colors: np.ndarray, c: int) -> bool:
    """Exhaustive CF check over all unions of two intervals of [n] via prefix counts."""
    n = len(colors)
    onehot = np.zeros((n, c), dtype=np.int32)
    onehot[np.arange(n), colors] = 1
    prefix = np.vstack([np.zeros((1, c), np.int32), np.cumsum(onehot, axis=0)])
    # interval counts Q[a, b] for 0 <= a <= b < n
    Q = prefix[None, 1:, :] - prefix[:-1, None, :]
    idx = np.arange(n)
    length = idx[None, :] - idx[:, None] + 1
    valid = length >= 1
    # single intervals of size >= 3
    single_bad = ~(Q == 1).any(axis=2) & (length >= 3)
    if single_bad.any():
        return False
    for a in range(n):
        for b in range(a, n - 2):
            rest = Q[b + 2:, :, :] + Q[a, b][None, None, :]
            size_ok = valid[b + 2:, :] & (length[b + 2:, :] + (b - a + 1) >= 3)
            if (~(rest == 1).any(axis=2) & size_ok).any():
                return False
    return True


def find_cf_violation(f: HypergraphFamily, phi: Coloring) -> Hyperedge | None:
    """Lexicographically first hyperedge with no uniquely colored vertex, or None."""
    _check_size(f, phi)
    colors = np.asarray(phi.colors)
    if f.kind == I2:
        if _i2_cf_holds(colors, phi.c):
            return None
        return next((e for e in enum_hyperedges(f) if not has_unique_color([phi[v] for v in e])), None)
    return _first_bad_uniform(enum_hyperedges(f), colors, conflict_free=True)


def find_proper_violation(f: HypergraphFamily, phi: Coloring) -> Hyperedge | None:
    """Lexicographically first monochromatic hyperedge of size >= 2, or None."""
    _check_size(f, phi)
    if f.uniform_size is None:
        for e in enum_hyperedges(f):
            if len(e) >= 2 and len({phi[v] for v in e}) == 1:
                return e
        return None
    return _first_bad_uniform(enum_hyperedges(f), np.asarray(phi.colors), conflict_free=False)


def is_conflict_free(f: HypergraphFamily, phi: Coloring) -> bool:
    return find_cf_violation(f, phi) is None


def is_proper(f: HypergraphFamily, phi: Coloring) -> bool:
    return find_proper_violation(f, phi) is None


def is_conflict_free_bruteforce(edges: Iterable[Hyperedge], phi: Coloring) -> bool:
    """Plain per-hyperedge check; an independent path for cross-validation."""
    return all(has_unique_color([phi[v] for v in e]) for e in edges)


def spot_check_cf(f: HypergraphFamily, phi: Coloring, samples: int, seed: int = 0) -> Hyperedge | None:
    """Check ``samples`` uniformly random facets of FC_d(n), d even; returns a violation or None."""
    _check_size(f, phi)
    if f.kind != FC or f.d % 2:
        raise InvalidArgumentError(f"spot checks need FC with even d, got {f}")
    rng = random.Random(seed)
    for _ in range(samples):
        e = random_even_facet(f.d, f.n, rng)
        if not has_unique_color([phi[v] for v in e]):
            return e
    return None


@dataclass
class SearchBudget:
    max_nodes: int = 5_000_000


def find_coloring(
    f: HypergraphFamily,
    c: int,
    conflict_free: bool = True,
    budget: SearchBudget | None = None,
    _spent: list[int] | None = None,
) -> Coloring | None:
    """Backtracking search for a (CF or proper) coloring with at most ``c`` colors.

    Vertices are assigned in the order 1..n; vertex i may only use colors up
    to one more than the largest color seen on 1..i-1. A hyperedge is checked
    when its largest vertex is assigned.
    """
    budget = budget or SearchBudget()
    spent = _spent if _spent is not None else [0]
    n = f.n
    by_last: list[list[Hyperedge]] = [[] for _ in range(n)]
    for e in enum_hyperedges(f):
        if not conflict_free and len(e) < 2:
            continue
        by_last[e[-1] - 1].append(tuple(v - 1 for v in e))
    colors = [0] * n

    def ok(v: int) -> bool:
        for e in by_last[v]:
            cols = [colors[u] for u in e]
            if conflict_free:
                if not has_unique_color(cols):
                    return False
            elif len(set(cols)) == 1:
                return False
        return True

    def rec(v: int, top: int) -> bool:
        if v == n:
            return True
        for col in range(min(top + 1, c - 1) + 1):
            spent[0] += 1
            if spent[0] > budget.max_nodes:
                raise ResourceLimitError(f"exact search on {f} exceeded {budget.max_nodes} nodes")
            colors[v] = col
            if ok(v) and rec(v + 1, max(top, col)):
                return True
        return False

    if rec(0, -1):
        return Coloring.from_labels(colors, {"kind": "exact", "c": c})
    return None


def _exact(f: HypergraphFamily, conflict_free: bool, budget: SearchBudget | None) -> Coloring:
    spent = [0]
    for c in range(1, f.n + 1):
        col = find_coloring(f, c, conflict_free, budget, spent)
        if col is not None:
            return col
    raise AssertionError("the all-distinct coloring always works")


def cf_coloring_exact(f: HypergraphFamily, budget: SearchBudget | None = None) -> Coloring:
    """A CF-coloring of ``f`` using the minimum possible number of colors."""
    return _exact(f, True, budget)


def proper_coloring_exact(f: HypergraphFamily, budget: SearchBudget | None = None) -> Coloring:
    return _exact(f, False, budget)


def cf_chromatic_exact(f: HypergraphFamily, budget: SearchBudget | None = None) -> int:
    return cf_coloring_exact(f, budget).c


def chi_exact(f: HypergraphFamily, budget: SearchBudget | None = None) -> int:
    return proper_coloring_exact(f, budget).c
