"""Shared builders and independent brute-force oracles.

The oracles here deliberately avoid the package's bitset machinery: they
work over plain Python sets and explicit enumeration, so they can serve as
ground truth for the solvers.
"""
from __future__ import annotations

import itertools

import pytest

from grundy import Graph, Hypergraph


# ---- small graph builders --------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, list(itertools.combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    """Center is vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# The worked hypergraph used across the reduction tests: four vertices,
# five edges, covering number witnesses small enough to check by hand.
def sample_hypergraph() -> Hypergraph:
    return Hypergraph(4, [(0, 1, 3), (1, 2), (0, 1), (1, 2, 3), (0, 2, 3)])


# ---- independent oracles ---------------------------------------------------


def brute_gamma(g: Graph) -> int:
    """Longest dominating sequence by exhaustive extension over sets."""
    closed = [set(g.neighbors(v)) | {v} for v in range(g.n)]
    best = 0

    def extend(dominated: set[int], length: int) -> None:
        nonlocal best
        extended = False
        for v in range(g.n):
            fresh = closed[v] - dominated
            if fresh:
                extended = True
                extend(dominated | fresh, length + 1)
        if not extended and length > best:
            best = length

    extend(set(), 0)
    return best


def brute_rho(h: Hypergraph) -> int:
    """Longest edge covering sequence by exhaustive extension over sets."""
    ground = set(range(h.n))
    members = [set(e) for e in h.edges]
    best = 0

    def extend(covered: set[int], length: int) -> None:
        nonlocal best
        extended = False
        for edge in members:
            if edge - covered:
                extended = True
                extend(covered | edge, length + 1)
        if not extended:
            if covered == ground and length > best:
                best = length

    extend(set(), 0)
    return best


def brute_tau(h: Hypergraph) -> int:
    """Longest legal transversal sequence by exhaustive extension."""
    members = [set(e) for e in h.edges]
    best = 0

    def extend(chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) > best:
            best = len(chosen)
        taken = set(chosen)
        for v in range(h.n):
            if v in taken:
                continue
            if any(v in e and not (e & taken) for e in members):
                extend(chosen + [v])

    extend([])
    return best


def brute_alpha(g: Graph) -> int:
    """Maximum independent set by subset enumeration."""
    best = 0
    vertices = list(range(g.n))
    for bits in range(1 << g.n):
        chosen = [v for v in vertices if bits >> v & 1]
        if len(chosen) <= best:
            continue
        if all(not g.has_edge(u, v) for u, v in itertools.combinations(chosen, 2)):
            best = len(chosen)
    return best


def all_legal_sequences(g: Graph, max_len: int):
    """Yield every legal sequence of length at most max_len."""
    closed = [set(g.neighbors(v)) | {v} for v in range(g.n)]

    def extend(prefix: list[int], dominated: set[int]):
        yield list(prefix)
        if len(prefix) == max_len:
            return
        for v in range(g.n):
            fresh = closed[v] - dominated
            if fresh:
                prefix.append(v)
                yield from extend(prefix, dominated | fresh)
                prefix.pop()

    for seq in extend([], set()):
        if seq:
            yield seq


@pytest.fixture
def sample_h() -> Hypergraph:
    return sample_hypergraph()
