"""Exhaustive solvers for small instances.

All three maximum-sequence numbers computed here are instances of one
abstract search: pick moves, each move contributes a fixed bitmask to a
running "covered" state, and a move is legal only while it adds at least
one new bit. The longest move sequence equals the quantity of interest:

* graph domination: moves are vertices, masks are closed neighborhoods,
  and a maximal legal sequence always ends with every vertex dominated;
* hypergraph covering: moves are edges, masks are edge vertex sets, and
  with no isolated vertices a maximal legal sequence is an edge cover;
* hypergraph transversal: moves are vertices, masks are the sets of edges
  containing them (a legal move needs a live witnessing edge).

Why memoization on the covered state alone is sound: a move is legal
exactly when its mask escapes the covered state, and the value of a state
is the longest legal continuation from it. Both depend only on the state,
not on which moves built it; in particular a move already taken can never
be retaken, since its whole mask is covered. Two prefixes reaching the
same state therefore have identical futures, so the memo table maps each
covered-state bitset to its exact remaining length. No branch-and-bound
information leaks into the table: entries are finished exhaustive values
(an admissible early exit applies only once a child reaches the hard
"one new bit per move" ceiling, which cannot be exceeded).

States are optionally canonicalized by twin classes: vertices with equal
open or closed neighborhoods are interchangeable under an automorphism,
so a state is mapped to the orbit representative that dominates the
lowest-index members of each class. This collapses the state space on
twin-heavy inputs (complete bipartite blocks, gadget constructions) and
never changes values or the reconstructed witness; tests cross-check it
against the plain keying and against memoization-free search.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    BudgetExceededError,
    IsolatedVertexError,
    SizeCapError,
    VerificationError,
)
from .graph import Graph
from .hypergraph import Hypergraph, is_edge_cover, is_legal_edge_sequence, is_legal_transversal_sequence
from .sequences import VertexSequence, check_closed_neighborhood_sequence

__all__ = [
    "HARD_CAP",
    "SearchResult",
    "grundy_domination_exact",
    "grundy_cover_exact",
    "grundy_transversal_exact",
    "independence_number_exact",
]

HARD_CAP = 20


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an exhaustive search.

    best_sequence is a VertexSequence for graph domination and a tuple of
    move indices (edges or vertices) for the hypergraph variants; it always
    re-verifies through the independent checkers before being returned.
    """

    best_length: int
    best_sequence: VertexSequence | tuple[int, ...]
    nodes_explored: int


# ---- twin classes ----------------------------------------------------------


def _merge_signature_groups(n: int, signatures: list[dict]) -> list[tuple[int, ...]]:
    """Union-find over vertices, merging each signature group; returns the
    classes with at least two members, each sorted ascending."""
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for groups in signatures:
        for members in groups.values():
            root = find(members[0])
            for v in members[1:]:
                parent[find(v)] = root
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(find(v), []).append(v)
    return [tuple(sorted(c)) for c in classes.values() if len(c) > 1]


def graph_twin_classes(g: Graph) -> list[tuple[int, ...]]:
    """Classes of pairwise-interchangeable vertices (open or closed twins)."""
    open_groups: dict[tuple[int, ...], list[int]] = {}
    closed_groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.n):
        row = tuple(g.adjacency[v])
        open_groups.setdefault(row, []).append(v)
        closed_groups.setdefault(tuple(sorted(row + (v,))), []).append(v)
    return _merge_signature_groups(g.n, [open_groups, closed_groups])


def _mask_equal_classes(masks: Sequence[int], count: int) -> list[tuple[int, ...]]:
    groups: dict[int, list[int]] = {}
    for i in range(count):
        groups.setdefault(masks[i], []).append(i)
    return [tuple(g) for g in groups.values() if len(g) > 1]


# ---- core search -----------------------------------------------------------


def _make_canon(classes: list[tuple[int, ...]]):
    """Return a state canonicalizer for the given interchangeability classes."""
    tables = []
    for members in classes:
        class_mask = 0
        prefixes = [0]
        for b in members:
            class_mask |= 1 << b
            prefixes.append(prefixes[-1] | 1 << b)
        tables.append((class_mask, prefixes))

    def canon(state: int) -> int:
        for class_mask, prefixes in tables:
            inside = state & class_mask
            if inside and inside != class_mask:
                state = (state & ~class_mask) | prefixes[inside.bit_count()]
        return state

    return canon


def _longest_sequence(
    masks: Sequence[int],
    full: int,
    classes: list[tuple[int, ...]] | None = None,
    node_budget: int | None = None,
    want_witness: bool = True,
):
    """Longest sequence of moves in which every move adds a new bit.

    Returns (length, move_indices, states_expanded). Candidate order at
    every state: descending size of the move's residual contribution,
    ties by move index; the witness is reconstructed with the same order,
    so outputs are deterministic.
    """
    canon = _make_canon(classes) if classes else None
    memo: dict[int, int] = {}
    nodes = 0

    def value(state: int) -> int:
        nonlocal nodes
        cached = memo.get(state)
        if cached is not None:
            return cached
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise BudgetExceededError(nodes, node_budget)
        ceiling = (full & ~state).bit_count()
        if ceiling == 0:
            memo[state] = 0
            return 0
        candidates = []
        for i, mask in enumerate(masks):
            gain = (mask & ~state).bit_count()
            if gain:
                candidates.append((-gain, i, state | mask))
        candidates.sort()
        best = 0
        seen: set[int] = set()
        for _, _, child in candidates:
            key = canon(child) if canon else child
            if key in seen:
                continue
            seen.add(key)
            v = 1 + value(key)
            if v > best:
                best = v
                if best == ceiling:
                    break
        memo[state] = best
        return best

    total = value(canon(0) if canon else 0)
    moves: list[int] = []
    if want_witness:
        state = 0
        need = total
        while need:
            candidates = []
            for i, mask in enumerate(masks):
                gain = (mask & ~state).bit_count()
                if gain:
                    candidates.append((-gain, i))
            candidates.sort()
            for _, i in candidates:
                child = state | masks[i]
                key = canon(child) if canon else child
                if 1 + value(key) == need:
                    moves.append(i)
                    state = child
                    need -= 1
                    break
            else:  # pragma: no cover - value() guarantees a maximizer exists
                raise VerificationError("witness reconstruction lost the optimum")
    return total, moves, nodes


def _longest_sequence_nomemo(
    masks: Sequence[int],
    full: int,
    node_budget: int | None = None,
):
    """Plain depth-first branch and bound, for cross-checking the memo table.

    Prunes a branch when the current length plus the number of uncovered
    bits cannot beat the best found; keeps the first optimum in search
    order, which matches the memoized reconstruction.
    """
    best = {"length": -1, "moves": ()}
    nodes = 0
    prefix: list[int] = []

    def dfs(state: int) -> None:
        nonlocal nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise BudgetExceededError(nodes, node_budget)
        candidates = []
        for i, mask in enumerate(masks):
            gain = (mask & ~state).bit_count()
            if gain:
                candidates.append((-gain, i, state | mask))
        if not candidates:
            if len(prefix) > best["length"]:
                best["length"] = len(prefix)
                best["moves"] = tuple(prefix)
            return
        if len(prefix) + (full & ~state).bit_count() <= best["length"]:
            return
        candidates.sort()
        for _, i, child in candidates:
            prefix.append(i)
            dfs(child)
            prefix.pop()

    dfs(0)
    return best["length"], list(best["moves"]), nodes


# ---- public solvers --------------------------------------------------------


def grundy_domination_exact(
    g: Graph,
    node_budget: int | None = None,
    hard_cap: int = HARD_CAP,
    memoize: bool = True,
    orbit_reduction: bool = True,
) -> SearchResult:
    """Maximum length of a dominating sequence, by exhaustive search.

    Raises SizeCapError beyond hard_cap vertices and BudgetExceededError
    when node_budget runs out; never returns a silent lower bound. The
    memoize/orbit_reduction switches exist for cross-checking and change
    neither the value nor the witness.
    """
    if g.n > hard_cap:
        raise SizeCapError(g.n, hard_cap)
    masks = [_closed_mask(g, v) for v in range(g.n)]
    full = (1 << g.n) - 1
    if memoize:
        classes = graph_twin_classes(g) if orbit_reduction else None
        length, moves, nodes = _longest_sequence(masks, full, classes, node_budget)
    else:
        length, moves, nodes = _longest_sequence_nomemo(masks, full, node_budget)
    seq = check_closed_neighborhood_sequence(g, moves)
    if len(seq) != length or seq.covered() != g.n:
        raise VerificationError(
            f"search claimed length {length} but witness re-verification disagrees"
        )
    return SearchResult(length, seq, nodes)


def _closed_mask(g: Graph, v: int) -> int:
    mask = 1 << v
    for u in g.adjacency[v]:
        mask |= 1 << u
    return mask


def grundy_cover_exact(
    h: Hypergraph,
    node_budget: int | None = None,
    hard_cap: int = HARD_CAP,
    orbit_reduction: bool = True,
) -> SearchResult:
    """Maximum length of an edge covering sequence, by exhaustive search."""
    if h.m > hard_cap:
        raise SizeCapError(h.m, hard_cap, what="edges")
    isolated = h.isolated_vertices()
    if isolated:
        raise IsolatedVertexError(isolated[0], "every vertex must lie in some edge")
    full = (1 << h.n) - 1
    classes = _mask_equal_classes(h.vertex_masks, h.n) if orbit_reduction else None
    length, moves, nodes = _longest_sequence(h.edge_masks, full, classes, node_budget)
    order = tuple(moves)
    if not is_legal_edge_sequence(h, order) or not is_edge_cover(h, order):
        raise VerificationError("edge sequence witness failed re-verification")
    if len(order) != length:
        raise VerificationError("edge sequence witness has the wrong length")
    return SearchResult(length, order, nodes)


def grundy_transversal_exact(
    h: Hypergraph,
    node_budget: int | None = None,
    hard_cap: int = HARD_CAP,
    orbit_reduction: bool = True,
) -> SearchResult:
    """Maximum length of a legal transversal sequence, by exhaustive search."""
    if h.m > hard_cap:
        raise SizeCapError(h.m, hard_cap, what="edges")
    full = (1 << h.m) - 1
    classes = _mask_equal_classes(h.edge_masks, h.m) if orbit_reduction else None
    length, moves, nodes = _longest_sequence(h.vertex_masks, full, classes, node_budget)
    order = tuple(moves)
    if not is_legal_transversal_sequence(h, order):
        raise VerificationError("transversal witness failed re-verification")
    if len(order) != length:
        raise VerificationError("transversal witness has the wrong length")
    return SearchResult(length, order, nodes)


def independence_number_exact(g: Graph, hard_cap: int = HARD_CAP) -> int:
    """Brute-force maximum independent set size."""
    if g.n > hard_cap:
        raise SizeCapError(g.n, hard_cap)
    reach = [_closed_mask(g, v) for v in range(g.n)]
    memo: dict[int, int] = {}

    def best(avail: int) -> int:
        if avail == 0:
            return 0
        cached = memo.get(avail)
        if cached is not None:
            return cached
        v = (avail & -avail).bit_length() - 1
        result = max(best(avail & ~(1 << v)), 1 + best(avail & ~reach[v]))
        memo[avail] = result
        return result

    return best((1 << g.n) - 1)


def max_sequence_length(masks: Sequence[int], full: int) -> int:
    """Value-only entry point for sweeps that do not need a witness."""
    length, _, _ = _longest_sequence(masks, full, want_witness=False)
    return length


def rho_tau_values(h: Hypergraph) -> tuple[int, int]:
    """Covering and transversal numbers without witnesses, for bulk sweeps.

    The two values are computed through independent mask families (edge
    masks over vertices, vertex masks over edges); their equality is a
    theorem, not an artifact of shared code paths.
    """
    rho = max_sequence_length(h.edge_masks, (1 << h.n) - 1)
    tau = max_sequence_length(h.vertex_masks, (1 << h.m) - 1)
    return rho, tau
