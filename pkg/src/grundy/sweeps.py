"""Bulk verification sweeps over exhaustive and seeded instance families.

Each sweep pits two independent computations against each other across a
whole family (fast chain solver vs exhaustive search, covering vs
transversal numbers, gadget vs source). Workers are plain module-level
functions over compact descriptors so the sweeps can fan out across
processes with --jobs.

The exhaustive duality family enumerates distinct-edge hypergraphs only:
a duplicated edge can never contribute a new vertex and never supplies a
new witness, so duplicate-edge instances have the same covering and
transversal numbers as their deduplicated form.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .chain import (
    grundy_chain,
    independence_number_chain,
    recognize_chain,
)
from .exact import (
    grundy_cover_exact,
    grundy_domination_exact,
    grundy_transversal_exact,
    independence_number_exact,
    rho_tau_values,
)
from .generators import (
    ChainProfile,
    chain_from_profile,
    random_chain_profile,
    random_graph,
    random_hypergraph,
    XorShift64Star,
)
from .graph import Graph
from .hypergraph import Hypergraph
from .reductions import graph_to_cobipartite, hypergraph_to_bipartite
from .sequences import check_closed_neighborhood_sequence, check_subset_ordering

__all__ = [
    "SweepOutcome",
    "ChainSweepReport",
    "exhaustive_profiles",
    "acceptance_profiles",
    "chain_sweep",
    "duality_exhaustive_sweep",
    "duality_random_sweep",
    "exhaustive_hypergraphs",
    "random_reduction_hypergraphs",
    "bipartite_equivalence_sweep",
    "exhaustive_graphs",
    "random_reduction_graphs",
    "cobipartite_equivalence_sweep",
]


@dataclass
class SweepOutcome:
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "SweepOutcome") -> None:
        self.checked += other.checked
        self.failures.extend(other.failures)


def _run_tasks(worker, tasks, jobs: int | None, chunksize: int = 1):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(worker, tasks, chunksize=chunksize)
    else:
        yield from map(worker, tasks)


# ---- chain family ----------------------------------------------------------


def exhaustive_profiles(
    max_k: int = 4, max_part: int = 3, max_vertices: int = 16
) -> list[ChainProfile]:
    """Every twin-class profile with k <= max_k, parts <= max_part and the
    stated vertex budget."""
    out = []
    for k in range(1, max_k + 1):
        for sizes_x in itertools.product(range(1, max_part + 1), repeat=k):
            sx = sum(sizes_x)
            for sizes_y in itertools.product(range(1, max_part + 1), repeat=k):
                if sx + sum(sizes_y) <= max_vertices:
                    out.append(ChainProfile(sizes_x, sizes_y))
    return out


def acceptance_profiles(random_count: int = 1000, max_vertices: int = 18, seed: int = 1):
    """Exhaustive small profiles plus the seeded random batch."""
    profiles = exhaustive_profiles()
    profiles.extend(
        random_chain_profile(max_vertices, seed + i) for i in range(random_count)
    )
    return profiles


@dataclass
class ChainSweepReport:
    checked: int = 0
    gamma_mismatches: list[str] = field(default_factory=list)
    witness_failures: list[str] = field(default_factory=list)
    alpha_mismatches: list[str] = field(default_factory=list)
    sandwich_failures: list[str] = field(default_factory=list)
    structure_failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.gamma_mismatches
            or self.witness_failures
            or self.alpha_mismatches
            or self.sandwich_failures
            or self.structure_failures
        )


def _observation_identities_hold(cs) -> bool:
    """N(X_i) must equal Y_1..Y_i and N(Y_j) must equal X_j..X_k."""
    g = cs.graph
    y_prefix: set[int] = set()
    for i, part in enumerate(cs.x_parts):
        y_prefix.update(cs.y_parts[i])
        neigh = set()
        for v in part:
            neigh.update(g.adjacency[v])
        if neigh != y_prefix:
            return False
    x_suffix: set[int] = set()
    for j in range(cs.k - 1, -1, -1):
        x_suffix.update(cs.x_parts[j])
        neigh = set()
        for v in cs.y_parts[j]:
            neigh.update(g.adjacency[v])
        if neigh != x_suffix:
            return False
    return True


def _chain_case(task):
    sizes_x, sizes_y, alpha_cap = task
    profile = ChainProfile(sizes_x, sizes_y)
    label = f"X{sizes_x}/Y{sizes_y}"
    g = chain_from_profile(profile)
    cs = recognize_chain(g)
    result = {
        "label": label,
        "gamma_ok": True,
        "witness_ok": True,
        "alpha_ok": True,
        "sandwich_ok": True,
        "structure_ok": True,
    }
    recovered = (
        tuple(len(p) for p in cs.x_parts),
        tuple(len(p) for p in cs.y_parts),
    )
    if recovered not in ((sizes_x, sizes_y), (sizes_y, sizes_x)):
        result["structure_ok"] = False
    if not _observation_identities_hold(cs):
        result["structure_ok"] = False

    seq = grundy_chain(cs)
    gamma_chain = len(seq)
    exact = grundy_domination_exact(g)
    if gamma_chain != exact.best_length:
        result["gamma_ok"] = False
        result["label"] += f" chain={gamma_chain} exact={exact.best_length}"
    checked_seq = check_closed_neighborhood_sequence(g, seq.order)
    if checked_seq.covered() != g.n or not check_subset_ordering(g, checked_seq):
        result["witness_ok"] = False

    alpha_chain = independence_number_chain(cs)
    if gamma_chain - alpha_chain not in (0, 1):
        result["sandwich_ok"] = False
    if g.n <= alpha_cap and independence_number_exact(g) != alpha_chain:
        result["alpha_ok"] = False
    return result


def chain_sweep(
    profiles, jobs: int | None = None, alpha_cap: int = 14
) -> ChainSweepReport:
    """Compare the chain solver against exhaustive search over a family,
    checking witnesses, twin-partition identities and the independence
    number on the way."""
    report = ChainSweepReport()
    tasks = [(p.sizes_x, p.sizes_y, alpha_cap) for p in profiles]
    for res in _run_tasks(_chain_case, tasks, jobs, chunksize=16):
        report.checked += 1
        if not res["gamma_ok"]:
            report.gamma_mismatches.append(res["label"])
        if not res["witness_ok"]:
            report.witness_failures.append(res["label"])
        if not res["alpha_ok"]:
            report.alpha_mismatches.append(res["label"])
        if not res["sandwich_ok"]:
            report.sandwich_failures.append(res["label"])
        if not res["structure_ok"]:
            report.structure_failures.append(res["label"])
    return report


# ---- covering / transversal duality ----------------------------------------


def _brute_max_len(masks: tuple[int, ...], full: int) -> int:
    """Longest add-something-new sequence, by plain depth-first search.

    Independent of the memoized engine; prunes only through the hard
    "one new bit per move" ceiling, so the maximum stays exact.
    """
    best = 0

    def go(state: int, depth: int) -> None:
        nonlocal best
        if depth > best:
            best = depth
        if depth + (full & ~state).bit_count() <= best:
            return
        for mask in masks:
            if mask & ~state:
                go(state | mask, depth + 1)

    go(0, 0)
    return best


def _dual_case(task):
    """Check tau == rho for a block of edge-mask tuples on n vertices."""
    n, instances, engine_stride = task
    checked = 0
    failures = []
    for idx, edge_masks in enumerate(instances):
        rho = _brute_max_len(edge_masks, (1 << n) - 1)
        m = len(edge_masks)
        vertex_masks = tuple(
            sum(1 << j for j, em in enumerate(edge_masks) if em >> v & 1)
            for v in range(n)
        )
        tau = _brute_max_len(vertex_masks, (1 << m) - 1)
        checked += 1
        if rho != tau:
            failures.append(f"n={n} masks={edge_masks} rho={rho} tau={tau}")
            continue
        if engine_stride and idx % engine_stride == 0:
            h = Hypergraph(n, [_mask_to_edge(em) for em in edge_masks])
            engine_rho, engine_tau = rho_tau_values(h)
            if (engine_rho, engine_tau) != (rho, tau):
                failures.append(
                    f"engine disagrees on n={n} masks={edge_masks}: "
                    f"brute ({rho},{tau}) vs engine ({engine_rho},{engine_tau})"
                )
    return checked, failures


def _mask_to_edge(mask: int) -> list[int]:
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def duality_exhaustive_sweep(
    n_max: int = 6,
    m_max: int = 5,
    jobs: int | None = None,
    engine_stride: int = 4096,
    block: int = 4096,
) -> SweepOutcome:
    """tau == rho over every distinct-edge hypergraph with no isolated
    vertex, n <= n_max and at most m_max edges. Every engine_stride-th
    instance is recomputed with the memoized engine as a cross-check."""
    outcome = SweepOutcome()

    def tasks():
        for n in range(1, n_max + 1):
            full = (1 << n) - 1
            universe = list(range(1, 1 << n))
            for m in range(1, m_max + 1):
                buf = []
                for combo in itertools.combinations(universe, m):
                    union = 0
                    for em in combo:
                        union |= em
                    if union == full:
                        buf.append(combo)
                        if len(buf) == block:
                            yield (n, buf, engine_stride)
                            buf = []
                if buf:
                    yield (n, buf, engine_stride)

    for checked, failures in _run_tasks(_dual_case, tasks(), jobs):
        outcome.checked += checked
        outcome.failures.extend(failures)
    return outcome


def _dual_random_case(task):
    n, m, seed = task
    h = random_hypergraph(n, m, seed)
    rho = grundy_cover_exact(h)
    tau = grundy_transversal_exact(h)
    if rho.best_length != tau.best_length:
        return 1, [f"seed={seed} n={n} m={m} rho={rho.best_length} tau={tau.best_length}"]
    return 1, []


def duality_random_sweep(
    count: int = 500,
    n_max: int = 8,
    m_max: int = 6,
    seed: int = 11,
    jobs: int | None = None,
) -> SweepOutcome:
    """tau == rho on seeded random hypergraphs, through the full public
    solvers including witness re-verification."""
    rng = XorShift64Star(seed)
    tasks = []
    for i in range(count):
        n = 2 + rng.next_below(n_max - 1)
        m = 2 + rng.next_below(m_max - 1)
        tasks.append((n, m, seed + 1000 + i))
    outcome = SweepOutcome()
    for checked, failures in _run_tasks(_dual_random_case, tasks, jobs, chunksize=32):
        outcome.checked += checked
        outcome.failures.extend(failures)
    return outcome


# ---- gadget equivalence ----------------------------------------------------


def exhaustive_hypergraphs(n_values=(2, 3, 4), m_values=(2, 3)) -> list[Hypergraph]:
    """Every edge multiset (duplicates allowed, order canonical) covering
    the ground set, for the given vertex and edge counts. Duplicates matter
    here: the gadget gets one vertex pair per edge occurrence."""
    out = []
    for n in n_values:
        full = (1 << n) - 1
        universe = [_mask_to_edge(mask) for mask in range(1, 1 << n)]
        for m in m_values:
            for combo in itertools.combinations_with_replacement(universe, m):
                union = 0
                for edge in combo:
                    for v in edge:
                        union |= 1 << v
                if union == full:
                    out.append(Hypergraph(n, combo))
    return out


def random_reduction_hypergraphs(
    count: int = 200, seed: int = 23, n_max: int = 5, m_max: int = 4
) -> list[Hypergraph]:
    rng = XorShift64Star(seed)
    out = []
    for i in range(count):
        n = 2 + rng.next_below(n_max - 1)
        m = 2 + rng.next_below(m_max - 1)
        out.append(random_hypergraph(n, m, seed + 5000 + i))
    return out


def _bipartite_case(task):
    n, edges = task
    h = Hypergraph(n, edges)
    rho = grundy_cover_exact(h).best_length
    gadget = hypergraph_to_bipartite(h)
    gamma = grundy_domination_exact(gadget.target).best_length
    expected = n + h.m + rho
    if gamma != expected:
        return 1, [f"n={n} edges={edges}: gamma={gamma} expected {expected}"]
    return 1, []


def bipartite_equivalence_sweep(hypergraphs, jobs: int | None = None) -> SweepOutcome:
    """gamma of the bipartite gadget must exceed n+m by exactly rho."""
    tasks = [(h.n, h.edges) for h in hypergraphs]
    outcome = SweepOutcome()
    for checked, failures in _run_tasks(_bipartite_case, tasks, jobs, chunksize=4):
        outcome.checked += checked
        outcome.failures.extend(failures)
    return outcome


def exhaustive_graphs(n_max: int = 5) -> list[Graph]:
    """Every labeled graph on 1..n_max vertices."""
    out = []
    for n in range(1, n_max + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            out.append(Graph.from_edges(n, edges))
    return out


def random_reduction_graphs(count: int = 200, seed: int = 37, n_max: int = 8) -> list[Graph]:
    rng = XorShift64Star(seed)
    out = []
    for i in range(count):
        n = 1 + rng.next_below(n_max)
        prob = (1 + rng.next_below(9)) / 10
        out.append(random_graph(n, prob, seed + 9000 + i))
    return out


def _cobipartite_case(task):
    n, edges = task
    g = Graph.from_edges(n, edges)
    gamma_src = grundy_domination_exact(g).best_length
    gadget = graph_to_cobipartite(g)
    gamma_gadget = grundy_domination_exact(gadget.target).best_length
    if gamma_src != gamma_gadget:
        return 1, [f"n={n} edges={edges}: source={gamma_src} gadget={gamma_gadget}"]
    return 1, []


def cobipartite_equivalence_sweep(graphs, jobs: int | None = None) -> SweepOutcome:
    """gamma of the co-bipartite gadget must equal gamma of the source."""
    tasks = [(g.n, tuple(g.edges())) for g in graphs]
    outcome = SweepOutcome()
    for checked, failures in _run_tasks(_cobipartite_case, tasks, jobs, chunksize=8):
        outcome.checked += checked
        outcome.failures.extend(failures)
    return outcome
