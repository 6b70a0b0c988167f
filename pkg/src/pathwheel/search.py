"""Exhaustive upper-bound checks for R(P_n, W_m) on small vertex counts.

A P_n-free graph is a disjoint union of connected P_n-free pieces, so the
search builds an isomorph-free catalogue of connected pieces once (vertex
augmentation, pruned by ``has_path`` since P_n-freeness is hereditary) and
composes multisets of pieces with the required total order.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from . import detect
from .detect import DEFAULT_LIMITS, DetectorLimits, ResourceLimitError
from .formula import ramsey_path_wheel
from .graphcore import Graph, bits, complement, disjoint_union, to_graph6
from .witness import CliquePartition, WitnessReport, clique_partition, verify_witness

DEFAULT_BUDGET = 1_000_000
CANON_LEAF_BUDGET = 200_000


class SearchLimitError(ResourceLimitError):
    """Search budget exhausted; ``progress`` records how far it got."""

    def __init__(self, message: str, progress: dict):
        super().__init__(message)
        self.progress = progress


# -- canonical form ---------------------------------------------------------

def _refine(adj, colors: list[int]) -> list[int]:
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in bits(adj[v]))))
            for v in range(len(adj))
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


def _individualize(colors: list[int], v: int) -> list[int]:
    keys = [(c, 0 if w == v else 1) for w, c in enumerate(colors)]
    rank = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [rank[k] for k in keys]


def _leaf_code(adj, colors: list[int]) -> int:
    inv = [0] * len(colors)
    for v, c in enumerate(colors):
        inv[c] = v
    code = 0
    for j in range(len(adj)):
        row = adj[inv[j]]
        for i in range(j):
            code = code << 1 | (row >> inv[i] & 1)
    return code


def canonical_code(g: Graph, leaf_budget: int = CANON_LEAF_BUDGET) -> tuple[int, int]:
    """Isomorphism-invariant key ``(order, code)``.

    ``code`` is the least upper-triangle adjacency code (graph6 bit order, first
    bit most significant) over the vertex orderings reached by colour refinement
    and individualisation. Twins in the branching cell are explored once, since
    swapping two twins is an automorphism that fixes the current colouring.
    """
    adj = g.adj
    n = g.order
    if n <= 1:
        return (n, 0)
    best: list[Optional[int]] = [None]
    leaves = [0]

    def search(colors: list[int]) -> None:
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min((c for c, k in counts.items() if k > 1), default=None)
        if target is None:
            leaves[0] += 1
            if leaves[0] > leaf_budget:
                raise ResourceLimitError(f"canonical labelling exceeded {leaf_budget} leaves")
            code = _leaf_code(adj, colors)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        reps: list[int] = []
        for v in range(n):
            if colors[v] != target:
                continue
            if any(adj[v] == adj[u] or adj[v] | 1 << v == adj[u] | 1 << u for u in reps):
                continue
            reps.append(v)
            search(_refine(adj, _individualize(colors, v)))

    search(_refine(adj, [0] * n))
    return (n, best[0])


def graph_from_code(order: int, code: int) -> Graph:
    pairs = [(i, j) for j in range(order) for i in range(j)]
    total = len(pairs)
    return Graph.from_edges(order, (p for k, p in enumerate(pairs) if code >> (total - 1 - k) & 1))


def canonical_form(g: Graph) -> Graph:
    return graph_from_code(*canonical_code(g))


# -- catalogues -------------------------------------------------------------

def _augment(reps: list[Graph], allow_isolated: bool, keep, budget: int, progress: dict) -> list[Graph]:
    found: dict[tuple[int, int], Graph] = {}
    for g in reps:
        k = g.order
        for s in range(0 if allow_isolated else 1, 1 << k):
            progress["candidates"] += 1
            if progress["candidates"] > budget:
                raise SearchLimitError(f"catalogue generation exceeded budget {budget}", dict(progress))
            rows = list(g.adj)
            for u in bits(s):
                rows[u] |= 1 << k
            rows.append(s)
            h = Graph(k + 1, tuple(rows))
            if not keep(h):
                continue
            key = canonical_code(h)
            if key not in found:
                found[key] = graph_from_code(*key)
    return [found[key] for key in sorted(found)]


@lru_cache(maxsize=None)
def all_graph_classes(max_order: int, budget: int = DEFAULT_BUDGET) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class, orders 1..max_order."""
    progress = {"candidates": 0}
    level = [Graph(1, (0,))] if max_order >= 1 else []
    out = list(level)
    for _ in range(2, max_order + 1):
        level = _augment(level, True, lambda h: True, budget, progress)
        out.extend(level)
    return tuple(out)


@lru_cache(maxsize=None)
def _connected_catalogue(n: int, max_order: int, limits: DetectorLimits, budget: int) -> tuple[Graph, ...]:
    if n < 2:
        raise ValueError(f"path order must be >= 2, got {n}")
    progress = {"candidates": 0}
    level = [Graph(1, (0,))] if max_order >= 1 else []
    out = list(level)
    for _ in range(2, max_order + 1):
        level = _augment(level, False, lambda h: not detect.has_path(h, n, limits), budget, progress)
        if not level:
            break
        out.extend(level)
    return tuple(out)


def enum_connected_path_free(
    n: int, max_order: int, limits: DetectorLimits = DEFAULT_LIMITS, budget: int = DEFAULT_BUDGET
) -> Iterator[Graph]:
    """Connected graphs of order <= max_order with no P_n, one per isomorphism class."""
    yield from _connected_catalogue(n, max_order, limits, budget)


def _count_multisets(orders: list[int], total: int) -> int:
    ways = [1] + [0] * total
    for o in orders:
        for s in range(o, total + 1):
            ways[s] += ways[s - o]
    return ways[total]


def _multisets(orders: list[int], remaining: int, top: int) -> Iterator[list[int]]:
    if remaining == 0:
        yield []
        return
    for i in range(top, -1, -1):
        if orders[i] <= remaining:
            for rest in _multisets(orders, remaining - orders[i], i):
                yield [i] + rest


def count_path_free(n: int, t: int, limits: DetectorLimits = DEFAULT_LIMITS, budget: int = DEFAULT_BUDGET) -> int:
    cat = _connected_catalogue(n, t, limits, budget)
    return _count_multisets([g.order for g in cat], t)


def enum_path_free(
    n: int, t: int, limits: DetectorLimits = DEFAULT_LIMITS, budget: int = DEFAULT_BUDGET
) -> Iterator[Graph]:
    """P_n-free graphs on exactly t vertices, one per multiset of connected pieces.

    Largest catalogue entries come first; the order is fixed for given arguments.
    """
    cat = _connected_catalogue(n, t, limits, budget)
    orders = [g.order for g in cat]
    for idx in _multisets(orders, t, len(cat) - 1):
        yield disjoint_union([cat[i] for i in idx])


# -- upper bound --------------------------------------------------------------

@dataclass(frozen=True)
class SearchReport:
    n: int
    m: int
    t: int
    verified: bool
    graphs_enumerated: int
    counterexample: Optional[Graph] = None
    elapsed: float = field(default=0.0, compare=False)

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "n": self.n,
            "m": self.m,
            "t": self.t,
            "verified": self.verified,
            "graphs_enumerated": self.graphs_enumerated,
            "counterexample": None if self.counterexample is None
            else to_graph6(self.counterexample).decode("ascii"),
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 3)
        return d


def _complement_has_wheel(args) -> bool:
    g, m, limits = args
    return detect.has_wheel(complement(g), m, limits)


def _complement_wheels(graphs: list[Graph], m: int, limits: DetectorLimits) -> list[bool]:
    return [_complement_has_wheel((g, m, limits)) for g in graphs]


def verify_upper_bound(
    n: int,
    m: int,
    t: int,
    limits: DetectorLimits = DEFAULT_LIMITS,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> SearchReport:
    """Check that every P_n-free graph on t vertices has W_m in its complement.

    The first failing graph in generation order is returned as the
    counterexample, whatever the number of workers.
    """
    if n < 2 or m < 3 or t < 1:
        raise ValueError(f"need n >= 2, m >= 3, t >= 1, got n={n}, m={m}, t={t}")
    if t > limits.max_order_for_cycle_search:
        raise ResourceLimitError(
            f"t={t} exceeds cycle search limit {limits.max_order_for_cycle_search}"
        )
    start = time.perf_counter()
    total = count_path_free(n, t, limits, budget)
    if total > budget:
        raise SearchLimitError(
            f"{total} P_{n}-free graphs on {t} vertices exceed budget {budget}",
            {"catalogue_done": True, "graphs_enumerated": 0, "estimated": total},
        )
    graphs = list(enum_path_free(n, t, limits, budget))
    if workers <= 1:
        for i, g in enumerate(graphs):
            if not _complement_has_wheel((g, m, limits)):
                return SearchReport(n, m, t, False, i + 1, g, time.perf_counter() - start)
        return SearchReport(n, m, t, True, len(graphs), None, time.perf_counter() - start)

    batch = 64 * workers
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for lo in range(0, len(graphs), batch):
            chunk = graphs[lo:lo + batch]
            flags = list(pool.map(_complement_has_wheel, [(g, m, limits) for g in chunk], chunksize=16))
            for j, ok in enumerate(flags):
                if not ok:
                    i = lo + j
                    return SearchReport(n, m, t, False, i + 1, graphs[i], time.perf_counter() - start)
    return SearchReport(n, m, t, True, len(graphs), None, time.perf_counter() - start)


@dataclass(frozen=True)
class ConfirmReport:
    n: int
    m: int
    R: int
    upper_verified: bool
    witness: CliquePartition
    witness_report: WitnessReport
    upper: SearchReport

    def to_dict(self, timing: bool = False) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "R": self.R,
            "upper_verified": self.upper_verified,
            "witness": list(self.witness.parts),
            "witness_verified": self.witness_report.path_free and self.witness_report.wheel_free,
            "upper": self.upper.to_dict(timing),
        }


def confirm_ramsey(
    n: int,
    m: int,
    limits: DetectorLimits = DEFAULT_LIMITS,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> ConfirmReport:
    if n < 2 or m < 2 * n + 1:
        raise ValueError(f"confirmation needs n >= 2 and m >= 2n+1, got n={n}, m={m}")
    r = ramsey_path_wheel(n, m).value
    upper = verify_upper_bound(n, m, r, limits, budget, workers)
    part = clique_partition(n, m)
    wrep = verify_witness(n, m, part, limits)
    return ConfirmReport(n, m, r, upper.verified, part, wrep, upper)
