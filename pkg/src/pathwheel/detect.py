"""Exact subgraph detectors: paths, cycles of given length and wheels.

Containment is always as a (not necessarily induced) subgraph. Searches are
exponential in component order and guarded by ``DetectorLimits``; exceeding a
limit raises ``ResourceLimitError`` instead of answering approximately.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .graphcore import Graph, bits, component_masks, induced

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


class ResourceLimitError(RuntimeError):
    """A configured search limit would be exceeded."""


@dataclass(frozen=True)
class DetectorLimits:
    max_component_order_for_path_dp: int = 24
    max_order_for_cycle_search: int = 16

    def __post_init__(self):
        if self.max_component_order_for_path_dp < 3 or self.max_order_for_cycle_search < 3:
            raise ValueError("detector limits must be >= 3")


DEFAULT_LIMITS = DetectorLimits()


def _check_path_limit(g: Graph, comp: int, limits: DetectorLimits) -> None:
    size = comp.bit_count()
    if size > limits.max_component_order_for_path_dp:
        raise ResourceLimitError(
            f"component of order {size} exceeds path DP limit "
            f"{limits.max_component_order_for_path_dp}"
        )


def _check_cycle_limit(g: Graph, limits: DetectorLimits) -> None:
    if g.order > limits.max_order_for_cycle_search:
        raise ResourceLimitError(
            f"graph of order {g.order} exceeds cycle search limit {limits.max_order_for_cycle_search}"
        )


# -- paths ------------------------------------------------------------------

@lru_cache(maxsize=1 << 16)
def _path_layers(g: Graph, start_mask: int, within: int) -> tuple[dict[int, int], ...]:
    """Layered DP over (vertex subset, endpoint) for paths starting in start_mask.

    Layer k maps each k-vertex subset S to the bitmask of vertices v such that
    some path starting at a vertex of ``start_mask`` visits exactly S and ends at v.
    """
    adj = g.adj
    layer = {1 << v: 1 << v for v in bits(start_mask & within)}
    layers = [{}, layer] if layer else [{}]
    while layer:
        nxt: dict[int, int] = {}
        for mask, ends in layer.items():
            free = within & ~mask
            for v in bits(ends):
                for u in bits(adj[v] & free):
                    key = mask | 1 << u
                    nxt[key] = nxt.get(key, 0) | 1 << u
        if nxt:
            layers.append(nxt)
        layer = nxt
    return tuple(layers)


def _longest_in(g: Graph, comp: int) -> int:
    return len(_path_layers(g, comp, comp)) - 1


def longest_path_order(g: Graph, limits: DetectorLimits = DEFAULT_LIMITS) -> int:
    """Maximum number of vertices on a path in ``g`` (0 for the null graph)."""
    comps = component_masks(g)
    for c in comps:
        _check_path_limit(g, c, limits)
    return max((_longest_in(g, c) for c in comps), default=0)


def _dfs_path(adj, mask: int, end: int, need: int, free: int, dead: set) -> bool:
    if need == 0:
        return True
    for u in bits(adj[end] & free & ~mask):
        key = (mask | 1 << u, u)
        if key in dead:
            continue
        if _dfs_path(adj, mask | 1 << u, u, need - 1, free, dead):
            return True
        dead.add(key)
    return False


def has_path(g: Graph, n: int, limits: DetectorLimits = DEFAULT_LIMITS) -> bool:
    """Whether ``g`` contains a path on ``n`` vertices.

    Components with fewer than ``n`` vertices are skipped outright; the others
    are searched depth-first with memoised dead (subset, endpoint) states,
    which answers quickly on dense graphs and stays within the subset DP bound.
    """
    if n <= 0:
        return True
    for comp in component_masks(g):
        if comp.bit_count() < n:
            continue
        _check_path_limit(g, comp, limits)
        dead: set = set()
        for v in bits(comp):
            if _dfs_path(g.adj, 1 << v, v, n - 1, comp, dead):
                return True
    return False


def anchored_path_profile(g: Graph, x: int, limits: DetectorLimits = DEFAULT_LIMITS) -> tuple[int, ...]:
    """For each vertex y, the most vertices on a path from x to y (0 if none).

    Entry x itself is 1 (the trivial path).
    """
    comp = next(c for c in component_masks(g) if c >> x & 1)
    _check_path_limit(g, comp, limits)
    best = [0] * g.order
    for k, layer in enumerate(_path_layers(g, 1 << x, comp)):
        for ends in layer.values():
            for y in bits(ends):
                best[y] = k
    return tuple(best)


def longest_path_from(g: Graph, x: int, limits: DetectorLimits = DEFAULT_LIMITS) -> int:
    return max(anchored_path_profile(g, x, limits))


# -- cycles -----------------------------------------------------------------

def _dfs_cycle(adj, anchor: int, mask: int, end: int, need: int, free: int, dead: set) -> bool:
    if need == 0:
        return bool(adj[end] >> anchor & 1)
    for u in bits(adj[end] & free & ~mask):
        key = (mask | 1 << u, u)
        if key in dead:
            continue
        if _dfs_cycle(adj, anchor, mask | 1 << u, u, need - 1, free, dead):
            return True
        dead.add(key)
    return False


def _has_cycle_exact(g: Graph, m: int) -> bool:
    if m < 3 or m > g.order:
        return False
    adj = g.adj
    # only vertices of degree >= 2 can lie on a cycle; peel repeatedly
    alive = g.full_mask
    changed = True
    while changed:
        changed = False
        for v in bits(alive):
            if (adj[v] & alive).bit_count() < 2:
                alive &= ~(1 << v)
                changed = True
    for comp in component_masks(g, alive):
        if comp.bit_count() < m:
            continue
        remaining = comp
        # anchor = least vertex of the cycle; later anchors never revisit it
        while remaining.bit_count() >= m:
            anchor = (remaining & -remaining).bit_length() - 1
            free = remaining & ~(1 << anchor)
            if (adj[anchor] & free).bit_count() >= 2:
                if _dfs_cycle(adj, anchor, 1 << anchor, anchor, m - 1, free, set()):
                    return True
            remaining = free
    return False


def has_cycle_exact(g: Graph, m: int, limits: DetectorLimits = DEFAULT_LIMITS) -> bool:
    _check_cycle_limit(g, limits)
    return _has_cycle_exact(g, m)


def longest_cycle_order(g: Graph, limits: DetectorLimits = DEFAULT_LIMITS) -> int:
    """Order of a longest cycle, or 0 when ``g`` is a forest."""
    _check_cycle_limit(g, limits)
    return _longest_cycle(g)


@lru_cache(maxsize=1 << 14)
def _longest_cycle(g: Graph) -> int:
    adj = g.adj
    best = 0
    for anchor in range(g.order):
        higher = g.full_mask & ~((1 << (anchor + 1)) - 1)
        within = higher | 1 << anchor
        for k, layer in enumerate(_path_layers(g, 1 << anchor, within)):
            if k < 3 or k <= best:
                continue
            if any(ends & adj[anchor] for ends in layer.values()):
                best = k
    return best


# -- wheels -----------------------------------------------------------------

def has_wheel(g: Graph, m: int, limits: DetectorLimits = DEFAULT_LIMITS) -> bool:
    """Whether some vertex has a C_m among its neighbours."""
    if m < 3:
        raise ValueError(f"wheel rim needs m >= 3, got {m}")
    _check_cycle_limit(g, limits)
    hubs = sorted(range(g.order), key=lambda v: (-g.adj[v].bit_count(), v))
    for v in hubs:
        if g.adj[v].bit_count() < m:
            break
        if _has_cycle_exact(induced(g, bits(g.adj[v])), m):
            return True
    return False


# -- complete multipartite shortcuts ---------------------------------------

def multipartite_cycle_exists(parts: Sequence[int], m: int) -> bool:
    """Whether the complete multipartite graph with these part sizes contains C_m.

    A complete multipartite graph on m >= 3 vertices is Hamiltonian iff no part
    holds more than half the vertices, so it suffices to pick at most m // 2
    vertices from each part.
    """
    if m < 3:
        raise ValueError(f"cycle length must be >= 3, got {m}")
    if any(p < 1 for p in parts):
        raise ValueError(f"part sizes must be >= 1, got {list(parts)}")
    return sum(min(p, m // 2) for p in parts) >= m


def cliques_complement_has_wheel(parts: Sequence[int], m: int) -> bool:
    """Whether the complement of the disjoint union of cliques K_p contains W_m.

    A hub in part i sees exactly the other parts, which induce a complete
    multipartite graph in the complement.
    """
    if m < 3:
        raise ValueError(f"wheel rim needs m >= 3, got {m}")
    if any(p < 1 for p in parts):
        raise ValueError(f"part sizes must be >= 1, got {list(parts)}")
    parts = list(parts)
    return any(
        multipartite_cycle_exists(parts[:i] + parts[i + 1:], m)
        for i in range(len(parts))
    )
