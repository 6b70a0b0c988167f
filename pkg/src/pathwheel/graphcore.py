"""Finite simple undirected graphs as immutable bitmask adjacency rows."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """A simple graph on vertices 0..order-1.

    ``adj[v]`` is an int whose bit u is set iff uv is an edge.
    """

    order: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0 or len(self.adj) != self.order:
            raise ValueError("adjacency length must equal order")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row >> v & 1:
                raise ValueError(f"row {v} has out-of-range or self-loop bits")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * order
        for u, v in edges:
            if u == v or not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"bad edge ({u}, {v}) for order {order}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @cached_property
    def size(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def __repr__(self):
        return f"Graph(order={self.order}, edges={self.edges()})"


# -- builders ---------------------------------------------------------------

def _check_size(k: int) -> None:
    if k < 0:
        raise ValueError(f"size must be >= 0, got {k}")


def empty(k: int) -> Graph:
    _check_size(k)
    return Graph(k, (0,) * k)


def complete(k: int) -> Graph:
    _check_size(k)
    full = (1 << k) - 1
    return Graph(k, tuple(full ^ (1 << v) for v in range(k)))


def path(k: int) -> Graph:
    _check_size(k)
    return Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError(f"cycle needs k >= 3, got {k}")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def star(k: int) -> Graph:
    """K_{1,k-1}: vertex 0 joined to the other k-1 vertices."""
    _check_size(k)
    return Graph.from_edges(k, ((0, i) for i in range(1, k)))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    for p in parts:
        _check_size(p)
    k = sum(parts)
    full = (1 << k) - 1
    rows = []
    start = 0
    for p in parts:
        block = ((1 << p) - 1) << start
        rows.extend([full & ~block] * p)
        start += p
    return Graph(k, tuple(rows))


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    rows: list[int] = []
    shift = 0
    for g in graphs:
        rows.extend(row << shift for row in g.adj)
        shift += g.order
    return Graph(shift, tuple(rows))


def clique_union(parts: Sequence[int]) -> Graph:
    for p in parts:
        _check_size(p)
    return disjoint_union([complete(p) for p in parts])


def build(kind: str, *params) -> Graph:
    builders = {
        "empty": empty,
        "complete": complete,
        "path": path,
        "cycle": cycle,
        "star": star,
        "complete_multipartite": complete_multipartite,
        "disjoint_union": disjoint_union,
        "clique_union": clique_union,
    }
    try:
        fn = builders[kind]
    except KeyError:
        raise ValueError(f"unknown graph kind {kind!r}") from None
    return fn(*params)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# -- derived graphs ---------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph, relabelled 0.. in increasing original index order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.order:
            raise ValueError(f"vertex {v} out of range for order {g.order}")
    pos = {v: i for i, v in enumerate(vs)}
    rows = []
    for v in vs:
        row = 0
        for u in bits(g.adj[v]):
            if u in pos:
                row |= 1 << pos[u]
        rows.append(row)
    return Graph(len(vs), tuple(rows))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise ValueError("self-loop")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.order, tuple(rows))


def remove_vertex(g: Graph, v: int) -> Graph:
    return induced(g, (u for u in range(g.order) if u != v))


# -- structural queries -----------------------------------------------------

def degree(g: Graph, v: int) -> int:
    return g.adj[v].bit_count()


def min_degree(g: Graph) -> int:
    if g.order == 0:
        raise ValueError("minimum degree of the null graph is undefined")
    return min(row.bit_count() for row in g.adj)


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Components of the subgraph induced on ``within`` (default: all), as bitmasks,
    ordered by least vertex."""
    remaining = g.full_mask if within is None else within
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(bits(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) == 1


def cut_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose removal increases the number of components."""
    base = len(component_masks(g))
    full = g.full_mask
    return frozenset(
        v for v in range(g.order) if len(component_masks(g, full & ~(1 << v))) > base
    )


def is_two_connected(g: Graph) -> bool:
    if g.order < 3:
        raise ValueError(f"2-connectivity is only defined here for order >= 3, got {g.order}")
    if not is_connected(g):
        return False
    full = g.full_mask
    return all(len(component_masks(g, full & ~(1 << v))) == 1 for v in range(g.order))


# -- graph6 -----------------------------------------------------------------

def to_graph6(g: Graph) -> bytes:
    if g.order > 62:
        raise ValueError(f"graph6 short form supports order <= 62, got {g.order}")
    out = bytearray([g.order + 63])
    bitlist = [g.adj[i] >> j & 1 for j in range(g.order) for i in range(j)]
    bitlist.extend([0] * (-len(bitlist) % 6))
    for k in range(0, len(bitlist), 6):
        chunk = 0
        for b in bitlist[k:k + 6]:
            chunk = chunk << 1 | b
        out.append(chunk + 63)
    return bytes(out)


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if not data:
        raise ValueError("empty graph6 string")
    if any(not 63 <= c <= 126 for c in data):
        raise ValueError("graph6 bytes must lie in 63..126")
    order = data[0] - 63
    if order > 62:
        raise ValueError("only the single-byte order header (order <= 62) is supported")
    nbits = order * (order - 1) // 2
    body = data[1:]
    if len(body) != -(-nbits // 6):
        raise ValueError(f"expected {-(-nbits // 6)} data bytes for order {order}, got {len(body)}")
    bitlist = []
    for c in body:
        v = c - 63
        bitlist.extend(v >> s & 1 for s in range(5, -1, -1))
    if any(bitlist[nbits:]):
        raise ValueError("nonzero padding bits")
    pairs = ((i, j) for j in range(order) for i in range(j))
    return Graph.from_edges(order, (p for p, b in zip(pairs, bitlist) if b))


def all_labeled_graphs(order: int):
    """Every labelled graph on ``order`` vertices, in edge-bitmask order."""
    pairs = list(combinations(range(order), 2))
    for code in range(1 << len(pairs)):
        yield Graph.from_edges(order, (p for k, p in enumerate(pairs) if code >> k & 1))
