"""Executable statements of the supporting lemmas on long paths and cycles.

Every lemma is a pair of predicates over a ``LemmaInstance``: the hypothesis
list, read literally, and the conclusion, decided exactly with the detectors.
``run_suite`` sweeps a corpus and returns the instances where the hypothesis
holds but the conclusion fails. Those should never exist.

Conventions that are not spelled out by the statements themselves:

* ``L2.*`` need at least three vertices; smaller graphs fail the hypothesis.
* ``L5`` needs both graphs non-null ("two disjoint graphs").
* ``L8``/``L9``: X1 and X2 may intersect.
* ``L9`` condition (4) is read per component H of R as
  ``|{v outside R : v in X or v has no neighbour in H}| >= q``.
* A cycle length m is always at least 3.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from . import detect
from .detect import DEFAULT_LIMITS, DetectorLimits, ResourceLimitError
from .graphcore import (
    Graph,
    add_edge,
    bits,
    complement,
    component_masks,
    disjoint_union,
    from_graph6,
    induced,
    is_connected,
    is_two_connected,
    to_graph6,
)
from .search import all_graph_classes

LEMMA_IDS = (
    "L2.1", "L2.2", "L2.3", "L2.4", "L2.5", "L2.6", "L2.7",
    "L3", "L4.1", "L4.2", "L4.3",
    "L5", "L6", "L7", "L8", "L9",
)

EXHAUSTIVE_LEMMAS = LEMMA_IDS[:11]
RANDOM_LEMMAS = LEMMA_IDS[11:]

_REQUIRED = {
    "L2.1": {"n"},
    "L2.2": {"x", "n"},
    "L2.3": {"x", "y", "n"},
    "L2.4": {"x", "y", "n"},
    "L2.5": {"n"},
    "L2.6": {"x", "n"},
    "L2.7": {"x", "n"},
    "L3": {"m"},
    "L4.1": {"n"},
    "L4.2": {"n"},
    "L4.3": {"n"},
    "L5": {"graph2", "p", "m"},
    "L6": {"n", "m"},
    "L7": {"X", "p", "m"},
    "L8": {"X1", "X2", "p", "m"},
    "L9": {"R", "X1", "X2", "p", "q", "m"},
}
_OPTIONAL = ("x", "y", "X", "X1", "X2", "graph2", "R", "n", "m", "p", "q")
_SETS = ("X", "X1", "X2", "R")

MAX_ATTEMPTS = 100_000


@dataclass(frozen=True)
class LemmaInstance:
    lemma: str
    graph: Graph
    x: Optional[int] = None
    y: Optional[int] = None
    X: Optional[frozenset] = None
    X1: Optional[frozenset] = None
    X2: Optional[frozenset] = None
    graph2: Optional[Graph] = None
    R: Optional[frozenset] = None
    n: Optional[int] = None
    m: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None

    def __post_init__(self):
        if self.lemma not in _REQUIRED:
            raise ValueError(f"unknown lemma {self.lemma!r}")
        need = _REQUIRED[self.lemma]
        present = {f for f in _OPTIONAL if getattr(self, f) is not None}
        if present != need:
            raise ValueError(
                f"{self.lemma} needs fields {sorted(need)}, got {sorted(present)}"
            )
        order = self.graph.order
        for f in ("x", "y"):
            v = getattr(self, f)
            if v is not None and not 0 <= v < order:
                raise ValueError(f"{f}={v} out of range for order {order}")
        if self.x is not None and self.x == self.y:
            raise ValueError("x and y must differ")
        for f in _SETS:
            s = getattr(self, f)
            if s is not None:
                if not isinstance(s, frozenset):
                    object.__setattr__(self, f, frozenset(s))
                    s = getattr(self, f)
                if any(not 0 <= v < order for v in s):
                    raise ValueError(f"{f} has vertices out of range for order {order}")

    def to_dict(self) -> dict:
        d: dict = {"lemma": self.lemma, "graph6": to_graph6(self.graph).decode("ascii")}
        for f in _OPTIONAL:
            v = getattr(self, f)
            if v is None:
                continue
            if f == "graph2":
                d["graph2_graph6"] = to_graph6(v).decode("ascii")
            elif f in _SETS:
                d[f] = sorted(v)
            else:
                d[f] = v
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "LemmaInstance":
        kw = {f: d[f] for f in ("x", "y", "n", "m", "p", "q") if f in d}
        kw.update({f: frozenset(d[f]) for f in _SETS if f in d})
        if "graph2_graph6" in d:
            kw["graph2"] = from_graph6(d["graph2_graph6"])
        return cls(d["lemma"], from_graph6(d["graph6"]), **kw)


@dataclass(frozen=True)
class Verdict:
    hypothesis_holds: bool
    conclusion_holds: bool


# -- cached graph facts -----------------------------------------------------

@lru_cache(maxsize=1 << 16)
def _two_connected(g: Graph) -> bool:
    return is_two_connected(g)


@lru_cache(maxsize=1 << 16)
def _connected(g: Graph) -> bool:
    return is_connected(g)


@lru_cache(maxsize=1 << 16)
def _complement(g: Graph) -> Graph:
    return complement(g)


@lru_cache(maxsize=1 << 16)
def _longest_path(g: Graph, limits: DetectorLimits) -> int:
    return detect.longest_path_order(g, limits)


@lru_cache(maxsize=1 << 16)
def _has_path(g: Graph, n: int, limits: DetectorLimits) -> bool:
    return detect.has_path(g, n, limits)


@lru_cache(maxsize=1 << 16)
def _has_cycle(g: Graph, m: int, limits: DetectorLimits) -> bool:
    return detect.has_cycle_exact(g, m, limits)


@lru_cache(maxsize=1 << 16)
def _longest_cycle(g: Graph, limits: DetectorLimits) -> int:
    return detect.longest_cycle_order(g, limits)


@lru_cache(maxsize=1 << 17)
def _profile(g: Graph, x: int, limits: DetectorLimits) -> tuple[int, ...]:
    return detect.anchored_path_profile(g, x, limits)


@lru_cache(maxsize=1 << 17)
def _plus_edge_two_connected(g: Graph, x: int, y: int) -> bool:
    return is_two_connected(add_edge(g, x, y))


def _deg(g: Graph, v: int) -> int:
    return g.adj[v].bit_count()


def _deg_minus(g: Graph, v: int, x: int) -> int:
    return (g.adj[v] & ~(1 << x)).bit_count()


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def _mask(vs: Iterable[int]) -> int:
    out = 0
    for v in vs:
        out |= 1 << v
    return out


def _independent(g: Graph, vs: frozenset) -> bool:
    s = _mask(vs)
    return all(not g.adj[v] & s for v in vs)


def _joined_count(g: Graph, comp: int, xs: Iterable[int]) -> int:
    return sum(1 for x in xs if g.adj[x] & comp)


def _complement_path_at_least(g: Graph, p: int, limits: DetectorLimits) -> bool:
    if p <= 0:
        return True
    return _longest_path(_complement(g), limits) >= p


# -- hypotheses -------------------------------------------------------------

def _h_2_1(i, lim):
    g = i.graph
    return g.order >= 3 and _two_connected(g) and min(map(int.bit_count, g.adj)) >= _ceil_half(i.n)


def _h_2_2(i, lim):
    g = i.graph
    return g.order >= 3 and _connected(g) and all(
        _deg(g, v) >= i.n - 1 for v in range(g.order) if v != i.x
    )


def _h_2_3(i, lim):
    g = i.graph
    return (
        g.order >= 3
        and all(_deg(g, v) >= i.n - 1 for v in range(g.order) if v not in (i.x, i.y))
        and _plus_edge_two_connected(g, i.x, i.y)
    )


def _h_2_4(i, lim):
    g = i.graph
    return (
        g.order >= 3
        and all(_deg(g, v) >= _ceil_half(i.n) for v in range(g.order) if v not in (i.x, i.y))
        and _plus_edge_two_connected(g, i.x, i.y)
    )


def _h_2_5(i, lim):
    g = i.graph
    return g.order >= 3 and _connected(g) and min(map(int.bit_count, g.adj)) >= i.n // 2


def _h_2_6(i, lim):
    g = i.graph
    return g.order >= 3 and _connected(g) and all(
        _deg_minus(g, v, i.x) >= i.n - 2 for v in range(g.order) if v != i.x
    )


def _h_2_7(i, lim):
    g = i.graph
    return g.order >= 3 and _two_connected(g) and all(
        _deg_minus(g, v, i.x) >= i.n // 2 for v in range(g.order) if v != i.x
    )


def _h_3(i, lim):
    g, m = i.graph, i.m
    if m < 3 or m > g.order:
        return False
    comps = component_masks(g)
    return len(comps) >= 2 and all(c.bit_count() <= m // 2 for c in comps)


def _h_4_1(i, lim):
    g, n = i.graph, i.n
    return n <= g.order <= 3 * n // 2 - 2 and not _has_path(g, n, lim)


def _h_4_2(i, lim):
    g, n = i.graph, i.n
    return g.order >= 3 * n // 2 - 1 and not _has_path(g, n, lim)


def _h_4_3(i, lim):
    g, n = i.graph, i.n
    return n >= 4 and n % 2 == 0 and g.order >= 3 * n // 2 - 1 and not _has_cycle(g, n, lim)


def _h_5(i, lim):
    g1, g2, p, m = i.graph, i.graph2, i.p, i.m
    if g1.order == 0 or g2.order == 0 or p < 2 or m < 3:
        return False
    if m > min(2 * g1.order, g1.order + g2.order, p + 2 * g2.order - 1):
        return False
    return _complement_path_at_least(g1, p, lim)


def _h_6(i, lim):
    g, n, m = i.graph, i.n, i.m
    if n < 2 or m < 2 * n + 1 or m > g.order:
        return False
    comps = component_masks(g)
    if len(comps) < 2:
        return False
    # the lightest omega-1 components omit exactly the largest one
    rest = g.order - max(c.bit_count() for c in comps)
    if rest < m + n // 2 - g.order:
        return False
    return not _has_path(g, n, lim)


def _components_joined_ok(g: Graph, rmask: int, groups: list[frozenset]) -> bool:
    for comp in component_masks(g, rmask):
        for xs in groups:
            if _joined_count(g, comp, xs) > 1:
                return False
    return True


def _h_7(i, lim):
    g, X, p, m = i.graph, i.X, i.p, i.m
    if len(X) < 3 or p < 2 or m < 3 or not _independent(g, X):
        return False
    if m > min(g.order, p + 2 * len(X) - 3):
        return False
    rmask = g.full_mask & ~_mask(X)
    if not _components_joined_ok(g, rmask, [X]):
        return False
    return _complement_path_at_least(induced(g, bits(rmask)), p, lim)


def _sizes_ok(X1: frozenset, X2: frozenset) -> bool:
    return len(X1) == len(X2) >= 3 and len(X1 - X2) == len(X2 - X1) >= 2


def _h_8(i, lim):
    g, X1, X2, p, m = i.graph, i.X1, i.X2, i.p, i.m
    if not _sizes_ok(X1, X2) or p < 2 or m < 3:
        return False
    if not (_independent(g, X1) and _independent(g, X2)):
        return False
    X = X1 | X2
    if m > min(g.order, p + 2 * len(X) - 5):
        return False
    rmask = g.full_mask & ~_mask(X)
    if not _components_joined_ok(g, rmask, [X1, X2]):
        return False
    return _complement_path_at_least(induced(g, bits(rmask)), p, lim)


def _h_9(i, lim):
    g, R, X1, X2, p, q, m = i.graph, i.R, i.X1, i.X2, i.p, i.q, i.m
    if not _sizes_ok(X1, X2) or p < 2 or m < 3:
        return False
    X = X1 | X2
    if X & R or not (_independent(g, X1) and _independent(g, X2)):
        return False
    rmask = _mask(R)
    comps = component_masks(g, rmask)
    if any(c.bit_count() < 2 for c in comps):
        return False
    if not _components_joined_ok(g, rmask, [X1, X2]):
        return False
    outside = [v for v in range(g.order) if not rmask >> v & 1]
    for c in comps:
        if sum(1 for v in outside if v in X or not g.adj[v] & c) < q:
            return False
    r = len(R)
    if m > min(-(-3 * r // 2) + 4, r + q - 1, p + 2 * q - 5):
        return False
    return _complement_path_at_least(induced(g, bits(rmask)), p, lim)


# -- conclusions ------------------------------------------------------------

def _c_2_1(i, lim):
    return _longest_cycle(i.graph, lim) >= min(i.graph.order, i.n)


def _c_from_x_n(i, lim):
    return max(_profile(i.graph, i.x, lim)) >= i.n


def _c_from_x_min(i, lim):
    return max(_profile(i.graph, i.x, lim)) >= min(i.graph.order, i.n)


def _c_2_3(i, lim):
    return _profile(i.graph, i.x, lim)[i.y] >= i.n


def _c_2_5(i, lim):
    return _longest_path(i.graph, lim) >= min(i.graph.order, i.n)


def _c_complement_cycle(i, lim):
    return _has_cycle(_complement(i.graph), i.m, lim)


def _c_4_1(i, lim):
    return _complement_path_at_least(i.graph, 2 * i.graph.order + 3 - 2 * i.n, lim)


def _c_4_2(i, lim):
    return _complement_path_at_least(i.graph, i.graph.order + 1 - i.n // 2, lim)


def _c_4_3(i, lim):
    return _complement_path_at_least(i.graph, i.graph.order + 1 - i.n // 2, lim)


def _c_5(i, lim):
    return _has_cycle(_complement(disjoint_union([i.graph, i.graph2])), i.m, lim)


_HYPOTHESES = {
    "L2.1": _h_2_1, "L2.2": _h_2_2, "L2.3": _h_2_3, "L2.4": _h_2_4,
    "L2.5": _h_2_5, "L2.6": _h_2_6, "L2.7": _h_2_7, "L3": _h_3,
    "L4.1": _h_4_1, "L4.2": _h_4_2, "L4.3": _h_4_3, "L5": _h_5,
    "L6": _h_6, "L7": _h_7, "L8": _h_8, "L9": _h_9,
}

_CONCLUSIONS = {
    "L2.1": _c_2_1, "L2.2": _c_from_x_n, "L2.3": _c_2_3, "L2.4": _c_from_x_min,
    "L2.5": _c_2_5, "L2.6": _c_from_x_n, "L2.7": _c_from_x_min, "L3": _c_complement_cycle,
    "L4.1": _c_4_1, "L4.2": _c_4_2, "L4.3": _c_4_3, "L5": _c_5,
    "L6": _c_complement_cycle, "L7": _c_complement_cycle, "L8": _c_complement_cycle,
    "L9": _c_complement_cycle,
}


def check_hypothesis(inst: LemmaInstance, limits: DetectorLimits = DEFAULT_LIMITS) -> bool:
    return _HYPOTHESES[inst.lemma](inst, limits)


def check_conclusion(inst: LemmaInstance, limits: DetectorLimits = DEFAULT_LIMITS) -> bool:
    return _CONCLUSIONS[inst.lemma](inst, limits)


def evaluate(inst: LemmaInstance, limits: DetectorLimits = DEFAULT_LIMITS) -> Verdict:
    return Verdict(check_hypothesis(inst, limits), check_conclusion(inst, limits))


# -- corpora ----------------------------------------------------------------

@dataclass(frozen=True)
class Exhaustive:
    """Every graph of order 1..max_order (one per isomorphism class) with every
    choice of marked vertices and every parameter value that can matter."""

    max_order: int

    def describe(self) -> str:
        return f"exhaustive:{self.max_order}"


@dataclass(frozen=True)
class Randomized:
    count: int
    seed: int
    max_order: int = 16

    def describe(self) -> str:
        return f"random:{self.count}:{self.seed}:{self.max_order}"


def parse_corpus(spec: str) -> Exhaustive | Randomized:
    """``exhaustive:K`` or ``random:COUNT:SEED[:MAX_ORDER]``."""
    kind, _, rest = spec.partition(":")
    try:
        nums = [int(v) for v in rest.split(":")] if rest else []
    except ValueError:
        raise ValueError(f"bad corpus spec {spec!r}") from None
    if kind == "exhaustive" and len(nums) == 1 and nums[0] >= 1:
        return Exhaustive(nums[0])
    if kind == "random" and len(nums) in (2, 3) and nums[0] >= 0:
        return Randomized(*nums)
    raise ValueError(f"bad corpus spec {spec!r}; use exhaustive:K or random:COUNT:SEED[:MAX_ORDER]")


def _exhaustive_instances(lemma: str, g: Graph) -> Iterator[LemmaInstance]:
    v = g.order
    if lemma == "L3":
        for m in range(3, v + 2):
            yield LemmaInstance(lemma, g, m=m)
        return
    need = _REQUIRED[lemma]
    for n in range(2, 2 * v + 1):
        if "y" in need:
            for x in range(v):
                for y in range(v):
                    if x != y:
                        yield LemmaInstance(lemma, g, x=x, y=y, n=n)
        elif "x" in need:
            for x in range(v):
                yield LemmaInstance(lemma, g, x=x, n=n)
        else:
            yield LemmaInstance(lemma, g, n=n)


def _random_graph(rng: random.Random, order: int, density: float) -> Graph:
    edges = [(u, w) for w in range(order) for u in range(w) if rng.random() < density]
    return Graph.from_edges(order, edges)


def _relabel(g: Graph, perm: list[int]) -> Graph:
    return Graph.from_edges(g.order, ((perm[u], perm[w]) for u, w in g.edges()))


def _pick_m(rng: random.Random, hi: int, total: int) -> int:
    # proposal biased towards the tight end of the admissible range
    hi = min(hi, total)
    if hi < 3:
        return rng.randint(3, max(3, total))
    return hi if rng.random() < 0.5 else rng.randint(3, hi)


def _join_components(rng, edges, r_graph: Graph, offset_r: list[int], groups: list[list[int]]):
    """Join every component of R to at most one vertex of each group."""
    for comp in component_masks(r_graph):
        members = [offset_r[v] for v in bits(comp)]
        chosen = set()
        for grp in groups:
            if rng.random() < 0.75:
                chosen.add(rng.choice(grp))
        for x in chosen:
            targets = [u for u in members if rng.random() < 0.6] or [rng.choice(members)]
            edges.extend((x, u) for u in targets)


def _propose_l2_l4(lemma: str, rng: random.Random, max_order: int) -> LemmaInstance:
    order = rng.randint(3, min(max_order, 9))
    g = _random_graph(rng, order, rng.uniform(0.2, 0.9))
    need = _REQUIRED[lemma]
    if lemma == "L3":
        return LemmaInstance(lemma, g, m=rng.randint(3, order))
    n = rng.randint(2, 2 * order)
    kw = {"n": n}
    if "x" in need:
        kw["x"] = rng.randrange(order)
    if "y" in need:
        kw["y"] = rng.choice([v for v in range(order) if v != kw["x"]])
    return LemmaInstance(lemma, g, **kw)


def _propose_l5(rng, max_order):
    n1 = rng.randint(2, min(8, max_order - 1))
    n2 = rng.randint(1, min(6, max_order - n1))
    g1 = _random_graph(rng, n1, rng.uniform(0.1, 0.8))
    g2 = _random_graph(rng, n2, rng.uniform(0.1, 0.8))
    p = rng.randint(2, n1)
    m = _pick_m(rng, min(2 * n1, n1 + n2, p + 2 * n2 - 1), n1 + n2)
    return LemmaInstance("L5", g1, graph2=g2, p=p, m=m)


def _propose_l6(rng, max_order):
    n = rng.randint(2, 5)
    total = rng.randint(2 * n + 1, max_order)
    pieces = []
    left = total
    while left:
        size = min(left, max(1, rng.choice([1, 2, n - 1, n - 1, n, n + 1, 2 * n])))
        pieces.append(_random_graph(rng, size, rng.uniform(0.0, 1.0)))
        left -= size
    g = disjoint_union(pieces)
    perm = list(range(total))
    rng.shuffle(perm)
    g = _relabel(g, perm)
    m = total if rng.random() < 0.5 else rng.randint(2 * n + 1, total)
    return LemmaInstance("L6", g, n=n, m=m)


def _split_sets(rng, a: int, c: int, start: int):
    x1_only = list(range(start, start + a))
    x2_only = list(range(start + a, start + 2 * a))
    shared = list(range(start + 2 * a, start + 2 * a + c))
    return x1_only, x2_only, shared


def _propose_l7(rng, max_order):
    r = rng.randint(2, min(8, max_order - 3))
    k = rng.randint(3, min(6, max_order - r))
    rg = _random_graph(rng, r, rng.uniform(0.1, 0.8))
    edges = list(rg.edges())
    xs = list(range(r, r + k))
    _join_components(rng, edges, rg, list(range(r)), [xs])
    if rng.random() < 0.1:
        edges.append((rng.choice(xs), rng.randrange(r)))
    g = Graph.from_edges(r + k, set(tuple(sorted(e)) for e in edges))
    perm = list(range(r + k))
    rng.shuffle(perm)
    g = _relabel(g, perm)
    p = rng.randint(2, r)
    m = _pick_m(rng, p + 2 * k - 3, r + k)
    return LemmaInstance("L7", g, X=frozenset(perm[x] for x in xs), p=p, m=m)


def _propose_x1x2(rng, r_max: int, extra_max: int, max_order: int):
    while True:
        c = rng.randint(0, 3)
        a = rng.randint(max(2, 3 - c), 4)
        r = rng.randint(2, r_max)
        y = rng.randint(0, extra_max)
        if r + 2 * a + c + y <= max_order:
            return a, c, r, y


def _propose_l8(rng, max_order):
    a, c, r, _ = _propose_x1x2(rng, 7, 0, max_order)
    rg = _random_graph(rng, r, rng.uniform(0.1, 0.8))
    edges = list(rg.edges())
    x1o, x2o, sh = _split_sets(rng, a, c, r)
    dens = rng.uniform(0.0, 0.7)
    edges.extend((u, w) for u in x1o for w in x2o if rng.random() < dens)
    _join_components(rng, edges, rg, list(range(r)), [x1o + sh, x2o + sh])
    total = r + 2 * a + c
    g = Graph.from_edges(total, set(tuple(sorted(e)) for e in edges))
    perm = list(range(total))
    rng.shuffle(perm)
    g = _relabel(g, perm)
    X1 = frozenset(perm[v] for v in x1o + sh)
    X2 = frozenset(perm[v] for v in x2o + sh)
    p = rng.randint(2, r)
    m = _pick_m(rng, p + 2 * (2 * a + c) - 5, total)
    return LemmaInstance("L8", g, X1=X1, X2=X2, p=p, m=m)


def _propose_l9(rng, max_order):
    a, c, r, y = _propose_x1x2(rng, 8, 3, max_order)
    rg = _random_graph(rng, r, rng.uniform(0.3, 0.9))
    edges = list(rg.edges())
    x1o, x2o, sh = _split_sets(rng, a, c, r)
    base = r + 2 * a + c
    ys = list(range(base, base + y))
    dens = rng.uniform(0.0, 0.7)
    edges.extend((u, w) for u in x1o for w in x2o if rng.random() < dens)
    _join_components(rng, edges, rg, list(range(r)), [x1o + sh, x2o + sh])
    for v in ys:
        for u in range(base + y):
            if u != v and (u < base or u < v) and rng.random() < dens:
                edges.append((u, v))
    total = base + y
    g = Graph.from_edges(total, set(tuple(sorted(e)) for e in edges))
    perm = list(range(total))
    rng.shuffle(perm)
    g = _relabel(g, perm)
    X1 = frozenset(perm[v] for v in x1o + sh)
    X2 = frozenset(perm[v] for v in x2o + sh)
    R = frozenset(perm[v] for v in range(r))
    outside = total - r
    q = outside if rng.random() < 0.5 else rng.randint(1, outside)
    p = rng.randint(2, r)
    m = _pick_m(rng, min(-(-3 * r // 2) + 4, r + q - 1, p + 2 * q - 5), total)
    return LemmaInstance("L9", g, R=R, X1=X1, X2=X2, p=p, q=q, m=m)


_PROPOSERS = {
    "L5": _propose_l5, "L6": _propose_l6, "L7": _propose_l7,
    "L8": _propose_l8, "L9": _propose_l9,
}


def _propose(lemma: str, rng: random.Random, max_order: int) -> LemmaInstance:
    if lemma in _PROPOSERS:
        return _PROPOSERS[lemma](rng, max_order)
    return _propose_l2_l4(lemma, rng, max_order)


def generate_random(
    lemma: str, corpus: Randomized, limits: DetectorLimits = DEFAULT_LIMITS,
    max_attempts: int = MAX_ATTEMPTS,
) -> tuple[list[LemmaInstance], int, int]:
    """Rejection-sample ``corpus.count`` hypothesis-satisfying instances.

    Returns (instances, starved, attempts), where ``starved`` counts requested
    instances for which ``max_attempts`` proposals all failed the hypothesis.
    """
    rng = random.Random(f"{lemma}:{corpus.seed}")
    out: list[LemmaInstance] = []
    starved = 0
    attempts = 0
    for _ in range(corpus.count):
        for _ in range(max_attempts):
            attempts += 1
            inst = _propose(lemma, rng, corpus.max_order)
            try:
                ok = check_hypothesis(inst, limits)
            except ResourceLimitError:
                ok = False
            if ok:
                out.append(inst)
                break
        else:
            starved += 1
    return out, starved, attempts


# -- suites -----------------------------------------------------------------

@dataclass
class SuiteReport:
    lemma: str
    corpus: str
    instances: int = 0
    hypothesis_true: int = 0
    violations: list = field(default_factory=list)
    resource_errors: int = 0
    starved: int = 0
    attempts: int = 0

    @property
    def starvation_rate(self) -> float:
        requested = self.instances + self.starved
        return self.starved / requested if requested else 0.0

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "corpus": self.corpus,
            "instances": self.instances,
            "hypothesis_true": self.hypothesis_true,
            "violations": [v.to_dict() for v in self.violations],
            "resource_errors": self.resource_errors,
            "starved": self.starved,
            "attempts": self.attempts,
        }


def _eval_instances(insts: Iterable[LemmaInstance], limits: DetectorLimits, assume_hyp: bool):
    count = hyp = errors = 0
    bad: list[LemmaInstance] = []
    for inst in insts:
        count += 1
        try:
            if not assume_hyp and not check_hypothesis(inst, limits):
                continue
            hyp += 1
            if not check_conclusion(inst, limits):
                bad.append(inst)
        except ResourceLimitError:
            errors += 1
    return count, hyp, errors, bad


def _eval_graph_unit(args):
    lemma, g, limits = args
    return _eval_instances(_exhaustive_instances(lemma, g), limits, False)


def _eval_batch_unit(args):
    insts, limits = args
    return _eval_instances(insts, limits, False)


def run_suite(
    lemma: str,
    corpus: Exhaustive | Randomized,
    limits: DetectorLimits = DEFAULT_LIMITS,
    workers: int = 1,
) -> SuiteReport:
    """Instances where the hypothesis holds and the conclusion fails, in
    generation order, with counts of everything else evaluated."""
    if lemma not in _REQUIRED:
        raise ValueError(f"unknown lemma {lemma!r}")
    report = SuiteReport(lemma, corpus.describe())
    if isinstance(corpus, Exhaustive):
        if lemma not in EXHAUSTIVE_LEMMAS:
            raise ValueError(f"{lemma} has no exhaustive corpus; use a randomized one")
        units = [(lemma, g, limits) for g in all_graph_classes(corpus.max_order)]
        fn = _eval_graph_unit
    else:
        insts, report.starved, report.attempts = generate_random(lemma, corpus, limits)
        size = 25
        units = [(insts[k:k + size], limits) for k in range(0, len(insts), size)]
        fn = _eval_batch_unit
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(fn, units, chunksize=8))
    else:
        results = [fn(u) for u in units]
    for count, hyp, errors, bad in results:
        report.instances += count
        report.hypothesis_true += hyp
        report.resource_errors += errors
        report.violations.extend(bad)
    return report
