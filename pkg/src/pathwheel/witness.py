"""Lower-bound graphs for R(P_n, W_m), m >= 2n+1: disjoint cliques on t-1 vertices.

Each clique has at most n-1 vertices, so there is no P_n; each has at least
t-m vertices, so every vertex misses fewer than m others and the complement has
no W_m.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import detect
from .detect import DEFAULT_LIMITS, DetectorLimits
from .formula import ramsey_path_wheel
from .graphcore import Graph, clique_union, complement

CROSS_CHECK_MAX_ORDER = 14


class WitnessError(RuntimeError):
    """The structural and generic checks disagreed, or a partition left its window."""


@dataclass(frozen=True)
class CliquePartition:
    n: int
    m: int
    t: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if sum(self.parts) != self.t - 1:
            raise ValueError(f"parts {self.parts} do not sum to t-1 = {self.t - 1}")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError("parts must be nonincreasing")
        if any(p < 1 for p in self.parts):
            raise ValueError("parts must be positive")

    @property
    def window(self) -> tuple[int, int]:
        return max(self.t - self.m, 1), self.n - 1

    def in_window(self) -> bool:
        lo, hi = self.window
        return all(lo <= p <= hi for p in self.parts)

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "t": self.t, "parts": list(self.parts)}


@dataclass(frozen=True)
class WitnessReport:
    path_free: bool
    wheel_free: bool
    cross_checked: bool

    def to_dict(self) -> dict:
        return {
            "path_free": self.path_free,
            "wheel_free": self.wheel_free,
            "cross_checked": self.cross_checked,
        }


def clique_partition(n: int, m: int) -> CliquePartition:
    if n < 2 or m < 2 * n + 1:
        raise ValueError(f"witness construction needs n >= 2 and m >= 2n+1, got n={n}, m={m}")
    t = ramsey_path_wheel(n, m).value
    total = t - 1
    k = -(-total // (n - 1))
    q, r = divmod(total, k)
    parts = tuple([q + 1] * r + [q] * (k - r))
    p = CliquePartition(n, m, t, parts)
    if not p.in_window():
        raise WitnessError(f"balanced parts {parts} leave window {p.window} for n={n}, m={m}")
    return p


def build_witness(p: CliquePartition) -> Graph:
    return clique_union(p.parts)


def verify_witness(
    n: int, m: int, p: CliquePartition, limits: DetectorLimits = DEFAULT_LIMITS
) -> WitnessReport:
    g = build_witness(p)
    path_free = not detect.has_path(g, n, limits)
    wheel_free = not detect.cliques_complement_has_wheel(p.parts, m)
    cross = g.order <= CROSS_CHECK_MAX_ORDER
    if cross:
        generic_path_free = detect.longest_path_order(g, limits) < n
        generic_wheel_free = not detect.has_wheel(complement(g), m, limits)
        if (generic_path_free, generic_wheel_free) != (path_free, wheel_free):
            raise WitnessError(
                f"structural ({path_free}, {wheel_free}) and generic "
                f"({generic_path_free}, {generic_wheel_free}) checks disagree on {p.parts}"
            )
    return WitnessReport(path_free, wheel_free, cross)
