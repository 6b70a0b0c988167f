"""Closed formulas for path-versus-path, path-versus-cycle and path-versus-wheel
Ramsey numbers, plus the interval-sum characterisation used to cross-check the
large-wheel regime.

Everything here is integer arithmetic. The large-wheel branch test compares
(m-1)/(n-1) against beta^2/(beta+1) by cross-multiplication, since the two
sides are frequently one unit apart (e.g. 80 <= 81 at n=10, m=21).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

TRIVIAL_N2 = "trivial-n2"
SMALL_WHEEL = "small-wheel"
MID_WHEEL = "mid-wheel"
LARGE_WHEEL = "large-wheel"

ALPHA_LE_GAMMA = "alpha-le-gamma"
ALPHA_GT_GAMMA = "alpha-gt-gamma"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class RamseyQuery:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 2 or self.m < 3:
            raise ValueError(f"need n >= 2 and m >= 3, got n={self.n}, m={self.m}")


@dataclass(frozen=True)
class IntervalSumQuery:
    x: int
    lo: int
    hi: int


@dataclass(frozen=True)
class RamseyBreakdown:
    """R(P_n, W_m) together with the quantities that selected it.

    ``alpha`` and ``gamma`` are exact fractions; ``beta`` is an integer. For the
    regimes other than large-wheel they are still reported (they are well
    defined for any n >= 2) but ``branch`` is ``not-applicable``.

    In the large-wheel regime the value is also R(P_n, K_1 + F) for any graph F
    on m vertices that contains a C_m.
    """

    n: int
    m: int
    value: int
    regime: str
    alpha: Fraction
    beta: int
    gamma: Fraction
    branch: str

    @property
    def s(self) -> int:
        return self.m + self.n - self.value

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "value": self.value,
            "regime": self.regime,
            "alpha": _fraction_str(self.alpha),
            "beta": self.beta,
            "gamma": _fraction_str(self.gamma),
            "branch": self.branch,
            "s": self.s,
        }


def _fraction_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def parity(n: int) -> int:
    _require(n >= 0, f"parity needs n >= 0, got {n}")
    return _ceil_div(n, 2) - n // 2


def interval_sum_member(q: IntervalSumQuery) -> bool:
    """True iff ``q.x`` is a finite sum of integers from [lo, hi].

    The empty sum is allowed, so 0 is always a member. Only positive summands
    count: a lower bound <= 0 is clamped to 1, and lo > hi is the empty
    interval, whose sum set is {0}.
    """
    _require(q.x >= 0, f"x must be nonnegative, got {q.x}")
    return _member(q.x, q.lo, q.hi)


def _member(x: int, lo: int, hi: int) -> bool:
    if x == 0:
        return True
    if hi < 1:
        return False
    lo = max(lo, 1)
    if lo > hi:
        return False
    # fewest summands that can reach x; more summands only raise the minimum
    k = _ceil_div(x, hi)
    return k * lo <= x


def _branch_values(n: int, m: int) -> tuple[Fraction, int, Fraction]:
    alpha = Fraction(m - 1, n - 1)
    beta = _ceil_div(m - 1, n - 1)
    gamma = Fraction(beta * beta, beta + 1)
    return alpha, beta, gamma


def t_large(n: int, m: int) -> RamseyBreakdown:
    _require(n >= 2 and m >= 2 * n + 1, f"t_large needs n >= 2 and m >= 2n+1, got n={n}, m={m}")
    alpha, beta, gamma = _branch_values(n, m)
    # alpha <= gamma  <=>  (m-1)(beta+1) <= (n-1) beta^2
    if (m - 1) * (beta + 1) <= (n - 1) * beta * beta:
        value, branch = (n - 1) * beta + 1, ALPHA_LE_GAMMA
    else:
        value, branch = (m - 1) // beta + m, ALPHA_GT_GAMMA
    return RamseyBreakdown(n, m, value, LARGE_WHEEL, alpha, beta, gamma, branch)


def t_min_char(n: int, m: int) -> int:
    """Least t that is not a sum of parts drawn from [t-m+1, n-1]."""
    _require(n >= 2 and m >= 2 * n + 1, f"t_min_char needs n >= 2 and m >= 2n+1, got n={n}, m={m}")
    ceiling = m + n
    for t in range(1, ceiling + 1):
        if not _member(t, t - m + 1, n - 1):
            return t
    raise RuntimeError(f"no non-member t <= {ceiling} for n={n}, m={m}")


def ramsey_path_wheel(n: int, m: int) -> RamseyBreakdown:
    RamseyQuery(n, m)
    alpha, beta, gamma = _branch_values(n, m)
    if n == 2:
        # an edgeless graph on m vertices avoids P_2 and its complement K_m has no W_m
        return RamseyBreakdown(n, m, m + 1, TRIVIAL_N2, alpha, beta, gamma, NOT_APPLICABLE)
    if m <= n + 1:
        value = 3 * n - 2 if m % 2 else 2 * n - 1
        return RamseyBreakdown(n, m, value, SMALL_WHEEL, alpha, beta, gamma, NOT_APPLICABLE)
    if m <= 2 * n:
        value = 3 * n - 2 if m % 2 else m + n - 2
        return RamseyBreakdown(n, m, value, MID_WHEEL, alpha, beta, gamma, NOT_APPLICABLE)
    return t_large(n, m)


def ramsey_path_path(a: int, b: int) -> int:
    _require(a >= 2 and b >= 2, f"path orders must be >= 2, got {a}, {b}")
    n, m = min(a, b), max(a, b)
    return m + n // 2 - 1


def ramsey_path_cycle(n: int, m: int) -> int:
    _require(n >= 2 and m >= 3, f"need n >= 2 and m >= 3, got n={n}, m={m}")
    if n >= m:
        return 2 * n - 1 if m % 2 else n + m // 2 - 1
    if m % 2:
        return max(m + n // 2 - 1, 2 * n - 1)
    return m + n // 2 - 1


def thm6_value(n: int, m: int) -> Optional[int]:
    """Value of R(P_n, W_m) for the residues m = 0, 1, 2 (mod n-1), else None."""
    _require(n >= 3 and m >= 2 * n + 1, f"need n >= 3 and m >= 2n+1, got n={n}, m={m}")
    r = m % (n - 1)
    if r == 1:
        return m + n - 1
    # for n = 3 the residue 2 collapses onto 0
    if r in (0, 2 % (n - 1)):
        return m + n - 2
    return None


def s_bound(n: int) -> int:
    _require(n >= 5, f"s_bound needs n >= 5, got {n}")
    return (n + 5) // 4
