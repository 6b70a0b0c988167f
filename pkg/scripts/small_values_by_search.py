"""Find R(P_n, W_m) by exhaustive search for small n, m and compare with the formulas.

For each pair the script looks for the least t at which every P_n-free graph on
t vertices has a W_m in its complement, scanning t upward from m+1.
"""

import argparse

from pathwheel.detect import DetectorLimits, ResourceLimitError
from pathwheel.formula import ramsey_path_wheel
from pathwheel.search import verify_upper_bound


def least_t(n, m, t_max, limits, budget):
    # a graph on t <= m vertices cannot have W_m in its complement
    for t in range(m + 1, t_max + 1):
        if verify_upper_bound(n, m, t, limits, budget).verified:
            return t
    return None


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--m-max", type=int, default=11)
    ap.add_argument("--t-max", type=int, default=16)
    ap.add_argument("--budget", type=int, default=200_000)
    args = ap.parse_args()

    limits = DetectorLimits(24, args.t_max)
    mismatches = 0
    print(f"{'n':>3} {'m':>3} {'formula':>8} {'search':>7} regime")
    for n in range(2, args.n_max + 1):
        for m in range(3, args.m_max + 1):
            b = ramsey_path_wheel(n, m)
            if b.value > args.t_max:
                continue
            try:
                found = least_t(n, m, args.t_max, limits, args.budget)
            except ResourceLimitError as exc:
                print(f"{n:>3} {m:>3} {b.value:>8} {'-':>7} {b.regime} ({exc})")
                continue
            flag = "" if found == b.value else "  MISMATCH"
            mismatches += found != b.value
            print(f"{n:>3} {m:>3} {b.value:>8} {found!s:>7} {b.regime}{flag}")
    print(f"mismatches: {mismatches}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
