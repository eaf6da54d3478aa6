#!/usr/bin/env python3
"""Tabulate enumerated structure counts against their closed forms.

Streams are counted by actually enumerating; the closed-form column comes
from the inclusion-exclusion formula (coverings) and the free-edge-bit count
(tolerances). Disagreement anywhere is a bug.
"""

from covgran.verify import (
    MAX_COVERING_N,
    covering_count,
    enumerate_coverings,
    enumerate_preorders,
    enumerate_tolerances,
    tolerance_count,
)


def main() -> int:
    header = f"{'n':>2} {'coverings':>10} {'formula':>10} {'tolerances':>11} {'formula':>8} {'preorders':>10}"
    print(header)
    print("-" * len(header))
    ok = True
    for n in range(1, MAX_COVERING_N + 1):
        covers = sum(1 for _ in enumerate_coverings(n))
        tols = sum(1 for _ in enumerate_tolerances(n))
        pres = sum(1 for _ in enumerate_preorders(n))
        print(
            f"{n:>2} {covers:>10} {covering_count(n):>10}"
            f" {tols:>11} {tolerance_count(n):>8} {pres:>10}"
        )
        ok = ok and covers == covering_count(n) and tols == tolerance_count(n)
    print("-" * len(header))
    print("all counts match" if ok else "COUNT MISMATCH")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
