"""Sweep the admissible distances t < LIMIT and report the minimal feasible d.

For each t the scan is re-certified through eq_pair_feasible before printing.
Usage: python scripts/scan_small.py [LIMIT]   (default 200)
"""

from __future__ import annotations

import sys
from fractions import Fraction

from scavenger.cycles import scan_d
from scavenger.numtheory import eq_pair_feasible, in_T


def main() -> int:
    limit = int(sys.argv[1]) if len(sys.argv) > 1 else 200
    for t in range(2, limit):
        if not in_T(t):
            continue
        d = scan_d(t, 4 * t - 1)
        if d is None:
            print(f"t={t}: no feasible d below {4 * t - 1}")
            return 1
        assert eq_pair_feasible(t, d)
        note = "" if Fraction(d).denominator == 1 else "  (non-integer)"
        print(f"t={t}: d={d}{note}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
