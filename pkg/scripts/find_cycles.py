"""Find a rational 5-cycle of squared edge length t for every admissible t < LIMIT.

Steps are drawn from vectors with denominators {1, 3} up to coordinate height
60, matching the defaults of the find-cycle subcommand.
Usage: python scripts/find_cycles.py [LIMIT]   (default 100)
"""

from __future__ import annotations

import sys

from scavenger.cycles import find_5cycle, gen_vectors, is_5cycle
from scavenger.numtheory import in_T
from scavenger.qcore import format_point


def main() -> int:
    limit = int(sys.argv[1]) if len(sys.argv) > 1 else 100
    for t in range(2, limit):
        if not in_T(t):
            continue
        cycle = find_5cycle(t, gen_vectors(t, {1, 3}, 60))
        if cycle is None:
            print(f"t={t}: no 5-cycle in the pool")
            return 1
        assert is_5cycle(cycle, t)
        print(f"t={t}: " + "  ".join(format_point(p) for p in cycle))
    return 0


if __name__ == "__main__":
    sys.exit(main())
