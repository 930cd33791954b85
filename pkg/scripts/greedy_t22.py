"""Grow a non-3-colorable distance graph for t = 22 from the 5-cycle seed.

Candidate points have denominator 3 and coordinates in [-10, 10] (the CLI
defaults); the certificate is re-verified on emission and written to data/.
"""

from __future__ import annotations

import sys
from pathlib import Path

from scavenger.cli import dispatch

ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    seed = ROOT / "data" / "t22_seed.txt"
    out = ROOT / "data" / "t22_greedy.cert"
    code = dispatch(["hunt-greedy", str(seed), "--out", str(out)])
    if code == 0:
        print(f"wrote {out}")
    return code


if __name__ == "__main__":
    sys.exit(main())
