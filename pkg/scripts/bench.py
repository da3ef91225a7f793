"""Garside vs BKL timing table; all arguments go to ``braidkit bench``.

    python scripts/bench.py --strands 10 25 --lengths 100 500 --pairs 3
"""

from __future__ import annotations

import sys

from braidkit.cli import run

if __name__ == "__main__":
    sys.exit(run(["bench", *sys.argv[1:]]))
