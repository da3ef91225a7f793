"""Confirm that inadmissible pairs of b generators have no common multiple up to a length.

    python scripts/inadmissible_search.py --n 4 --length 8
"""

from __future__ import annotations

import argparse
import time

from braidkit.search import common_multiple_search
from braidkit.singular import alphabet, pair_lcm


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--length", type=int, default=8)
    args = ap.parse_args()
    alpha = alphabet(args.n)
    bs = [g for g in alpha.gens if g[0] == "b"]
    bad = 0
    for x in bs:
        t0 = time.perf_counter()
        reach = common_multiple_search(args.n, x, args.length).letters_up_to()
        partners = [y for y in bs if y != x and pair_lcm(args.n, x, y) is None]
        hits = [y for y in partners if y in reach]
        bad += len(hits)
        names = " ".join(f"b({t},{s})" for _, t, s in partners)
        print(f"b({x[1]},{x[2]}): {len(partners)} inadmissible partners [{names}], "
              f"{len(hits)} with a common multiple, {time.perf_counter() - t0:.1f}s")
    print("no common multiples found" if bad == 0 else f"{bad} pairs have common multiples")


if __name__ == "__main__":
    main()
