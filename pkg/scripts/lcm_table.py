"""Print the l.c.m. of every pair of SBKL generators for one n, checked by exhaustive search.

    python scripts/lcm_table.py 4
"""

from __future__ import annotations

import argparse

from braidkit.search import common_multiple_search
from braidkit.singular import alphabet, pair_lcm


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n", type=int)
    args = ap.parse_args()
    n = args.n
    alpha = alphabet(n)
    for x in alpha.gens:
        # the table never needs more than four letters
        search = common_multiple_search(n, x, 4)
        for y in alpha.gens:
            if y <= x:
                continue
            entry = pair_lcm(n, x, y)
            found = [L for L in range(1, 5) if y in search.co_divisors[L - 1]]
            first = found[0] if found else None
            name = f"{x[0]}({x[1]},{x[2]}) {y[0]}({y[1]},{y[2]})"
            if entry is None:
                verdict = "ok" if first is None else f"MISMATCH: search found length {first}"
                print(f"{name:22} inadmissible  {verdict}")
            else:
                lcm = alpha.format(entry.lcm)
                verdict = "ok" if first == len(entry.lcm) else f"MISMATCH: search found {first}"
                print(f"{name:22} {lcm:40} {verdict}")


if __name__ == "__main__":
    main()
