"""Exhaustive common-multiple search in SBKL_n^+ with a bitmap over all words.

For a letter x, A_L is the set of positive words of length L that are
positively equivalent to a word starting with x.  It is the closure of
A_{L-1} * (any letter) under the length-two relations.  A letter y has a
common multiple with x of length L exactly when some word in A_L starts
with y.  Words are indexed in base G (G = number of generators) with the
first letter most significant, so "starts with y" is an index range.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .singular import Gen, alphabet

STACK = 1 << 16


@njit(cache=True)
def _closure_sweep(state, L, G, pows, alt_start, alt_list):
    """Close ``state`` (0 absent, 1 pending, 2 done) under the rewrites."""
    stack = np.empty(STACK, dtype=np.int64)
    size = state.shape[0]
    pending = True
    while pending:
        pending = False
        for idx0 in range(size):
            if state[idx0] != 1:
                continue
            top = 0
            stack[0] = idx0
            top = 1
            while top > 0:
                top -= 1
                idx = stack[top]
                if state[idx] == 2:
                    continue
                state[idx] = 2
                for p in range(L - 1):
                    hi = pows[L - 1 - p]
                    lo = pows[L - 2 - p]
                    c1 = (idx // hi) % G
                    c2 = (idx // lo) % G
                    pair = c1 * G + c2
                    for k in range(alt_start[pair], alt_start[pair + 1]):
                        a = alt_list[2 * k]
                        b = alt_list[2 * k + 1]
                        j = idx + (a - c1) * hi + (b - c2) * lo
                        if state[j] == 0:
                            state[j] = 1
                            if top < STACK:
                                stack[top] = j
                                top += 1
                            elif j < idx:
                                pending = True
                            # larger pending indices are met later in this sweep
    return state


@njit(cache=True)
def _extend(prev, G):
    out = np.zeros(prev.shape[0] * G, dtype=np.uint8)
    for i in range(prev.shape[0]):
        if prev[i] != 0:
            for c in range(G):
                out[i * G + c] = 1
    return out


@njit(cache=True)
def _first_letters(state, G):
    block = state.shape[0] // G
    hit = np.zeros(G, dtype=np.uint8)
    for y in range(G):
        for i in range(y * block, (y + 1) * block):
            if state[i] != 0:
                hit[y] = 1
                break
    return hit


def _rewrite_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    alpha = alphabet(n)
    G = len(alpha.gens)
    starts = [0]
    flat: list[int] = []
    for c1 in range(G):
        for c2 in range(G):
            for a, b in alpha.rewrites.get((c1, c2), ()):
                flat.extend((a, b))
            starts.append(len(flat) // 2)
    return np.array(starts, dtype=np.int64), np.array(flat or [0, 0], dtype=np.int64)


@dataclass(frozen=True)
class MultipleSearch:
    """For each length L, the letters y sharing a common multiple of length L with x."""

    n: int
    x: Gen
    max_length: int
    co_divisors: tuple[tuple[Gen, ...], ...]  # index L-1 holds the letters for length L

    def letters_up_to(self, length: int | None = None) -> set[Gen]:
        upto = self.max_length if length is None else length
        out: set[Gen] = set()
        for ys in self.co_divisors[:upto]:
            out.update(ys)
        return out


def common_multiple_search(n: int, x: Gen, max_length: int) -> MultipleSearch:
    """Exact search over all words of length <= ``max_length``."""
    alpha = alphabet(n)
    G = len(alpha.gens)
    if G ** max_length > 2_000_000_000:
        raise ValueError("search space too large")
    starts, flat = _rewrite_arrays(n)
    pows = np.array([G**k for k in range(max_length + 1)], dtype=np.int64)
    state = np.zeros(G, dtype=np.uint8)
    state[alpha.code[x]] = 2
    found = [(x,)]
    for L in range(2, max_length + 1):
        state = _extend(state, G)
        state = _closure_sweep(state, L, G, pows, starts, flat)
        hits = _first_letters(state, G)
        found.append(tuple(alpha.gens[y] for y in range(G) if hits[y]))
    return MultipleSearch(n, x, max_length, tuple(found))
