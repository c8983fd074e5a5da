"""Monomial orders and the column bookkeeping for Macaulay matrices.

Two orders appear, both induced by x_1 > x_2 > ... > x_n:

* degree reverse lexicographic on exponent tuples: higher total degree
  wins; at equal degree u > v iff the last nonzero entry of u - v is
  negative.  Within a fixed degree, descending degrevlex is the same as
  ascending lexicographic order on the reversed exponent tuple.

* its restriction to squarefree monomials e_S of a fixed degree:
  S > T iff max(S xor T) lies in T.  Since integer comparison of masks
  is decided by the highest differing bit, descending order is exactly
  ascending numeric order of the masks.

Column lists are always descending, so Gaussian elimination scanning
columns left to right produces exactly the initial-monomial set.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np


def compare_degrevlex(u, v) -> int:
    """-1, 0, 1 comparison of exponent tuples (same variable count)."""
    du, dv = sum(u), sum(v)
    if du != dv:
        return 1 if du > dv else -1
    for a, b in zip(reversed(u), reversed(v)):
        if a != b:
            # last nonzero of u - v negative means u is larger
            return 1 if a < b else -1
    return 0


def compare_revlex_sets(s, t) -> int:
    """-1, 0, 1 comparison of equal-size vertex sets (masks or iterables)."""
    sm = s if isinstance(s, int) else _mask(s)
    tm = t if isinstance(t, int) else _mask(t)
    if sm.bit_count() != tm.bit_count():
        raise ValueError("revlex compares sets of equal size")
    diff = sm ^ tm
    if not diff:
        return 0
    top = diff.bit_length() - 1
    return 1 if tm >> top & 1 else -1


def _mask(verts) -> int:
    m = 0
    for v in verts:
        m |= 1 << (int(v) - 1)
    return m


@lru_cache(maxsize=None)
def poly_columns(n: int, k: int):
    """Degree-k exponent tuples on n variables, descending degrevlex.

    Returns (tuple of exponent tuples, dict tuple -> column index).
    """
    mons = [
        tuple(e)
        for e in _compositions(k, n)
    ]
    mons.sort(key=lambda e: e[::-1])
    index = {e: i for i, e in enumerate(mons)}
    return tuple(mons), index


def _compositions(total: int, parts: int):
    if parts == 1:
        yield [total]
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield [head] + rest


@lru_cache(maxsize=None)
def ext_columns(n: int, k: int):
    """k-subset masks of [n], descending revlex (so {1..k} comes first).

    Returns (tuple of masks, dict mask -> column index).
    """
    masks = sorted(_mask(c) for c in itertools.combinations(range(1, n + 1), k))
    index = {m: i for i, m in enumerate(masks)}
    return tuple(masks), index


@lru_cache(maxsize=None)
def poly_mulmaps(n: int, k: int):
    """Column maps for multiplication by each variable, degree k-1 -> k.

    Entry j-1 is an int64 array a with a[col of m] = col of m * x_j.
    """
    lo, _ = poly_columns(n, k - 1)
    _, hi_index = poly_columns(n, k)
    maps = []
    for j in range(n):
        arr = np.empty(len(lo), dtype=np.int64)
        for i, e in enumerate(lo):
            bumped = e[:j] + (e[j] + 1,) + e[j + 1:]
            arr[i] = hi_index[bumped]
        maps.append(arr)
    return tuple(maps)


@lru_cache(maxsize=None)
def ext_mulmaps(n: int, k: int):
    """Column maps for left wedge by each e_j, degree k-1 -> k.

    Entry j-1 is (targets, odd): targets[col of S] = col of S + {j} or -1
    when j already lies in S; odd[col] = 1 iff the wedge sign is -1
    (the parity of |{s in S : s < j}|).
    """
    lo, _ = ext_columns(n, k - 1)
    _, hi_index = ext_columns(n, k)
    maps = []
    for j in range(1, n + 1):
        jbit = 1 << (j - 1)
        tgt = np.empty(len(lo), dtype=np.int64)
        odd = np.empty(len(lo), dtype=np.uint8)
        below = jbit - 1
        for i, s in enumerate(lo):
            if s & jbit:
                tgt[i] = -1
                odd[i] = 0
            else:
                tgt[i] = hi_index[s | jbit]
                odd[i] = (s & below).bit_count() & 1
        maps.append((tgt, odd))
    return tuple(maps)
