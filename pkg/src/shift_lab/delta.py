"""The extremal shifted complex Delta(n,d): the algebraic shift of the
boundary of a cyclic d-polytope with n vertices.

Its facets have two equivalent descriptions which are cross-checked at
build time: the admissibility test on d-subsets of [n], and an explicit
union of families W_i(n,d) indexed by i <= d/2.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .complexes import EMPTY_COMPLEX, SimplicialComplex, mask_of, verts_of
from .errors import InvalidParameters, WrongCardinality


def is_admissible(fs, n: int, d: int) -> bool:
    """Is the d-subset fs of [n] a facet of Delta(n,d)?

    The test: for every k with n-k outside fs, the whole interval
    [n-d+k, n-k-1] must lie inside fs (empty intervals pass).
    """
    f = set(int(v) for v in fs)
    if len(f) != d:
        raise WrongCardinality(f"expected a {d}-subset")
    if not f <= set(range(1, n + 1)):
        raise InvalidParameters("subset leaves [n]")
    for k in range(n):
        if (n - k) in f:
            continue
        lo, hi = n - d + k, n - k - 1
        if any(v not in f for v in range(lo, hi + 1)):
            return False
    return True


def _w_family(n: int, d: int, i: int, drop_low: bool):
    """W_i(n,d) (drop_low) or W_{d-i}(n,d): interval [n-d+i, n] with one
    element removed, completed by any i-subset of the prefix.
    """
    base = list(range(n - d + i, n + 1))
    removed = (n - d + i) if drop_low else (n - i)
    kept = [v for v in base if v != removed]
    for extra in itertools.combinations(range(1, n - d + i), i):
        yield mask_of(kept + list(extra))


@lru_cache(maxsize=None)
def build_delta(n: int, d: int) -> SimplicialComplex:
    """Delta(n,d), built from the W-families and cross-checked against
    the admissibility test.  Delta(n,0) is {emptyset}.
    """
    if d < 0 or n < 0:
        raise InvalidParameters("need n, d >= 0")
    if d == 0:
        return EMPTY_COMPLEX
    if n < d + 1:
        raise InvalidParameters("need n >= d+1 when d >= 1")
    facets = set()
    for i in range(d // 2 + 1):
        facets.update(_w_family(n, d, i, drop_low=True))
        facets.update(_w_family(n, d, i, drop_low=False))
    admissible = {
        mask_of(fs)
        for fs in itertools.combinations(range(1, n + 1), d)
        if is_admissible(fs, n, d)
    }
    assert facets == admissible, "W-families disagree with admissibility"
    return SimplicialComplex(facets)


def build_delta_on(verts, d: int) -> SimplicialComplex:
    """Delta(V,d): the order-isomorphic copy of Delta(|V|,d) on labels V."""
    vs = sorted(set(int(v) for v in verts))
    if d == 0:
        return EMPTY_COMPLEX
    base = build_delta(len(vs), d)
    return base.relabel({k + 1: v for k, v in enumerate(vs)})


def contained_in_delta(c: SimplicialComplex, n: int, d: int) -> bool:
    """Is every face of c a face of Delta(n,d)?"""
    return delta_outlier(c, n, d) is None


def delta_outlier(c: SimplicialComplex, n: int, d: int):
    """A facet of c that is not a face of Delta(n,d), as a vertex tuple,
    or None when c is contained in Delta(n,d)."""
    if d == 0:
        if c == EMPTY_COMPLEX:
            return None
        return verts_of(min(c.facets))
    delta = build_delta(n, d)
    for m in sorted(c.facets):
        if m not in delta:
            return verts_of(m)
    return None
