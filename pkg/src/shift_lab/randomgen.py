"""Seeded random complex generators for property tests and verification
suites.

The base generator takes the pure skeleton of a given dimension on n
vertices and deletes random facets until a density target is met.  All
generators are deterministic functions of their seed.
"""

from __future__ import annotations

import itertools
import random

from .complexes import SimplicialComplex, mask_of, verts_of
from .errors import InvalidParameters


def random_complex(n: int, dim: int, density: float, seed: int) -> SimplicialComplex:
    """A random pure dim-dimensional complex on (a subset of) [n].

    Start from all (dim+1)-subsets of [n] and keep a random selection of
    round(density * total) of them, at least one.  Vertices that end up
    in no kept facet simply disappear from the ground set.
    """
    if n < 1:
        raise InvalidParameters("need n >= 1")
    if dim < 0 or dim > n - 1:
        raise InvalidParameters("need 0 <= dim <= n-1")
    if not 0 < density <= 1:
        raise InvalidParameters("need 0 < density <= 1")
    pool = [mask_of(fs) for fs in itertools.combinations(range(1, n + 1), dim + 1)]
    keep = min(len(pool), max(1, round(density * len(pool))))
    rng = random.Random(seed)
    return SimplicialComplex(rng.sample(pool, keep))


def random_subcomplex(c: SimplicialComplex, fraction: float, seed: int) -> SimplicialComplex:
    """A random subcomplex of c: the closure of a random subset of its faces.

    Keeps roughly `fraction` of the faces (at least one), so the result
    may drop in dimension.  Always a genuine subcomplex of c.
    """
    if not 0 < fraction <= 1:
        raise InvalidParameters("need 0 < fraction <= 1")
    faces = [m for m in c.faces if m]
    if not faces:
        return c
    keep = min(len(faces), max(1, round(fraction * len(faces))))
    rng = random.Random(seed)
    return SimplicialComplex(rng.sample(faces, keep))


def random_pure_shifted_complex(n: int, dim: int, count: int, seed: int) -> SimplicialComplex:
    """A random pure shifted complex: the up-closure of `count` random
    (dim+1)-subsets of [n].

    A family of k-sets closed under replacing an element by a larger one
    generates a shifted pure complex; such complexes are Cohen-Macaulay.
    """
    if dim < 0 or dim > n - 1:
        raise InvalidParameters("need 0 <= dim <= n-1")
    if count < 1:
        raise InvalidParameters("need count >= 1")
    rng = random.Random(seed)
    pool = list(itertools.combinations(range(1, n + 1), dim + 1))
    seeds = rng.sample(pool, min(count, len(pool)))
    facets = set()
    frontier = [mask_of(fs) for fs in seeds]
    while frontier:
        m = frontier.pop()
        if m in facets:
            continue
        facets.add(m)
        for v in verts_of(m):
            for w in range(v + 1, n + 1):
                if not m >> (w - 1) & 1:
                    frontier.append(m & ~(1 << (v - 1)) | (1 << (w - 1)))
    return SimplicialComplex(facets)
