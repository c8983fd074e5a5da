"""Simplicial complexes on vertex labels 1..64, stored by their facets.

Faces are bit masks: vertex v corresponds to bit v-1 of a Python int,
so subset tests, unions and intersections are single integer ops.  The
complex {emptyset} (one empty facet, no vertices) is a first-class
value; the void complex (no faces at all) is rejected everywhere.

The ground set is always the union of the facets: a vertex exists iff
it lies in some facet.  Operations that depend on an ambient [n] larger
than the ground set take n explicitly.
"""

from __future__ import annotations

import itertools
from math import comb

from .errors import InvalidParameters, OverlappingGroundSets

MAX_VERTEX = 64


class cached_property:
    """Memoizing property for slotted classes: caches in self._cache."""

    def __init__(self, fn):
        self.fn = fn
        self.name = fn.__name__
        self.__doc__ = fn.__doc__

    def __get__(self, obj, objtype=None):
        if obj is None:
            return self
        if self.name not in obj._cache:
            obj._cache[self.name] = self.fn(obj)
        return obj._cache[self.name]


def mask_of(verts) -> int:
    """Bit mask of an iterable of vertex labels."""
    m = 0
    for v in verts:
        v = int(v)
        if not 1 <= v <= MAX_VERTEX:
            raise InvalidParameters(f"vertex {v} outside 1..{MAX_VERTEX}")
        m |= 1 << (v - 1)
    return m


def verts_of(mask: int) -> tuple:
    """Sorted tuple of vertex labels in a face mask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def subsets_of(mask: int):
    """All submasks of mask, the empty face included."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class SimplicialComplex:
    """Immutable simplicial complex given by its facets (maximal faces)."""

    __slots__ = ("facets", "ground", "_cache")

    def __init__(self, facet_masks):
        masks = set(int(m) for m in facet_masks)
        if not masks:
            raise InvalidParameters("void complex: a complex has at least {emptyset}")
        # keep only maximal faces
        facets = frozenset(
            m for m in masks if not any(m != o and m & o == m for o in masks)
        )
        object.__setattr__(self, "facets", facets)
        g = 0
        for m in facets:
            g |= m
        object.__setattr__(self, "ground", g)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_facets(cls, facets) -> "SimplicialComplex":
        """Build from an iterable of vertex iterables, e.g. [[1,2],[2,3]]."""
        return cls(mask_of(f) for f in facets)

    # -- basic queries ---------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        fs = sorted(verts_of(m) for m in self.facets)
        return f"SimplicialComplex({fs})"

    def __contains__(self, face_mask: int) -> bool:
        face_mask = int(face_mask)
        return any(face_mask & f == face_mask for f in self.facets)

    def has_face(self, verts) -> bool:
        return mask_of(verts) in self

    @property
    def is_empty_complex(self) -> bool:
        return self.ground == 0

    @cached_property
    def vertices(self) -> tuple:
        return verts_of(self.ground)

    @cached_property
    def dim(self) -> int:
        return max(m.bit_count() for m in self.facets) - 1

    @cached_property
    def is_pure(self) -> bool:
        sizes = {m.bit_count() for m in self.facets}
        return len(sizes) == 1

    @cached_property
    def faces(self) -> frozenset:
        """Every face, as a frozenset of masks (the empty face included)."""
        out = set()
        for f in self.facets:
            out.update(subsets_of(f))
        return frozenset(out)

    def faces_of_card(self, k: int) -> frozenset:
        """Faces with exactly k vertices (k = 0 gives the empty face)."""
        if k < 0:
            raise InvalidParameters("cardinality must be >= 0")
        key = ("card", k)
        if key not in self._cache:
            self._cache[key] = frozenset(m for m in self.faces if m.bit_count() == k)
        return self._cache[key]

    @cached_property
    def f_vector(self) -> tuple:
        """(f_0, ..., f_{dim}); empty tuple for {emptyset}."""
        counts = [0] * (self.dim + 1)
        for m in self.faces:
            k = m.bit_count()
            if k:
                counts[k - 1] += 1
        return tuple(counts)

    @cached_property
    def h_vector(self) -> tuple:
        return h_from_f(self.f_vector, self.dim + 1)

    # -- transformations ---------------------------------------------------

    def relabel(self, mapping) -> "SimplicialComplex":
        """Apply an injective vertex relabeling {old: new}."""
        mp = {int(a): int(b) for a, b in mapping.items()}
        if len(set(mp.values())) != len(mp):
            raise InvalidParameters("relabeling is not injective")
        return SimplicialComplex(
            mask_of(mp.get(v, v) for v in verts_of(m)) for m in self.facets
        )

    def restrict(self, verts) -> "SimplicialComplex":
        """Induced subcomplex on a vertex subset."""
        keep = mask_of(verts)
        return SimplicialComplex(m & keep for m in self.facets)

    # -- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "ground": list(self.vertices),
            "facets": sorted(list(verts_of(m)) for m in self.facets),
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "SimplicialComplex":
        if "facets" not in d:
            raise InvalidParameters("complex JSON needs a 'facets' key")
        c = cls.from_facets(d["facets"])
        if "ground" in d and mask_of(d["ground"]) != c.ground:
            raise InvalidParameters(
                "ground set must equal the union of the facets"
            )
        return c


EMPTY_COMPLEX = SimplicialComplex([0])


def h_from_f(f_vector, d: int) -> tuple:
    """h-vector (h_0..h_d) from (f_0..f_{d-1}), using f_{-1} = 1."""
    f = (1,) + tuple(f_vector)
    return tuple(
        sum((-1) ** (i - j) * comb(d - j, d - i) * f[j] for j in range(i + 1))
        for i in range(d + 1)
    )


def f_from_h(h_vector) -> tuple:
    """Inverse transform: (f_0..f_{d-1}) from (h_0..h_d)."""
    h = tuple(h_vector)
    d = len(h) - 1
    f = [
        sum(comb(d - j, d - i) * h[j] for j in range(i + 1))
        for i in range(d + 1)
    ]
    assert f[0] == 1
    return tuple(f[1:])


def f_polynomial_coeffs(c: SimplicialComplex) -> tuple:
    """Coefficients (f_{-1}, f_0, ..., f_{dim}) of the f-polynomial."""
    return (1,) + c.f_vector


def full_simplex(verts) -> SimplicialComplex:
    """The full simplex on a vertex set (its single facet is the whole set)."""
    return SimplicialComplex([mask_of(verts)])


def simplex_boundary(verts) -> SimplicialComplex:
    """Boundary of the simplex on the given vertices.

    One vertex gives {emptyset}; the empty set is rejected since the
    boundary of the empty simplex would be void.
    """
    m = mask_of(verts)
    k = m.bit_count()
    if k == 0:
        raise InvalidParameters("boundary of the empty simplex is void")
    vs = verts_of(m)
    return SimplicialComplex(m & ~(1 << (v - 1)) for v in vs)


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join of complexes on disjoint ground sets: facets are pairwise unions."""
    if a.ground & b.ground:
        raise OverlappingGroundSets(
            f"ground sets share vertices {verts_of(a.ground & b.ground)}"
        )
    return SimplicialComplex(fa | fb for fa in a.facets for fb in b.facets)


def cone(apex: int, base: SimplicialComplex) -> SimplicialComplex:
    """Cone with a fresh apex vertex over the base complex."""
    return join(full_simplex([apex]), base)


def is_shifted(c: SimplicialComplex, n: int | None = None) -> bool:
    """Shifted on [n]: replacing a vertex by any larger label stays a face.

    n defaults to the largest vertex; for {emptyset} the answer is True.
    """
    if c.is_empty_complex:
        return True
    if n is None:
        n = max(c.vertices)
    faces = c.faces
    for m in faces:
        for v in verts_of(m):
            for j in range(v + 1, n + 1):
                jbit = 1 << (j - 1)
                if m & jbit:
                    continue
                if (m & ~(1 << (v - 1))) | jbit not in faces:
                    return False
    return True


def cyclic_boundary(n: int, d: int) -> SimplicialComplex:
    """Boundary complex of the cyclic d-polytope with n vertices.

    Facets are the d-subsets of [n] passing Gale's evenness condition:
    between any two non-members there is an even number of members.
    """
    if d < 1 or n < d + 1:
        raise InvalidParameters("need n >= d+1 >= 2")
    if n > MAX_VERTEX:
        raise InvalidParameters(f"n exceeds {MAX_VERTEX}")
    if d == 1 and n > 2:
        raise InvalidParameters("a 1-polytope has exactly 2 vertices")
    facets = []
    for fs in itertools.combinations(range(1, n + 1), d):
        inside = set(fs)
        ok = True
        comp = [v for v in range(1, n + 1) if v not in inside]
        for a, b in itertools.combinations(comp, 2):
            cnt = sum(1 for v in fs if a < v < b)
            if cnt % 2:
                ok = False
                break
        if ok:
            facets.append(mask_of(fs))
    out = SimplicialComplex(facets)
    if out.ground != mask_of(range(1, n + 1)):
        raise InvalidParameters(f"cyclic boundary ({n},{d}) does not use all vertices")
    return out
