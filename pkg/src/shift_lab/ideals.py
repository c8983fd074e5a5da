"""Monomials and monomial ideals.

A monomial is a sorted tuple of variable indices with multiplicity:
x_1^2 x_3 is (1, 1, 3) and 1 is ().  This makes degree len(u), makes
divisibility a multiset test, and makes the squarefree stretch (the
map sending x_{i_1} x_{i_2} ... to x_{i_1} x_{i_2 + 1} ...) a one-line
reindexing.  Exponent-vector conversions exist for JSON and for the
Macaulay column bookkeeping.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb

from .complexes import SimplicialComplex, mask_of, verts_of
from .errors import (
    InvalidParameters,
    SquarefreeImageOutOfRange,
    SupportOutOfRange,
)

# -- monomial helpers ------------------------------------------------------


def mono_mul(u: tuple, v: tuple) -> tuple:
    return tuple(sorted(u + v))


def mono_divides(u: tuple, v: tuple) -> bool:
    """Does u divide v (multiset containment)?"""
    it = iter(v)
    for a in u:
        for b in it:
            if b == a:
                break
            if b > a:
                return False
        else:
            return False
    return True


def mono_exp(u: tuple, n: int) -> tuple:
    e = [0] * n
    for i in u:
        if not 1 <= i <= n:
            raise SupportOutOfRange(f"variable {i} outside [1..{n}]")
        e[i - 1] += 1
    return tuple(e)


def mono_from_exp(e) -> tuple:
    out = []
    for i, k in enumerate(e, start=1):
        out.extend([i] * int(k))
    return tuple(out)


def mono_support_mask(u: tuple) -> int:
    return mask_of(set(u))


def monomials_of_degree(m: int, k: int):
    """All degree-k monomials in variables 1..m (nondecreasing tuples)."""
    return itertools.combinations_with_replacement(range(1, m + 1), k)


def squarefree_op(u: tuple, n: int | None = None) -> tuple:
    """Stretch to a squarefree monomial: the t-th index gains t-1.

    The image of x_{i_1} <= ... <= x_{i_k} is x_{i_1} x_{i_2+1} ...
    x_{i_k+k-1}, always squarefree; if n is given the image must stay
    inside [n].
    """
    out = tuple(i + t for t, i in enumerate(u))
    if n is not None and out and out[-1] > n:
        raise SquarefreeImageOutOfRange(
            f"image of {u} needs variable {out[-1]} > n = {n}"
        )
    return out


def squarefree_op_inverse(v: tuple) -> tuple:
    """Inverse stretch; v must have strictly increasing indices."""
    if any(a >= b for a, b in zip(v, v[1:])):
        raise InvalidParameters("not a squarefree monomial")
    out = tuple(i - t for t, i in enumerate(v))
    if out and out[0] < 1:
        raise InvalidParameters("inverse image leaves the variable range")
    return out


# -- monomial ideals -------------------------------------------------------


class MonomialIdeal:
    """A monomial ideal in n variables, stored by minimal generators."""

    __slots__ = ("n", "gens")

    def __init__(self, n: int, gens):
        gens = [tuple(g) for g in gens]
        for g in gens:
            if any(not 1 <= i <= n for i in g):
                raise SupportOutOfRange(f"generator {g} leaves [1..{n}]")
            if tuple(sorted(g)) != g:
                raise InvalidParameters(f"generator {g} is not sorted")
        minimal = []
        for g in sorted(set(gens), key=lambda t: (len(t), t)):
            if not any(mono_divides(h, g) for h in minimal):
                minimal.append(g)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", tuple(minimal))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.n == other.n
            and set(self.gens) == set(other.gens)
        )

    def __hash__(self):
        return hash((self.n, self.gens))

    def __repr__(self):
        return f"MonomialIdeal(n={self.n}, gens={list(self.gens)})"

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, u: tuple) -> bool:
        return any(mono_divides(g, u) for g in self.gens)

    def max_gen_degree(self) -> int:
        return max((len(g) for g in self.gens), default=0)

    def is_squarefree(self) -> bool:
        return all(len(set(g)) == len(g) for g in self.gens)

    def is_strongly_stable(self) -> bool:
        """Closed under swapping any variable for a smaller one.

        Checking generators suffices: every monomial of the ideal is a
        multiple of a generator and the swap commutes with multiples.
        """
        for g in self.gens:
            for j in set(g):
                rest = list(g)
                rest.remove(j)
                for i in range(1, j):
                    if not self.contains(tuple(sorted(rest + [i]))):
                        return False
        return True

    def monomials_at(self, k: int) -> set:
        return {
            u
            for u in monomials_of_degree(self.n, k)
            if self.contains(u)
        }

    def dim_at(self, k: int) -> int:
        """Number of degree-k monomials inside the ideal."""
        return sum(1 for u in monomials_of_degree(self.n, k) if self.contains(u))

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "generators": [list(mono_exp(g, self.n)) for g in self.gens],
        }

    @classmethod
    def from_exponents(cls, n: int, exps) -> "MonomialIdeal":
        return cls(n, (mono_from_exp(e) for e in exps))


def squarefree_image_ideal(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """Apply the squarefree stretch to every generator."""
    return MonomialIdeal(n, (squarefree_op(g, n) for g in ideal.gens))


# -- Stanley-Reisner correspondence ---------------------------------------


def minimal_nonfaces(c: SimplicialComplex, n: int | None = None) -> list:
    """Masks of the minimal non-faces of c inside the ambient [n].

    Vertices of [n] missing from c appear as singleton non-faces.
    """
    if n is None:
        n = max(c.vertices) if not c.is_empty_complex else 0
    if c.ground & ~((1 << n) - 1):
        raise InvalidParameters("complex does not fit inside [n]")
    faces = c.faces
    out = []
    for k in range(1, n + 1):
        for fs in itertools.combinations(range(1, n + 1), k):
            m = mask_of(fs)
            if m in faces:
                continue
            if all(m & ~(1 << (v - 1)) in faces for v in fs):
                out.append(m)
    return sorted(out)


def stanley_reisner_ideal(c: SimplicialComplex, n: int | None = None) -> MonomialIdeal:
    """Squarefree ideal generated by the minimal non-faces of c in [n]."""
    if n is None:
        n = max(c.vertices) if not c.is_empty_complex else 0
    return MonomialIdeal(max(n, 1), (verts_of(m) for m in minimal_nonfaces(c, n)))


def exterior_face_ideal(c: SimplicialComplex, n: int | None = None) -> list:
    """Generators of the exterior face ideal: same masks as the minimal
    non-faces (the two ideals share supports by construction)."""
    return minimal_nonfaces(c, n)


def complex_from_squarefree_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """Complex on [n] whose faces are the squarefree standard monomials."""
    if not ideal.is_squarefree():
        raise InvalidParameters("ideal is not squarefree")
    n = ideal.n
    gen_masks = [mono_support_mask(g) for g in ideal.gens]
    if 0 in gen_masks:
        raise InvalidParameters("the unit ideal has no complex")
    faces = {
        m
        for m in range(1 << n)
        if not any(g & m == g for g in gen_masks)
    }
    # the face set is downward closed, so maximality is a one-step check
    facets = [
        m for m in faces
        if not any((m | (1 << v)) in faces for v in range(n) if not m >> v & 1)
    ]
    return SimplicialComplex(facets)


def complex_hilbert(c: SimplicialComplex, k: int) -> int:
    """Hilbert function of the face ring of c at degree k."""
    if k == 0:
        return 1
    return sum(
        comb(k - 1, s - 1) * f
        for s, f in enumerate(c.f_vector, start=1)
    )


@lru_cache(maxsize=None)
def _poly_count(n: int, k: int) -> int:
    return comb(n + k - 1, k)


def face_ideal_dim_at(c: SimplicialComplex, n: int, k: int) -> int:
    """dim of the degree-k piece of the Stanley-Reisner ideal in [n]."""
    return _poly_count(n, k) - complex_hilbert(c, k)
