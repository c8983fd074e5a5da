"""Monomials, monomial ideals, Stanley-Reisner data, squarefree operation.

Monomials are sorted index tuples with multiplicity (so x_1^2 x_3 is
(1, 1, 3)); the brute-force oracles below enumerate faces and monomial
multiples directly.
"""

import itertools
import random
from math import comb

import pytest

from shift_lab import EMPTY_COMPLEX, SimplicialComplex, mask_of, verts_of
from shift_lab.ideals import (
    MonomialIdeal,
    complex_from_squarefree_ideal,
    complex_hilbert,
    exterior_face_ideal,
    face_ideal_dim_at,
    minimal_nonfaces,
    mono_divides,
    mono_exp,
    mono_from_exp,
    mono_mul,
    mono_support_mask,
    monomials_of_degree,
    squarefree_image_ideal,
    squarefree_op,
    squarefree_op_inverse,
    stanley_reisner_ideal,
)

FOUR_CYCLE = [(1, 2), (2, 3), (3, 4), (1, 4)]
SIGMA = FOUR_CYCLE + [(1, 3)]


# ---------------------------------------------------------------------------
# monomial arithmetic
# ---------------------------------------------------------------------------


def test_mono_mul_merges_sorted():
    assert mono_mul((1, 3), (2,)) == (1, 2, 3)
    assert mono_mul((), (1, 1)) == (1, 1)
    assert mono_mul((2,), (2,)) == (2, 2)


def test_mono_divides():
    assert mono_divides((), (1, 2))
    assert mono_divides((1,), (1, 1, 2))
    assert not mono_divides((1, 1), (1, 2))
    assert not mono_divides((3,), (1, 2))


def test_mono_exp_roundtrip():
    assert mono_exp((1, 1, 3), 4) == (2, 0, 1, 0)
    assert mono_from_exp((2, 0, 1, 0)) == (1, 1, 3)
    rng = random.Random(7)
    for _ in range(100):
        u = tuple(sorted(rng.choices(range(1, 6), k=rng.randrange(0, 5))))
        assert mono_from_exp(mono_exp(u, 5)) == u


def test_mono_support_mask():
    assert mono_support_mask((1, 1, 3)) == mask_of((1, 3))
    assert mono_support_mask(()) == 0


@pytest.mark.parametrize("m,k", [(1, 3), (2, 2), (3, 3), (4, 2), (5, 1)])
def test_monomials_of_degree_count(m, k):
    mons = list(monomials_of_degree(m, k))
    assert len(mons) == comb(m + k - 1, k)
    assert len(set(mons)) == len(mons)
    assert all(len(u) == k and all(1 <= i <= m for i in u) for u in mons)


def test_monomials_of_degree_zero():
    assert list(monomials_of_degree(3, 0)) == [()]


# ---------------------------------------------------------------------------
# squarefree operation
# ---------------------------------------------------------------------------


def test_squarefree_op_examples():
    # x_1^2 x_2 -> x_1 x_2 x_4
    assert squarefree_op((1, 1, 2)) == (1, 2, 4)
    assert squarefree_op((3,)) == (3,)
    assert squarefree_op(()) == ()


def test_squarefree_op_formula():
    rng = random.Random(19)
    for _ in range(200):
        u = tuple(sorted(rng.choices(range(1, 7), k=rng.randrange(0, 6))))
        v = squarefree_op(u)
        assert v == tuple(i + t for t, i in enumerate(u))
        assert len(set(v)) == len(v)
        assert squarefree_op_inverse(v) == u


# ---------------------------------------------------------------------------
# monomial ideals
# ---------------------------------------------------------------------------


def test_ideal_minimalizes_generators():
    ideal = MonomialIdeal(3, [(1,), (1, 2), (2, 3)])
    assert ideal.gens == ((1,), (2, 3))


def test_ideal_dim_at_brute_force():
    ideal = MonomialIdeal(3, [(1, 1), (2, 3)])
    for k in range(6):
        want = sum(
            1
            for u in monomials_of_degree(3, k)
            if any(mono_divides(g, u) for g in ideal.gens)
        )
        assert ideal.dim_at(k) == want


def test_ideal_squarefree_flag():
    assert MonomialIdeal(4, [(1, 3), (2, 4)]).is_squarefree
    assert not MonomialIdeal(4, [(1, 1)]).is_squarefree


def test_strongly_stable():
    # Gin of the 4-cycle: swapping any variable for a smaller one stays inside
    assert MonomialIdeal(4, [(1, 1), (1, 2), (2, 2, 2)]).is_strongly_stable
    # (x_2^2) alone is not: x_1 x_2 is missing
    assert not MonomialIdeal(2, [(2, 2)]).is_strongly_stable
    assert MonomialIdeal(2, []).is_strongly_stable


def test_squarefree_image_of_the_four_cycle_gin():
    gin = MonomialIdeal(4, [(1, 1), (1, 2), (2, 2, 2)])
    img = squarefree_image_ideal(gin, 4)
    assert sorted(img.gens) == [(1, 2), (1, 3), (2, 3, 4)]
    assert img.is_squarefree


# ---------------------------------------------------------------------------
# Stanley-Reisner data
# ---------------------------------------------------------------------------


def brute_minimal_nonfaces(c, n):
    faces = {frozenset(verts_of(m)) for m in c.faces}
    nonfaces = [
        frozenset(s)
        for k in range(1, n + 1)
        for s in itertools.combinations(range(1, n + 1), k)
        if frozenset(s) not in faces
    ]
    return sorted(
        tuple(sorted(s))
        for s in nonfaces
        if all(frozenset(t) in faces for t in itertools.combinations(s, len(s) - 1))
    )


def test_minimal_nonfaces_examples():
    c = SimplicialComplex.from_facets(FOUR_CYCLE)
    assert sorted(verts_of(m) for m in minimal_nonfaces(c)) == [(1, 3), (2, 4)]
    sig = SimplicialComplex.from_facets(SIGMA)
    assert sorted(verts_of(m) for m in minimal_nonfaces(sig)) == [
        (1, 2, 3), (1, 3, 4), (2, 4)]
    full = SimplicialComplex.from_facets([(1, 2, 3)])
    assert minimal_nonfaces(full) == []


def test_minimal_nonfaces_with_missing_vertices():
    c = SimplicialComplex.from_facets([(1, 2)])
    assert sorted(verts_of(m) for m in minimal_nonfaces(c, n=4)) == [(3,), (4,)]


def test_minimal_nonfaces_brute_force():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randrange(3, 7)
        facets = [
            tuple(sorted(rng.sample(range(1, n + 1), rng.randrange(1, 4))))
            for _ in range(rng.randrange(1, 5))
        ]
        c = SimplicialComplex.from_facets(facets)
        got = sorted(verts_of(m) for m in minimal_nonfaces(c, n))
        assert got == brute_minimal_nonfaces(c, n)


def test_stanley_reisner_and_exterior_ideals_share_supports():
    c = SimplicialComplex.from_facets(SIGMA)
    sr = stanley_reisner_ideal(c)
    assert sr.n == 4
    assert sorted(sr.gens) == [(1, 2, 3), (1, 3, 4), (2, 4)]
    assert sorted(exterior_face_ideal(c)) == sorted(
        mask_of(g) for g in sr.gens)


def test_complex_from_squarefree_ideal_roundtrip():
    rng = random.Random(13)
    for _ in range(30):
        n = rng.randrange(3, 7)
        facets = [
            tuple(sorted(rng.sample(range(1, n + 1), rng.randrange(1, 4))))
            for _ in range(rng.randrange(1, 5))
        ]
        c = SimplicialComplex.from_facets(facets)
        back = complex_from_squarefree_ideal(stanley_reisner_ideal(c, n))
        assert back == c


def test_complex_from_ideal_empty_case():
    # every vertex is a nonface: the complex is {empty set}
    ideal = MonomialIdeal(2, [(1,), (2,)])
    assert complex_from_squarefree_ideal(ideal) == EMPTY_COMPLEX


# ---------------------------------------------------------------------------
# Hilbert bookkeeping
# ---------------------------------------------------------------------------


def brute_complex_hilbert(c, k):
    """Monomials of degree k whose support is a face, counted directly."""
    if k == 0:
        return 1
    n = max(c.vertices) if c.vertices else 0
    faces = {frozenset(verts_of(m)) for m in c.faces}
    return sum(
        1
        for u in monomials_of_degree(n, k)
        if frozenset(u) in faces
    )


@pytest.mark.parametrize("facets", [FOUR_CYCLE, SIGMA, [(1, 2, 3), (3, 4)]])
def test_complex_hilbert_brute_force(facets):
    c = SimplicialComplex.from_facets(facets)
    for k in range(5):
        assert complex_hilbert(c, k) == brute_complex_hilbert(c, k)


def test_face_ideal_dim_complement():
    """dim (J_Gamma)_k + #(k-1 faces) = C(n, k)."""
    c = SimplicialComplex.from_facets(SIGMA)
    for k in range(5):
        assert face_ideal_dim_at(c, 4, k) + len(c.faces_of_card(k)) == comb(4, k)
