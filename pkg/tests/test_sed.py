"""Tests for strong edge decomposability.

The search produces a witness tree; an independent verifier replays it,
checking the Link condition, both dimension identities, and the
h-vector recurrence at every internal node.
"""

import random

import pytest

from shift_lab.complexes import (
    EMPTY_COMPLEX,
    SimplicialComplex,
    cyclic_boundary,
    simplex_boundary,
)
from shift_lab.randomgen import random_complex
from shift_lab.sed import (
    SedWitness,
    h_conditions,
    is_sed,
    is_simplex_boundary,
    verify_witness,
)
from shift_lab.squeezed import squeezed_sphere

FOUR_CYCLE = [(1, 2), (2, 3), (3, 4), (1, 4)]
GAMMA_PRIME = [(1, 2), (2, 3), (3, 4), (2, 4)]
SIGMA = FOUR_CYCLE + [(1, 3)]


def fc():
    return SimplicialComplex.from_facets(FOUR_CYCLE)


# ---------------------------------------------------------------------------
# base cases and the running trio
# ---------------------------------------------------------------------------


def test_four_cycle_decomposes_at_its_first_edge():
    w = is_sed(fc())
    assert w is not None
    assert w.kind == "edge" and w.edge == (1, 2)
    assert w.edges() == [(1, 2)]
    assert w.contraction.kind == "simplex-boundary"
    assert w.link.kind == "empty"
    ok, why = verify_witness(fc(), w)
    assert ok and why is None
    assert w.to_json_dict() == {
        "kind": "edge",
        "edge": [1, 2],
        "contraction": {"kind": "simplex-boundary"},
        "link": {"kind": "empty"},
    }


def test_shifted_four_cycle_decomposes_too():
    gp = SimplicialComplex.from_facets(GAMMA_PRIME)
    w = is_sed(gp)
    assert w is not None
    assert verify_witness(gp, w) == (True, None)


def test_chorded_cycle_does_not_decompose():
    # no edge of this complex satisfies the Link condition
    assert is_sed(SimplicialComplex.from_facets(SIGMA)) is None


def test_base_cases():
    assert is_sed(EMPTY_COMPLEX).kind == "empty"
    for k in range(2, 6):
        w = is_sed(simplex_boundary(range(1, k + 2)))
        assert w.kind == "simplex-boundary"
    # a single point is neither base case and has no edges
    assert is_sed(SimplicialComplex.from_facets([(1,)])) is None


def test_is_simplex_boundary():
    assert is_simplex_boundary(simplex_boundary([2, 5, 7]))
    assert not is_simplex_boundary(fc())
    assert not is_simplex_boundary(EMPTY_COMPLEX)
    assert not is_simplex_boundary(SimplicialComplex.from_facets([(3,)]))


def test_impure_complexes_never_decompose():
    assert is_sed(SimplicialComplex.from_facets([(1, 2, 3), (4, 5)])) is None


# ---------------------------------------------------------------------------
# cycles of every length
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", range(4, 9))
def test_polygon_boundaries_decompose(n):
    c = cyclic_boundary(n, 2)
    w = is_sed(c)
    assert w is not None
    assert verify_witness(c, w) == (True, None)
    # each step contracts one edge until a triangle boundary remains
    assert len(w.edges()) == n - 3


# ---------------------------------------------------------------------------
# witness verification catches tampering
# ---------------------------------------------------------------------------


def test_verify_witness_rejects_wrong_base_claims():
    ok, why = verify_witness(fc(), SedWitness("simplex-boundary"))
    assert not ok and "not a simplex boundary" in why
    ok, why = verify_witness(simplex_boundary(range(1, 4)), SedWitness("empty"))
    assert not ok and "not the empty complex" in why


def test_verify_witness_rejects_a_non_face_edge():
    bad = SedWitness("edge", (1, 3), SedWitness("empty"), SedWitness("empty"))
    ok, why = verify_witness(fc(), bad)
    assert not ok and "not a face" in why


def test_verify_witness_rejects_a_broken_subtree():
    good = is_sed(fc())
    bad = SedWitness("edge", (1, 2), SedWitness("empty"), good.link)
    ok, why = verify_witness(fc(), bad)
    assert not ok and why.startswith("contraction subtree")


def test_verify_witness_rejects_none_and_unknown_kinds():
    ok, why = verify_witness(fc(), None)
    assert not ok and why == "no witness"
    ok, why = verify_witness(fc(), SedWitness("mystery"))
    assert not ok and "unknown witness kind" in why


# ---------------------------------------------------------------------------
# h-vector conditions
# ---------------------------------------------------------------------------


def test_h_conditions_examples():
    assert h_conditions(fc()) == (True, None)
    sig = SimplicialComplex.from_facets(SIGMA)
    assert sig.h_vector == (1, 2, 2)
    ok, why = h_conditions(sig)
    assert not ok and "h_0" in why


def test_h_conditions_reject_a_single_edge():
    c = SimplicialComplex.from_facets([(1, 2)])
    assert c.h_vector == (1, 0, 0)
    ok, why = h_conditions(c)
    assert not ok


def test_decomposable_complexes_meet_the_h_conditions():
    pool = [fc(), SimplicialComplex.from_facets(GAMMA_PRIME)]
    pool.extend(cyclic_boundary(n, 2) for n in range(4, 8))
    pool.append(simplex_boundary(range(1, 6)))
    pool.append(squeezed_sphere([(), (1,)], 5, 3))
    for c in pool:
        w = is_sed(c)
        if w is None:
            continue
        assert h_conditions(c)[0], c.facets


# ---------------------------------------------------------------------------
# invariance and bigger witnesses
# ---------------------------------------------------------------------------


def test_decomposability_is_invariant_under_relabeling():
    rng = random.Random(5)
    pool = [fc(), SimplicialComplex.from_facets(SIGMA),
            cyclic_boundary(5, 2), simplex_boundary(range(1, 5))]
    for seed in range(6):
        pool.append(random_complex(5, 1, 0.5, seed))
    for c in pool:
        n = max(c.vertices)
        base = is_sed(c) is not None
        for _ in range(3):
            perm = list(range(1, n + 1))
            rng.shuffle(perm)
            relabeled = c.relabel(dict(zip(range(1, n + 1), perm)))
            assert (is_sed(relabeled) is not None) == base


def test_squeezed_sphere_witness_replay():
    u2 = [(), (1,), (2,), (1, 1), (1, 2), (2, 2)]
    s = squeezed_sphere(u2, 6, 3)
    w = is_sed(s)
    assert w is not None and w.edge == (1, 2)
    assert verify_witness(s, w) == (True, None)
