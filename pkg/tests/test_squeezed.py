"""Tests for squeezed balls and spheres.

Covers the order-ideal axioms, the facet formula, ball/sphere h-vector
formulas, boundary extraction, the hat/tilde splitting identity, and
the round trip from shifted complexes back to squeezed spheres.
"""

import pytest

from shift_lab.complexes import (
    EMPTY_COMPLEX,
    SimplicialComplex,
    cone,
    mask_of,
    simplex_boundary,
    verts_of,
)
from shift_lab.delta import build_delta
from shift_lab.errors import (
    HypothesesViolated,
    InvalidOrderIdeal,
    InvalidParameters,
    NotAPseudomanifoldWithBoundary,
)
from shift_lab.moves import contraction, link, link_condition, shift_ij
from shift_lab.shifting import exterior_shift, symmetric_shift
from shift_lab.squeezed import (
    ball_boundary,
    ball_h_from_ideal,
    enumerate_shifted_order_ideals,
    extract_l_ideal,
    extract_u_ideal,
    facet_of_monomial,
    facets_from_l,
    hat_complex,
    is_shifted_order_ideal,
    l_from_u,
    predicted_shift_from_u,
    realize_squeezed,
    reindex_hat,
    reindex_tilde,
    split_order_ideal,
    squeezed_ball,
    squeezed_sphere,
    tilde_complex,
    truncate_u_ideal,
    validate_order_ideal,
)


def facet_sets(c):
    return sorted(verts_of(m) for m in c.facets)


# ---------------------------------------------------------------------------
# order ideals
# ---------------------------------------------------------------------------


def test_validate_order_ideal_accepts_valid_sets():
    assert validate_order_ideal([()], 0) == frozenset({()})
    assert validate_order_ideal([(), (1,)], 1) == frozenset({(), (1,)})
    # x1 x2 without x1^2 is fine: only upward moves are required
    ok = [(), (1,), (2,), (1, 2), (2, 2)]
    assert validate_order_ideal(ok, 2) == frozenset(ok)


def test_validate_order_ideal_rejections():
    with pytest.raises(InvalidOrderIdeal, match="variable 1 is missing"):
        validate_order_ideal([()], 1)
    with pytest.raises(InvalidOrderIdeal, match="the monomial 1 is missing"):
        validate_order_ideal([(1,)], 1)
    with pytest.raises(InvalidOrderIdeal, match="shift move"):
        validate_order_ideal([(), (1,), (2,), (1, 1)], 2)
    with pytest.raises(InvalidOrderIdeal, match="divisor"):
        validate_order_ideal([(), (1,), (1, 1, 1)], 1)
    with pytest.raises(InvalidOrderIdeal, match="degree cap"):
        validate_order_ideal([(), (1,), (1, 1)], 1, max_degree=1)
    with pytest.raises(InvalidOrderIdeal, match="range"):
        validate_order_ideal([(), (1,), (2,)], 1)
    with pytest.raises(InvalidOrderIdeal, match="not sorted"):
        validate_order_ideal([(), (1,), (2,), (2, 1)], 2)
    assert not is_shifted_order_ideal([()], 1)
    assert is_shifted_order_ideal([(), (1,)], 1)


def test_enumerate_shifted_order_ideals_counts():
    for (m, cap), want in {
        (0, 1): 1, (1, 1): 1, (2, 1): 1,
        (2, 2): 4, (3, 2): 8, (1, 3): 3, (2, 3): 11,
    }.items():
        ideals = list(enumerate_shifted_order_ideals(m, cap))
        assert len(ideals) == want, (m, cap)
        assert len(set(ideals)) == want
        for u in ideals:
            assert is_shifted_order_ideal(u, m, max_degree=cap)


def test_split_order_ideal_and_reindexing():
    u2 = [(), (1,), (2,), (1, 1), (1, 2), (2, 2)]
    hat, tilde = split_order_ideal(u2)
    assert sorted(hat) == [(), (2,), (2, 2)]
    assert sorted(tilde) == [(), (1,), (2,)]
    # reconstruction: U = hat plus x1 times tilde
    rebuilt = set(hat) | {tuple(sorted((1,) + u)) for u in tilde}
    assert rebuilt == set(map(tuple, u2))
    assert sorted(reindex_hat(hat)) == [(), (1,), (1, 1)]
    reidx, ell = reindex_tilde(tilde, 2)
    assert ell == 0 and reidx == frozenset(tilde)
    # a tilde part that misses x1 gets compacted
    reidx, ell = reindex_tilde([(), (2,)], 2)
    assert ell == 1 and reidx == frozenset({(), (1,)})


def test_truncate_u_ideal_keeps_low_degrees():
    assert truncate_u_ideal([(), (1,), (1, 1)], 3) == frozenset({(), (1,)})
    assert truncate_u_ideal([(), (1,), (1, 1)], 4) == frozenset(
        {(), (1,), (1, 1)})


# ---------------------------------------------------------------------------
# the facet formula
# ---------------------------------------------------------------------------


def test_facet_of_monomial_examples():
    assert verts_of(facet_of_monomial((), 5, 3)) == (2, 3, 4, 5)
    assert verts_of(facet_of_monomial((1,), 5, 3)) == (1, 2, 4, 5)
    assert verts_of(facet_of_monomial((1, 1), 5, 3)) == (1, 2, 3, 4)
    assert verts_of(facet_of_monomial((2,), 6, 3)) == (2, 3, 5, 6)


def test_facet_of_monomial_validation():
    with pytest.raises(InvalidParameters, match="degree"):
        facet_of_monomial((1, 1), 4, 2)
    with pytest.raises(InvalidParameters, match="range"):
        facet_of_monomial((2,), 5, 3)
    with pytest.raises(InvalidParameters, match="sorted"):
        facet_of_monomial((2, 1), 7, 3)


def test_facet_of_monomial_always_has_d_plus_one_vertices():
    for n, d in [(5, 2), (6, 3), (7, 3), (8, 4)]:
        m = n - d - 1
        for u in enumerate_shifted_order_ideals(m, (d + 1) // 2):
            for mono in u:
                assert facet_of_monomial(mono, n, d).bit_count() == d + 1


# ---------------------------------------------------------------------------
# balls and spheres
# ---------------------------------------------------------------------------


def test_squeezed_ball_single_monomial_is_a_simplex():
    ball = squeezed_ball([()], 3, 2)
    assert facet_sets(ball) == [(1, 2, 3)]


def test_squeezed_ball_frozen_example():
    ball = squeezed_ball([(), (1,), (1, 1)], 5, 3)
    assert facet_sets(ball) == [(1, 2, 3, 4), (1, 2, 4, 5), (2, 3, 4, 5)]
    assert ball.f_vector == (5, 10, 9, 3)
    assert ball.h_vector == ball_h_from_ideal([(), (1,), (1, 1)], 3)


def test_squeezed_sphere_frozen_examples():
    s = squeezed_sphere([(), (1,)], 5, 3)
    assert facet_sets(s) == [
        (1, 2, 4), (1, 2, 5), (1, 4, 5), (2, 3, 4), (2, 3, 5), (3, 4, 5)]
    s2 = ball_boundary(squeezed_ball([(), (1,), (1, 1)], 5, 3))
    assert s2.f_vector == (5, 9, 6)
    assert s2.h_vector == (1, 2, 2, 1)


def test_squeezed_ball_parameter_validation():
    with pytest.raises(InvalidParameters):
        squeezed_ball([()], 3, 3)
    with pytest.raises(InvalidOrderIdeal):
        squeezed_ball([(), (1,), (1, 1)], 4, 2)  # cap is (d+1)/2 = 1


def test_h_vector_formulas_match_over_all_small_ideals():
    for d in range(1, 5):
        for n in range(d + 1, 8):
            for u in enumerate_shifted_order_ideals(n - d - 1, (d + 1) // 2):
                ball = squeezed_ball(u, n, d)
                sphere = ball_boundary(ball)
                assert ball.h_vector == ball_h_from_ideal(u, d), (n, d, u)
                assert sphere.h_vector == sphere_h_from_ideal(u, d), (n, d, u)


def test_ball_and_sphere_share_low_faces():
    """Faces of cardinality at most d/2 agree between ball and boundary."""
    for d in range(2, 5):
        for n in range(d + 2, 8):
            for u in enumerate_shifted_order_ideals(n - d - 1, (d + 1) // 2):
                ball = squeezed_ball(u, n, d)
                sphere = ball_boundary(ball)
                cap = d // 2
                low_b = {m for m in ball.faces if m.bit_count() <= cap}
                low_s = {m for m in sphere.faces if m.bit_count() <= cap}
                assert low_b == low_s, (n, d, u)


# ---------------------------------------------------------------------------
# boundary extraction
# ---------------------------------------------------------------------------


def test_ball_boundary_of_a_simplex():
    got = ball_boundary(SimplicialComplex.from_facets([(1, 2, 3)]))
    assert facet_sets(got) == [(1, 2), (1, 3), (2, 3)]


def test_ball_boundary_of_two_glued_tetrahedra():
    glued = SimplicialComplex.from_facets([(1, 2, 3, 4), (2, 3, 4, 5)])
    got = ball_boundary(glued)
    # every triangle except the shared one
    assert facet_sets(got) == [
        (1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 5)]


def test_ball_boundary_of_a_closed_sphere_is_empty():
    assert ball_boundary(simplex_boundary(range(1, 5))) == EMPTY_COMPLEX
    assert ball_boundary(EMPTY_COMPLEX) == EMPTY_COMPLEX


def test_ball_boundary_rejects_branching_and_impure_inputs():
    fan = SimplicialComplex.from_facets([(1, 2, 3), (1, 2, 4), (1, 2, 5)])
    with pytest.raises(NotAPseudomanifoldWithBoundary, match="three"):
        ball_boundary(fan)
    mixed = SimplicialComplex.from_facets([(1, 2, 3), (4, 5)])
    with pytest.raises(NotAPseudomanifoldWithBoundary, match="mixed"):
        ball_boundary(mixed)


# ---------------------------------------------------------------------------
# the hat/tilde splitting of the shifted sphere
# ---------------------------------------------------------------------------


def test_split_identity_on_a_direct_instance():
    """Shift_12 of the squeezed sphere splits into the hat sphere plus a
    cone over the tilde sphere glued along vertex 1; the contraction and
    the edge link recover the two pieces."""
    u2 = [(), (1,), (2,), (1, 1), (1, 2), (2, 2)]
    sphere = squeezed_sphere(u2, 6, 3)
    assert sphere.h_vector == (1, 3, 3, 1)
    hat, tilde = split_order_ideal(u2)
    hat_sphere = ball_boundary(hat_complex(hat, 6, 3))
    tilde_sphere = ball_boundary(tilde_complex(tilde, 6, 3))
    assert facet_sets(tilde_sphere) == [(3,), (6,)]
    lhs = shift_ij(sphere, 1, 2)
    rhs = set(hat_sphere.faces)
    rhs.update(m | 1 for m in cone(2, tilde_sphere).faces)
    assert set(lhs.faces) == rhs
    assert contraction(sphere, 1, 2) == hat_sphere
    assert link(sphere, mask_of((1, 2))) == tilde_sphere
    ok, cert = link_condition(sphere, 1, 2)
    assert ok and cert is None


# ---------------------------------------------------------------------------
# order ideals recovered from generic initial ideals
# ---------------------------------------------------------------------------


def test_extract_u_ideal_examples():
    assert sorted(extract_u_ideal(build_delta(6, 3))) == [(), (1,), (2,)]
    assert sorted(extract_u_ideal(simplex_boundary(range(1, 6)))) == [()]


def test_l_from_u_pads_with_the_hinge_variable():
    got = l_from_u([(), (1,), (2,)], 6, 3)
    assert sorted(got) == [
        (), (1,), (1, 3), (2,), (2, 3), (3,), (3, 3), (3, 3, 3)]
    with pytest.raises(InvalidParameters, match="hinge"):
        l_from_u([(), (3,)], 6, 3)


def test_extract_l_ideal_matches_the_prediction():
    d63 = build_delta(6, 3)
    assert extract_l_ideal(d63) == l_from_u([(), (1,), (2,)], 6, 3)


def test_facets_from_l_rebuilds_the_shifted_complex():
    got = facets_from_l(l_from_u([(), (1,), (2,)], 6, 3), 6, 3)
    assert got == build_delta(6, 3)
    # one-variable case: the formula compacts onto the top labels
    small = facets_from_l(l_from_u([()], 4, 2), 4, 2)
    assert facet_sets(small) == [(2, 3), (2, 4), (3, 4)]


def test_facets_from_l_validation():
    with pytest.raises(InvalidParameters, match="degree"):
        facets_from_l([(1, 1, 1)], 5, 2)
    with pytest.raises(InvalidParameters, match="range"):
        facets_from_l([(4,)], 5, 2)


def test_predicted_shift_matches_the_symmetric_shift():
    u = [(), (1,), (2,)]
    sphere = squeezed_sphere(u, 6, 3)
    assert predicted_shift_from_u(u, 6, 3) == symmetric_shift(sphere).shifted


# ---------------------------------------------------------------------------
# realization
# ---------------------------------------------------------------------------


def test_realize_squeezed_extremal_complex():
    res = realize_squeezed(build_delta(6, 3))
    assert sorted(res.order_ideal) == [(), (1,), (2,)]
    assert (res.n, res.d, res.ambient) == (6, 3, 6)
    assert res.sphere == squeezed_sphere([(), (1,), (2,)], 6, 3)


def test_realize_squeezed_fixes_simplex_boundaries():
    sb = simplex_boundary(range(1, 6))
    res = realize_squeezed(sb)
    assert res.sphere == sb
    assert sorted(res.order_ideal) == [()]


def test_realize_squeezed_small_extremal_case():
    res = realize_squeezed(build_delta(5, 2))
    assert sorted(res.order_ideal) == [(), (1,), (2,)]
    assert symmetric_shift(res.sphere, ambient=5).shifted == build_delta(5, 2)


def test_realize_squeezed_compacts_top_interval_labels():
    top = simplex_boundary(range(3, 7))
    res = realize_squeezed(top)
    assert res.n == 4 and res.ambient == 6
    assert facet_sets(res.sphere) == [
        (1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    assert exterior_shift(res.sphere, ambient=6).shifted == top
    assert symmetric_shift(res.sphere, ambient=6).shifted == top


def test_realize_squeezed_hypothesis_failures():
    four_cycle = SimplicialComplex.from_facets(
        [(1, 2), (2, 3), (3, 4), (1, 4)])
    with pytest.raises(HypothesesViolated, match="not shifted"):
        realize_squeezed(four_cycle)
    asym = SimplicialComplex.from_facets([(1, 3), (2, 3)])
    with pytest.raises(HypothesesViolated, match="not symmetric"):
        realize_squeezed(asym)
    with pytest.raises(HypothesesViolated):
        realize_squeezed(EMPTY_COMPLEX)
