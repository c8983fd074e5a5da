"""End-to-end acceptance battery.

Ten checks covering the headline behavior of the package: shifts of
cyclic polytope boundaries, edge decomposability of the named small
examples, the squeezed-sphere family (shift equality, purity, symmetric
h, containment, facet formulas, realizability), the link-condition
equivalences, the elementary-map initial ideal, the S1-S4 operator
properties, and agreement of the two Lefschetz checks.

Everything is exact: pinned seeds, the default 61-bit prime, three
independent trials per randomized step, equality assertions with no
tolerances.
"""

import time

import pytest

from shift_lab.complexes import SimplicialComplex, cyclic_boundary, verts_of
from shift_lab.delta import build_delta, delta_outlier
from shift_lab.ideals import stanley_reisner_ideal
from shift_lab.modp import DEFAULT_PRIME
from shift_lab.moves import link_condition
from shift_lab.randomgen import random_complex
from shift_lab.sed import is_sed, verify_witness
from shift_lab.shifting import (
    exterior_shift,
    initial_ideal_of_elementary_map,
    symmetric_shift,
)
from shift_lab.squeezed import (
    enumerate_shifted_order_ideals,
    facets_from_l,
    l_from_u,
    realize_squeezed,
    squeezed_sphere,
)
from shift_lab.verify import (
    shifted_pure_subcomplexes,
    verify_lemma21,
    verify_lemma52,
    verify_properties_s1s4,
    verify_slp_agreement,
)

P = DEFAULT_PRIME
TRIALS = 3

FOUR_CYCLE = [(1, 2), (2, 3), (3, 4), (1, 4)]
GAMMA_PRIME = [(1, 2), (2, 3), (3, 4), (2, 4)]
SIGMA = FOUR_CYCLE + [(1, 3)]


def squeezed_family():
    """Every squeezed sphere with d in {2,3,4}, n <= 8 and the degree
    of the order ideal capped at d/2: the family is finite and fully
    enumerable."""
    for d in (2, 3, 4):
        for n in range(d + 1, 9):
            for u_ideal in enumerate_shifted_order_ideals(n - d - 1, d // 2):
                yield u_ideal, n, d, squeezed_sphere(u_ideal, n, d)


def test_01_cyclic_polytope_boundaries_shift_to_the_extremal_complex():
    # both operators send C(n,d) to Delta(n,d), for all 2 <= d < n <= 7
    started = time.perf_counter()
    for n in range(3, 8):
        for d in range(2, n):
            c = cyclic_boundary(n, d)
            target = build_delta(n, d)
            sym = symmetric_shift(c, ambient=n, seed=0, trials=TRIALS, p=P)
            ext = exterior_shift(c, ambient=n, seed=0, trials=TRIALS, p=P)
            assert sym.shifted == target, (n, d)
            assert ext.shifted == sym.shifted, (n, d)
    assert time.perf_counter() - started < 120


def test_02_small_named_examples_decompose_or_fail_as_expected():
    square = SimplicialComplex.from_facets(FOUR_CYCLE)
    witness = is_sed(square)
    assert witness is not None and witness.kind == "edge"
    assert witness.edge == (1, 2)
    assert verify_witness(square, witness) == (True, None)

    gamma = SimplicialComplex.from_facets(GAMMA_PRIME)
    witness = is_sed(gamma)
    assert witness is not None
    assert verify_witness(gamma, witness) == (True, None)

    sigma = SimplicialComplex.from_facets(SIGMA)
    assert is_sed(sigma) is None
    for edge in sorted(verts_of(f) for f in sigma.facets):
        ok, certificate = link_condition(sigma, edge[0], edge[1])
        assert not ok, edge
        assert certificate is not None


def test_03_squeezed_spheres_are_sed_and_both_shifts_agree():
    started = time.perf_counter()
    counts = {2: 0, 3: 0, 4: 0}
    for u_ideal, n, d, sphere in squeezed_family():
        counts[d] += 1
        assert is_sed(sphere) is not None, (n, d, u_ideal)
        h = sphere.h_vector
        assert all(h[i] == h[d - i] for i in range(d + 1)), (n, d, u_ideal)
        ext = exterior_shift(sphere, ambient=n, seed=0, trials=TRIALS, p=P)
        sym = symmetric_shift(sphere, ambient=n, seed=0, trials=TRIALS, p=P)
        assert ext.shifted.is_pure and sym.shifted.is_pure, (n, d, u_ideal)
        assert delta_outlier(ext.shifted, n, d) is None, (n, d, u_ideal)
        assert delta_outlier(sym.shifted, n, d) is None, (n, d, u_ideal)
        assert ext.shifted == sym.shifted, (n, d, u_ideal)
    # full enumeration: one ideal per n when the cap is 1, more for d=4
    assert counts == {2: 6, 3: 5, 4: 15}
    assert time.perf_counter() - started < 600


def test_04_every_admissible_shifted_complex_is_a_shift_of_a_sphere():
    started = time.perf_counter()
    candidates = list(shifted_pure_subcomplexes(6, 3))
    assert len(candidates) == 16
    admissible = [
        c for c in candidates
        if all(c.h_vector[i] == c.h_vector[3 - i] for i in range(4))
    ]
    assert len(admissible) == 3
    for sigma in admissible:
        realized = realize_squeezed(sigma, seed=0, trials=TRIALS, p=P)
        sphere = realized.sphere
        ext = exterior_shift(sphere, ambient=6, seed=0, trials=TRIALS, p=P)
        sym = symmetric_shift(sphere, ambient=6, seed=0, trials=TRIALS, p=P)
        assert ext.shifted == sigma
        assert sym.shifted == sigma
    assert time.perf_counter() - started < 600


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_05_link_condition_equivalences_hold_on_random_complexes(n):
    report = verify_lemma21(n=n, cases=500, seed=7, p=P)
    assert report.passed, report.failures()
    assert len(report.instances) >= 500


def test_06_squeezed_sphere_structure_identities():
    report = verify_lemma52(max_n=8, seed=0, trials=TRIALS, p=P)
    assert report.passed, report.failures()
    assert len(report.instances) > 0


def test_07_elementary_map_initial_ideal_matches_the_combinatorial_shift():
    shapes = [(3, 1, 0.7), (4, 1, 0.5), (4, 2, 0.5), (5, 1, 0.4),
              (5, 2, 0.5), (6, 1, 0.35), (6, 2, 0.5), (6, 3, 0.4)]
    clean = violated = 0
    for seed in range(120):
        n, dim, density = shapes[seed % len(shapes)]
        c = random_complex(n, dim, density, seed)
        ideal = stanley_reisner_ideal(c, n)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                res = initial_ideal_of_elementary_map(c, i, j, ambient=n, p=P)
                if res.hypothesis_holds:
                    clean += 1
                    assert res.equals_shift_ideal, (seed, i, j)
                else:
                    violated += 1
                    for g in ideal.gens:
                        if i in g and j in g:
                            expected = tuple(sorted(
                                (i,) + tuple(v for v in g if v != j)))
                            assert expected in res.pivots_by_degree[len(g)], (
                                seed, i, j, g)
    # both regimes must actually occur for the run to mean anything
    assert clean > 100 and violated > 100


def test_08_shift_operator_properties_hold_on_random_complexes():
    report = verify_properties_s1s4(cases=300, max_n=6, seed=0,
                                    trials=TRIALS, p=P)
    assert report.passed, report.failures()
    assert len(report.instances) == 300


def test_09_both_lefschetz_checks_agree():
    report = verify_slp_agreement(cm_cases=100, seed=0, trials=TRIALS, p=P)
    assert report.passed, report.failures()
    assert len(report.instances) >= 126


def test_10_facet_formulas_reproduce_the_symmetric_shift():
    for u_ideal, n, d, sphere in squeezed_family():
        sym = symmetric_shift(sphere, ambient=n, seed=0, trials=TRIALS, p=P)
        predicted = facets_from_l(l_from_u(u_ideal, n, d), n, d)
        assert predicted == sym.shifted, (n, d, u_ideal)
