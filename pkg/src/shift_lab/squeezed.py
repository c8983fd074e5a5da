"""Squeezed balls and spheres built from shifted order ideals of monomials.

A shifted order ideal U of monomials on [m] (closed under divisibility
and under replacing a variable index by a larger one, containing 1 and
all variables) with degrees at most (d+1)/2 encodes a shellable d-ball
on n = m+d+1 vertices: each monomial contributes one facet through an
explicit interval formula.  The boundary of that ball is a sphere, and
the h-vectors of both are read off from the degree counts of U.

The reverse direction recovers order ideals from a complex: U(C) and
L(C) collect the monomials in the first n-d-1 (resp. n-d) variables
that stay outside the generic initial ideal of the face ideal of C.  A
facet formula turns L into the symmetric shift of C, which makes these
small order ideals a complete certificate for shifts of spheres.

Monomials are sorted tuples of variable indices; 1 is the empty tuple.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .complexes import EMPTY_COMPLEX, SimplicialComplex, is_shifted, mask_of, verts_of
from .delta import contained_in_delta
from .errors import (
    HypothesesViolated,
    InvalidOrderIdeal,
    InvalidParameters,
    NonTerminating,
    NotAPseudomanifoldWithBoundary,
    RandomnessSuspect,
)
from .ideals import monomials_of_degree, stanley_reisner_ideal
from .modp import DEFAULT_PRIME, derive_seeds, random_invertible
from .shifting import RETRY_ROUNDS, polynomial_engine

# -- order ideals -------------------------------------------------------------


def is_shifted_order_ideal(monomials, m: int, max_degree=None) -> bool:
    try:
        validate_order_ideal(monomials, m, max_degree=max_degree)
    except InvalidOrderIdeal:
        return False
    return True


def validate_order_ideal(monomials, m: int, max_degree=None) -> frozenset:
    """Check the order ideal axioms; returns the set as a frozenset.

    Required: 1 and every variable belong to it, entries lie in [1, m],
    divisors stay inside, and replacing any variable index by a larger
    one stays inside (the shifted condition).
    """
    u_set = set()
    for u in monomials:
        t = tuple(u)
        if any(not isinstance(i, int) for i in t):
            raise InvalidOrderIdeal(f"non-integer entries in {t}")
        if tuple(sorted(t)) != t:
            raise InvalidOrderIdeal(f"monomial {t} is not sorted")
        if t and not (1 <= t[0] and t[-1] <= m):
            raise InvalidOrderIdeal(f"monomial {t} leaves the range [1, {m}]")
        u_set.add(t)
    if () not in u_set:
        raise InvalidOrderIdeal("the monomial 1 is missing")
    for i in range(1, m + 1):
        if (i,) not in u_set:
            raise InvalidOrderIdeal(f"variable {i} is missing")
    for u in u_set:
        if max_degree is not None and len(u) > max_degree:
            raise InvalidOrderIdeal(
                f"monomial {u} exceeds the degree cap {max_degree}"
            )
        for pos in range(len(u)):
            reduced = u[:pos] + u[pos + 1:]
            if reduced not in u_set:
                raise InvalidOrderIdeal(f"divisor {reduced} of {u} is missing")
            for j in range(u[pos] + 1, m + 1):
                moved = tuple(sorted(reduced + (j,)))
                if moved not in u_set:
                    raise InvalidOrderIdeal(
                        f"shift move {u} -> {moved} leaves the set"
                    )
    return frozenset(u_set)


def enumerate_shifted_order_ideals(m: int, max_degree: int):
    """All shifted order ideals on [m] with the given degree cap,
    in a deterministic order."""
    base = {()} | {(i,) for i in range(1, m + 1)}
    if m == 0 or max_degree <= 1:
        yield frozenset(base)
        return
    higher = []
    for k in range(2, max_degree + 1):
        higher.extend(monomials_of_degree(m, k))
    if len(higher) > 22:
        raise InvalidParameters("order ideal enumeration would be huge")
    higher.sort(key=lambda u: (len(u), u))
    for bits in range(1 << len(higher)):
        extra = {higher[t] for t in range(len(higher)) if bits >> t & 1}
        if is_shifted_order_ideal(base | extra, m, max_degree=max_degree):
            yield frozenset(base | extra)


def split_order_ideal(u_ideal) -> tuple:
    """(hat, tilde): monomials avoiding x_1, and quotients by x_1."""
    hat = frozenset(u for u in u_ideal if 1 not in u)
    tilde = frozenset(u[1:] for u in u_ideal if u and u[0] == 1)
    return hat, tilde


def reindex_hat(hat) -> frozenset:
    """The hat part as an order ideal on [m-1] (indices drop by one)."""
    return frozenset(tuple(i - 1 for i in u) for u in hat)


def reindex_tilde(tilde, m: int) -> tuple:
    """The tilde part as an order ideal on [m - ell]; returns (ideal, ell).

    ell is the largest k with x_k outside tilde; by shiftedness the
    variables appearing in tilde are exactly x_{ell+1}..x_m.
    """
    ell = max((k for k in range(m + 1) if k == 0 or (k,) not in tilde), default=0)
    out = set()
    for u in tilde:
        if u and u[0] <= ell:
            raise InvalidOrderIdeal(
                f"{u} uses a variable at or below the gap {ell}"
            )
        out.add(tuple(i - ell for i in u))
    return frozenset(out), ell


# -- the facet formula and the ball -------------------------------------------


def facet_of_monomial(u, n: int, d: int) -> int:
    """The (d+1)-subset of [n] attached to a monomial of degree <= (d+1)/2.

    Each factor x_{i_t} contributes the pair {i_t + 2(t-1), i_t + 2t - 1};
    the tail [n + 2k - d, n] fills the remaining d + 1 - 2k slots.
    """
    u = tuple(u)
    k = len(u)
    if 2 * k > d + 1:
        raise InvalidParameters(f"degree {k} exceeds (d+1)/2 with d={d}")
    m = n - d - 1
    if k and not (1 <= u[0] and u[-1] <= m):
        raise InvalidParameters(f"monomial {u} leaves the range [1, {m}]")
    if tuple(sorted(u)) != u:
        raise InvalidParameters(f"monomial {u} is not sorted")
    mask = 0
    for t, i in enumerate(u, start=1):
        a = i + 2 * (t - 1)
        mask |= 1 << (a - 1) | 1 << a
    for v in range(n + 2 * k - d, n + 1):
        mask |= 1 << (v - 1)
    return mask


def squeezed_ball(u_ideal, n: int, d: int) -> SimplicialComplex:
    """The shellable d-ball on [n] generated by the facets of u_ideal."""
    if not (n > d > 0):
        raise InvalidParameters("need n > d > 0")
    m = n - d - 1
    ideal = validate_order_ideal(u_ideal, m, max_degree=(d + 1) // 2)
    return SimplicialComplex(facet_of_monomial(u, n, d) for u in ideal)


def ball_boundary(ball: SimplicialComplex) -> SimplicialComplex:
    """Boundary complex: generated by ridges lying in exactly one facet.

    The input must be pure with every ridge in at most two facets.
    Returns the empty complex when no ridge is free.
    """
    if ball.is_empty_complex:
        return EMPTY_COMPLEX
    if not ball.is_pure:
        raise NotAPseudomanifoldWithBoundary("facets have mixed dimensions")
    counts = {}
    for f in ball.facets:
        for v in verts_of(f):
            ridge = f & ~(1 << (v - 1))
            counts[ridge] = counts.get(ridge, 0) + 1
    if any(c > 2 for c in counts.values()):
        raise NotAPseudomanifoldWithBoundary("a ridge lies in three facets")
    free = [r for r, c in counts.items() if c == 1]
    if not free:
        return EMPTY_COMPLEX
    return SimplicialComplex(free)


def squeezed_sphere(u_ideal, n: int, d: int) -> SimplicialComplex:
    return ball_boundary(squeezed_ball(u_ideal, n, d))


def ball_h_from_ideal(u_ideal, d: int) -> tuple:
    """h-vector of the squeezed ball: h_i counts degree-i monomials."""
    h = [0] * (d + 2)
    for u in u_ideal:
        h[len(u)] += 1
    return tuple(h)


def sphere_h_from_ideal(u_ideal, d: int) -> tuple:
    """h-vector of the squeezed sphere: partial sums of degree counts up
    to the middle, then Dehn-Sommerville symmetry."""
    counts = ball_h_from_ideal(u_ideal, d)
    h = [0] * (d + 1)
    running = 0
    for i in range(d // 2 + 1):
        running += counts[i]
        h[i] = running
        h[d - i] = running
    return tuple(h)


# -- the split complexes behind the edge decomposition ------------------------


def hat_complex(hat, n: int, d: int) -> SimplicialComplex:
    """Ball generated by the facets of monomials avoiding x_1."""
    return SimplicialComplex(facet_of_monomial(u, n, d) for u in hat)


def tilde_complex(tilde, n: int, d: int) -> SimplicialComplex:
    """(d-2)-ball generated by facets of x_1-multiples with {1,2} removed."""
    strip = mask_of([1, 2])
    return SimplicialComplex(
        facet_of_monomial(tuple(sorted((1,) + tuple(u))), n, d) & ~strip
        for u in tilde
    )


# -- order ideals recovered from generic initial ideals -----------------------


def _standard_small_monomials(c, n, small, cap, seed, trials, p):
    """Monomials in x_1..x_small of degree <= cap outside Gin(I_c).

    Degrees cap+1 must have no survivors (the ideal property then rules
    out survivors in all higher degrees); otherwise NonTerminating.
    """
    if small < 0:
        raise InvalidParameters("negative variable range")
    ideal = stanley_reisner_ideal(c, n)
    out = {()}
    if small == 0:
        return frozenset(out)
    last_problem = "no trials run"
    for round_no in range(RETRY_ROUNDS):
        seeds = derive_seeds(seed + round_no, trials)
        engines = [
            polynomial_engine(ideal, random_invertible(n, s, p), p=p)
            for s in seeds
        ]
        found = {()}
        problem = None
        for k in range(1, cap + 2):
            piv_sets = {eng.pivots_at(k) for eng in engines}
            if len(piv_sets) != 1:
                problem = f"trials disagree in degree {k}"
                break
            piv = piv_sets.pop()
            survivors = [
                u for u in monomials_of_degree(small, k) if u not in piv
            ]
            if k <= cap:
                found.update(survivors)
            elif survivors:
                raise NonTerminating(
                    f"standard monomials on [{small}] persist in degree {k}: "
                    f"{sorted(survivors)[:3]}"
                )
        if problem is None:
            return frozenset(found)
        last_problem = problem
    raise RandomnessSuspect(f"order ideal extraction: {last_problem}")


def _full_support_n(c: SimplicialComplex) -> int:
    if c.is_empty_complex:
        raise InvalidParameters("need at least one vertex")
    n = max(c.vertices)
    if c.vertices != tuple(range(1, n + 1)):
        raise InvalidParameters("vertex labels must be exactly 1..n")
    return n


def extract_u_ideal(c: SimplicialComplex, seed: int = 0, trials: int = 3,
                    p: int = DEFAULT_PRIME) -> frozenset:
    """U(c): monomials in the first n-d-1 variables outside Gin(I_c).

    Terminates at degree floor(d/2), the proven cap for complexes with
    the strong Lefschetz property; survivors past it raise
    NonTerminating.
    """
    n = _full_support_n(c)
    d = c.dim + 1
    m = n - d - 1
    if m < 0:
        raise InvalidParameters("dimension too large for the vertex count")
    return _standard_small_monomials(c, n, m, d // 2, seed, trials, p)


def extract_l_ideal(c: SimplicialComplex, seed: int = 0, trials: int = 3,
                    p: int = DEFAULT_PRIME) -> frozenset:
    """L(c): monomials in the first n-d variables outside Gin(I_c),
    capped at degree d (survivors past it raise NonTerminating)."""
    n = _full_support_n(c)
    d = c.dim + 1
    if n - d - 1 < 0:
        raise InvalidParameters("dimension too large for the vertex count")
    return _standard_small_monomials(c, n, n - d, d, seed, trials, p)


def l_from_u(u_ideal, n: int, d: int) -> frozenset:
    """L(c) predicted from U(c) under the strong Lefschetz property:
    each monomial is padded with powers of the hinge variable x_{n-d},
    one for every step up to degree d - deg(u)."""
    hinge = n - d
    out = set()
    for u in u_ideal:
        if u and u[-1] >= hinge:
            raise InvalidParameters(f"{u} already uses the hinge variable")
        for t in range(0, d - 2 * len(u) + 1):
            out.add(u + (hinge,) * t)
    return frozenset(out)


def facets_from_l(l_ideal, n: int, d: int) -> SimplicialComplex:
    """Symmetric shift read off from L: each degree-k monomial gives the
    facet {i_1, i_2 + 1, ..., i_k + k - 1} plus the top interval."""
    facets = []
    for u in l_ideal:
        k = len(u)
        if k > d:
            raise InvalidParameters(f"{u} has degree above d={d}")
        if u and u[-1] > n - d:
            raise InvalidParameters(f"{u} leaves the range [1, {n - d}]")
        mask = 0
        for t, i in enumerate(u):
            mask |= 1 << (i + t - 1)
        for v in range(n - d + 1 + k, n + 1):
            mask |= 1 << (v - 1)
        facets.append(mask)
    return SimplicialComplex(facets)


def predicted_shift_from_u(u_ideal, n: int, d: int) -> SimplicialComplex:
    return facets_from_l(l_from_u(u_ideal, n, d), n, d)


def truncate_u_ideal(u_ideal, d: int) -> frozenset:
    """Monomials of degree at most d/2; this is U of the squeezed sphere."""
    return frozenset(u for u in u_ideal if 2 * len(u) <= d)


# -- realization of shifted complexes as shifts of squeezed spheres -----------


@dataclass
class RealizedSqueezed:
    """A squeezed sphere whose shift is a prescribed shifted complex.

    The sphere lives on [n]; `ambient` is the largest label of the input
    complex.  When the input misses its lowest labels (shifted grounds
    are always top intervals), the sphere has fewer vertices and its
    shift inside the ambient ring reproduces the input verbatim.
    """

    sphere: SimplicialComplex
    order_ideal: frozenset
    n: int
    d: int
    ambient: int


def realize_squeezed(sigma: SimplicialComplex, seed: int = 0, trials: int = 3,
                     p: int = DEFAULT_PRIME) -> RealizedSqueezed:
    """Find a squeezed sphere whose algebraic shift is sigma.

    sigma must be pure, shifted, have a symmetric h-vector and be
    contained in the shift of the cyclic polytope boundary with the
    same parameters; otherwise HypothesesViolated.  The sphere is the
    squeezed sphere of the order ideal U(sigma), and the prediction
    formula is replayed as a consistency gate.

    A shifted complex occupies a top interval of labels; if the lowest
    labels are absent, the search is run on the compacted copy.  The
    shift of the returned sphere, computed with ambient equal to the
    input's largest label, equals the input: the generic initial ideal
    picks up one smallest-variable generator per absent vertex.
    """
    if sigma.is_empty_complex or sigma.dim < 0:
        raise HypothesesViolated("need at least one vertex")
    ambient = max(sigma.vertices)
    missing = ambient - len(sigma.vertices)
    if missing and sigma.vertices != tuple(range(missing + 1, ambient + 1)):
        raise HypothesesViolated(
            "a shifted complex occupies a top interval of labels"
        )
    if missing:
        work = sigma.relabel({v: v - missing for v in sigma.vertices})
    else:
        work = sigma
    n = ambient - missing
    d = work.dim + 1
    if d < 1 or n - d - 1 < 0:
        raise HypothesesViolated("parameters leave no room for an order ideal")
    if not work.is_pure:
        raise HypothesesViolated("complex is not pure")
    if not is_shifted(work, n):
        raise HypothesesViolated("complex is not shifted")
    h = work.h_vector
    if any(h[i] != h[d - i] for i in range(d + 1)):
        raise HypothesesViolated(f"h-vector {h} is not symmetric")
    if not contained_in_delta(work, n, d):
        raise HypothesesViolated("complex exceeds the cyclic upper bound")
    try:
        u_ideal = extract_u_ideal(work, seed=seed, trials=trials, p=p)
    except NonTerminating as exc:
        raise HypothesesViolated(f"order ideal does not close: {exc}") from exc
    m = n - d - 1
    try:
        validate_order_ideal(u_ideal, m, max_degree=(d + 1) // 2)
    except InvalidOrderIdeal as exc:
        raise HypothesesViolated(f"U(sigma) is not an order ideal: {exc}") from exc
    if predicted_shift_from_u(u_ideal, n, d) != work:
        raise HypothesesViolated(
            "the facet formula does not reproduce the input complex"
        )
    sphere = squeezed_sphere(u_ideal, n, d)
    return RealizedSqueezed(sphere=sphere, order_ideal=u_ideal, n=n, d=d,
                            ambient=ambient)
