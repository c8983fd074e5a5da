"""Cohen-Macaulay and strong Lefschetz checks.

Two independent routes are implemented and cross-checked elsewhere:

* a direct randomized rank test: reduce the face ring modulo a random
  linear system of parameters, certify the quotient dimensions against
  the h-vector, then test that powers of a random linear form induce
  bijections between complementary degrees;
* the shift route: purity of the shifted complex decides the
  Cohen-Macaulay property, and containment of the symmetric shift in
  the shift of the cyclic polytope boundary (plus h-symmetry) decides
  the strong Lefschetz property.

Verdicts follow a two-round protocol: a passing round is a genuine
witness; a failing first round is retried with a fresh seed; two
failing rounds give "false"; a failure followed by a pass is reported
as "indeterminate" rather than silently picking a side.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .complexes import SimplicialComplex
from .delta import contained_in_delta
from .errors import DimensionMismatch, InvalidParameters
from .ideals import (
    MonomialIdeal,
    complex_from_squarefree_ideal,
    mono_support_mask,
    monomials_of_degree,
    stanley_reisner_ideal,
)
from .kernels import echelon, reduce_rows
from .modp import DEFAULT_PRIME, derive_seeds
from .shifting import exterior_shift, symmetric_shift

ROUNDS = 2


@dataclass
class ArtinianProfile:
    """Per-degree data of (S/I)/(theta) for one random sample."""

    dims: tuple
    expected: tuple
    s: int
    map_ranks: dict
    seed: int
    prime: int

    @property
    def dims_match(self) -> bool:
        return self.dims == self.expected

    @property
    def maps_bijective(self) -> bool:
        return all(
            rank == self.dims[i] == self.dims[self.s - i]
            for i, rank in self.map_ranks.items()
        )

    def to_json_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "expected": list(self.expected),
            "socle_degree": self.s,
            "map_ranks": {str(i): r for i, r in sorted(self.map_ranks.items())},
            "seed": self.seed,
            "prime": self.prime,
        }


@dataclass
class SlpResult:
    verdict: str  # "true" | "false" | "indeterminate"
    reason: str | None = None
    profiles: list = field(default_factory=list)
    seeds: list = field(default_factory=list)
    prime: int = DEFAULT_PRIME

    @property
    def is_true(self) -> bool:
        return self.verdict == "true"

    @property
    def is_false(self) -> bool:
        return self.verdict == "false"

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "profiles": [p.to_json_dict() for p in self.profiles],
            "seeds": list(self.seeds),
            "prime": self.prime,
        }


# -- quotient machinery -------------------------------------------------------


def monomial_quotient_dimension(ideal: MonomialIdeal) -> int:
    """Krull dimension of S/I for a monomial ideal: the dimension of the
    complex of supports missing every generator, plus one."""
    if ideal.is_zero:
        return ideal.n
    radical = MonomialIdeal(
        ideal.n, [tuple(sorted(set(g))) for g in ideal.gens]
    )
    return complex_from_squarefree_ideal(radical).dim + 1


def _standard_monomials(ideal: MonomialIdeal, k: int) -> list:
    return [u for u in monomials_of_degree(ideal.n, k) if not ideal.contains(u)]


def _hilbert(ideal: MonomialIdeal, k: int) -> int:
    return len(_standard_monomials(ideal, k))


def _expected_artinian_dims(ideal: MonomialIdeal, krull: int, cap: int) -> list:
    """The krull-fold difference of the Hilbert function, the quotient
    dimensions a regular linear system of parameters would give."""
    hf = [_hilbert(ideal, k) for k in range(cap + 1)]
    out = list(hf)
    for _ in range(krull):
        out = [out[k] - (out[k - 1] if k else 0) for k in range(len(out))]
    return out


def _profile_once(ideal: MonomialIdeal, krull: int, expected, s: int,
                  seed: int, p: int) -> ArtinianProfile:
    """One random (theta, omega) sample: quotient dims for degrees
    0..s+1 and the ranks of the Lefschetz power maps."""
    n = ideal.n
    rng = random.Random(seed)
    theta = [[rng.randrange(p) for _ in range(n)] for _ in range(krull)]
    omega = [rng.randrange(p) for _ in range(n)]
    std = {}
    reduced = {}
    dims = []
    for k in range(s + 2):
        std_k = _standard_monomials(ideal, k)
        std[k] = (std_k, {u: c for c, u in enumerate(std_k)})
        if k == 0:
            reduced[0] = (np.zeros((0, len(std_k)), dtype=np.uint64), [])
            dims.append(len(std_k))
            continue
        prev, _ = std[k - 1]
        index = std[k][1]
        rows = np.zeros((krull * len(prev), len(std_k)), dtype=np.uint64)
        r = 0
        for t in range(krull):
            for m in prev:
                for v in range(1, n + 1):
                    coeff = theta[t][v - 1]
                    if not coeff:
                        continue
                    u = tuple(sorted(m + (v,)))
                    c = index.get(u)
                    if c is not None:
                        rows[r, c] = (int(rows[r, c]) + coeff) % p
                r += 1
        pivots = echelon(rows, p) if rows.size else []
        reduced[k] = (np.ascontiguousarray(rows[:len(pivots)]), pivots)
        dims.append(len(std_k) - len(pivots))
    map_ranks = {}
    for i in range(s // 2 + 1):
        power = s - 2 * i
        if dims[i] == 0 and dims[s - i] == 0:
            map_ranks[i] = 0
            continue
        if power == 0:
            map_ranks[i] = dims[i]
            continue
        src = _quotient_basis(std[i][0], reduced[i][1])
        tgt_std, tgt_index = std[s - i]
        vecs = np.zeros((len(src), len(tgt_std)), dtype=np.uint64)
        for r, m in enumerate(src):
            for u, coeff in _power_multiply(m, omega, power, ideal, p).items():
                c = tgt_index.get(u)
                if c is not None:
                    vecs[r, c] = coeff
        rref, pivots = reduced[s - i]
        if len(pivots):
            reduce_rows(rref, pivots, vecs, p)
        keep = [c for c in range(len(tgt_std)) if c not in set(pivots)]
        resid = np.ascontiguousarray(vecs[:, keep])
        map_ranks[i] = len(echelon(resid, p)) if resid.size else 0
    return ArtinianProfile(
        dims=tuple(dims), expected=tuple(expected[:s + 2]), s=s,
        map_ranks=map_ranks, seed=seed, prime=p,
    )


def _quotient_basis(std_k, pivots) -> list:
    pivot_set = set(pivots)
    return [m for c, m in enumerate(std_k) if c not in pivot_set]


def _power_multiply(m, omega, power: int, ideal: MonomialIdeal, p: int) -> dict:
    """omega^power * m inside S/I: terms landing in I are dropped,
    which is exact because I is a monomial ideal."""
    cur = {m: 1}
    n = len(omega)
    for _ in range(power):
        nxt = {}
        for u, coeff in cur.items():
            for v in range(1, n + 1):
                a = omega[v - 1]
                if not a:
                    continue
                w = tuple(sorted(u + (v,)))
                if ideal.contains(w):
                    continue
                nxt[w] = (nxt.get(w, 0) + coeff * a) % p
        cur = {u: c for u, c in nxt.items() if c}
    return cur


def _run_rounds(ideal: MonomialIdeal, krull: int, expected, s: int,
                seed: int, p: int) -> SlpResult:
    """Two-round verdict protocol shared by the ring and complex checks."""
    seeds = derive_seeds(seed, ROUNDS)
    profiles = []
    outcomes = []
    for r, sd in enumerate(seeds):
        prof = _profile_once(ideal, krull, expected, s, sd, p)
        profiles.append(prof)
        if not prof.dims_match:
            outcomes.append("dims")
        elif not prof.maps_bijective:
            outcomes.append("maps")
        else:
            outcomes.append("ok")
        if outcomes[-1] == "ok" and r == 0:
            return SlpResult("true", None, profiles, seeds[:1], p)
    if outcomes[1] == "ok":
        return SlpResult(
            "indeterminate",
            "rounds disagree: first sample failed, second passed",
            profiles, seeds, p,
        )
    if "dims" in outcomes:
        reason = (
            "quotient dimensions differ from the expected values in two "
            "independent samples (not Cohen-Macaulay at this prime)"
        )
    else:
        reason = "a Lefschetz power map is degenerate in two independent samples"
    return SlpResult("false", reason, profiles, seeds, p)


# -- public checks ------------------------------------------------------------


def check_slp_direct(c: SimplicialComplex, seed: int = 0,
                     p: int = DEFAULT_PRIME) -> SlpResult:
    """Strong Lefschetz property of a complex by randomized rank tests.

    Prechecks: h_d > 0 and h-symmetry (both forced by the property).
    Then the quotient dimensions must reproduce the h-vector, which
    simultaneously certifies the sampled forms as an l.s.o.p. and the
    complex as Cohen-Macaulay, and every power map must be bijective.
    """
    d = c.dim + 1
    h = c.h_vector
    if c.is_empty_complex:
        return SlpResult("true", None, [], [], p)
    if h[d] <= 0:
        return SlpResult("false", f"h_{d} = {h[d]} is not positive", [], [], p)
    if any(h[i] != h[d - i] for i in range(d + 1)):
        return SlpResult("false", f"h-vector {h} is not symmetric", [], [], p)
    if any(x < 0 for x in h):
        return SlpResult("false", f"h-vector {h} has negative entries", [], [], p)
    n = max(c.vertices)
    ideal = stanley_reisner_ideal(c, n)
    expected = list(h) + [0]
    return _run_rounds(ideal, d, expected, d, seed, p)


def ring_slp(ideal: MonomialIdeal, seed: int = 0, p: int = DEFAULT_PRIME,
             degree_cap: int = 40) -> SlpResult:
    """Strong Lefschetz property of S/I for a monomial ideal I.

    The expected Artinian dimensions are the krull-fold difference of
    the Hilbert function; a persistent mismatch with the sampled
    quotient raises DimensionMismatch since the callers curate
    Cohen-Macaulay inputs.
    """
    if ideal.is_zero and ideal.n == 0:
        return SlpResult("true", None, [], [], p)
    krull = monomial_quotient_dimension(ideal)
    cap = max(degree_cap, ideal.max_gen_degree() + 2)
    expected = _expected_artinian_dims(ideal, krull, cap)
    nonzero = [k for k, v in enumerate(expected) if v != 0]
    if not nonzero:
        raise InvalidParameters("expected quotient is zero everywhere")
    s = max(nonzero)
    if s + 1 >= len(expected):
        raise InvalidParameters("degree cap too small for the socle search")
    if any(v < 0 for v in expected[:s + 2]):
        raise DimensionMismatch(
            f"difference Hilbert function {expected[:s + 2]} goes negative; "
            "the quotient is not Cohen-Macaulay"
        )
    if any(expected[i] != expected[s - i] for i in range(s + 1)):
        return SlpResult(
            "false",
            f"expected dims {expected[:s + 1]} are not symmetric",
            [], [], p,
        )
    result = _run_rounds(ideal, krull, expected, s, seed, p)
    if result.is_false and "dimensions differ" in (result.reason or ""):
        raise DimensionMismatch(
            f"sampled dims {result.profiles[-1].dims} vs expected "
            f"{result.profiles[-1].expected}"
        )
    return result


def artinian_profile(c: SimplicialComplex, seed: int = 0,
                     p: int = DEFAULT_PRIME) -> ArtinianProfile:
    """One sampled Artinian reduction of the face ring of c.

    For a Cohen-Macaulay complex the quotient dimensions equal the
    h-vector in every degree (with degree d+1 vanishing), whatever the
    symmetry of h; power-map ranks are reported for callers that need
    them.
    """
    if c.is_empty_complex:
        raise InvalidParameters("the complex has no vertices to reduce")
    d = c.dim + 1
    h = c.h_vector
    ideal = stanley_reisner_ideal(c, max(c.vertices))
    return _profile_once(ideal, d, list(h) + [0], d, seed, p)


def is_cm_via_shift(c: SimplicialComplex, mode: str = "exterior",
                    seed: int = 0, trials: int = 3,
                    p: int = DEFAULT_PRIME) -> bool:
    """Cohen-Macaulay test: the shifted complex is pure iff the input is
    Cohen-Macaulay (over the prime used, resp. char 0 heuristically)."""
    if mode == "exterior":
        rep = exterior_shift(c, seed=seed, trials=trials, p=p)
    elif mode == "symmetric":
        rep = symmetric_shift(c, seed=seed, trials=trials, p=p)
    else:
        raise InvalidParameters(f"unknown mode {mode!r}")
    return rep.shifted.is_pure


def check_slp_via_shift(c: SimplicialComplex, seed: int = 0, trials: int = 3,
                        p: int = DEFAULT_PRIME) -> SlpResult:
    """Strong Lefschetz via the shift criterion: the complex must be
    Cohen-Macaulay, h must be symmetric with h_d > 0, and the symmetric
    shift must stay inside the shift of the cyclic polytope boundary."""
    d = c.dim + 1
    h = c.h_vector
    if c.is_empty_complex:
        return SlpResult("true", None, [], [], p)
    n = len(c.vertices)
    work = c.relabel({v: k + 1 for k, v in enumerate(c.vertices)})
    rep = symmetric_shift(work, ambient=n, seed=seed, trials=trials, p=p)
    if not rep.shifted.is_pure:
        return SlpResult("false", "shifted complex is not pure (not Cohen-Macaulay)",
                         [], rep.seeds, p)
    if h[d] <= 0:
        return SlpResult("false", f"h_{d} = {h[d]} is not positive",
                         [], rep.seeds, p)
    if any(h[i] != h[d - i] for i in range(d + 1)):
        return SlpResult("false", f"h-vector {h} is not symmetric",
                         [], rep.seeds, p)
    if not contained_in_delta(rep.shifted, n, d):
        return SlpResult("false", "shift exceeds the cyclic upper bound",
                         [], rep.seeds, p)
    return SlpResult("true", None, [], rep.seeds, p)


# -- initial-ideal consistency spot checks ------------------------------------


@dataclass
class WiebeCase:
    """One pair (complex, elementary map): the initial-ideal side and
    the original side must not contradict the implication
    'initial ideal strong Lefschetz => original strong Lefschetz'."""

    complex: SimplicialComplex
    i: int
    j: int
    initial_verdict: str
    original_verdict: str
    certified_complete: bool

    @property
    def consistent(self) -> bool:
        if not self.certified_complete:
            return True  # truncated ideal, implication not testable
        return not (self.initial_verdict == "true"
                    and self.original_verdict == "false")


def wiebe_spotcheck(cases, seed: int = 0, p: int = DEFAULT_PRIME) -> list:
    """cases: iterable of (complex, i, j).  For each, compute the initial
    ideal of the elementary image of the face ideal, run the ring-level
    check on it, run the direct check on the complex, and record both."""
    from .shifting import initial_ideal_of_elementary_map

    out = []
    for c, i, j in cases:
        res = initial_ideal_of_elementary_map(c, i, j, p=p)
        try:
            initial_verdict = ring_slp(res.ideal, seed=seed, p=p).verdict
        except DimensionMismatch:
            # the initial quotient is not Cohen-Macaulay at this prime,
            # so it has no strong Lefschetz structure to inherit from
            initial_verdict = "false"
        original = check_slp_direct(c, seed=seed, p=p)
        out.append(WiebeCase(
            complex=c, i=i, j=j,
            initial_verdict=initial_verdict,
            original_verdict=original.verdict,
            certified_complete=res.is_complete,
        ))
    return out
