"""Algebraic shifting engines.

Both shifts are computed the same way: push the (Stanley-Reisner or
exterior face) ideal through a change of coordinates phi, then read off
the initial ideal degree by degree from Macaulay matrices whose columns
are monomials in descending (reverse lexicographic) order, so that the
pivot columns of a row reduction are exactly the initial monomials.

Rows are built incrementally: the degree-k piece of phi(I) is spanned by
the variable multiples of an echelon basis of the degree-(k-1) piece
together with phi applied to the generators of degree k.  Multiplying a
basis row by a variable is a pure column relocation (with a sign in the
exterior case), so row assembly is arithmetic-free; all products happen
inside the row-reduction kernel.

Genericity is randomized: a generic phi is sampled from a seed, the
computation is repeated over independent trials, and structural
certificates (complex closure, f-vector preservation, shiftedness)
are verified.  Disagreement or a failed certificate triggers one full
retry with fresh seeds and then RandomnessSuspect.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .complexes import EMPTY_COMPLEX, SimplicialComplex, is_shifted, verts_of
from .errors import (
    IdentityViolated,
    InvalidParameters,
    RandomnessSuspect,
    DegreeBoundTooSmall,
    SingularMatrix,
)
from .ideals import (
    MonomialIdeal,
    complex_from_squarefree_ideal,
    exterior_face_ideal,
    face_ideal_dim_at,
    mono_divides,
    mono_exp,
    mono_from_exp,
    squarefree_image_ideal,
    stanley_reisner_ideal,
)
from .kernels import echelon
from .modp import (
    DEFAULT_PRIME,
    derive_seeds,
    echelon_exact,
    matrix_rank,
    random_invertible,
)
from .moves import shift_ij
from .orders import ext_columns, ext_mulmaps, poly_columns, poly_mulmaps

RETRY_ROUNDS = 2  # initial attempt + one retry with fresh seeds


class GradedShiftEngine:
    """Per-degree initial data of phi(I) for a monomial ideal I.

    exterior=True works in the exterior algebra (generators are face
    masks); otherwise in the polynomial ring (generators are sorted
    index tuples).  Degrees are computed lazily and in order.
    """

    def __init__(self, n, gens_by_degree, phi, p=DEFAULT_PRIME,
                 exterior=False, exact=False):
        self.n = n
        self.p = p
        self.exterior = exterior
        self.exact = exact
        self.gens = {int(k): list(v) for k, v in gens_by_degree.items() if v}
        if 0 in self.gens:
            raise InvalidParameters("unit ideal")
        self.phi = phi
        self._basis = {}    # degree -> (matrix, pivot column list)
        self._pivmons = {}  # degree -> frozenset of pivot monomials
        self._done = -1

    # -- public views ------------------------------------------------------

    def pivots_at(self, k: int) -> frozenset:
        """Initial monomials of phi(I) in degree k (masks / index tuples)."""
        self._advance_to(k)
        return self._pivmons[k]

    def standard_at(self, k: int) -> list:
        """Monomials of degree k outside the initial ideal, descending."""
        self._advance_to(k)
        cols = self._columns(k)
        piv = self._pivmons[k]
        if self.exterior:
            return [m for m in cols if m not in piv]
        return [mono_from_exp(e) for e in cols if mono_from_exp(e) not in piv]

    def rank_at(self, k: int) -> int:
        self._advance_to(k)
        return len(self._pivmons[k])

    # -- internals -----------------------------------------------------------

    def _columns(self, k: int):
        if self.exterior:
            return ext_columns(self.n, k)[0]
        return poly_columns(self.n, k)[0]

    def _advance_to(self, k: int):
        while self._done < k:
            self._compute(self._done + 1)
            self._done += 1

    def _compute(self, k: int):
        if self.exterior and k > self.n:
            self._basis[k] = (self._zeros(0, 0), [])
            self._pivmons[k] = frozenset()
            return
        cols = self._columns(k)
        ncols = len(cols)
        if k == 0:
            self._basis[0] = (self._zeros(0, ncols), [])
            self._pivmons[0] = frozenset()
            return
        prev, _ = self._basis[k - 1]
        gen_rows = [self._expand_gen(g, k) for g in self.gens.get(k, [])]
        mat = self._assemble(prev, gen_rows, k, ncols)
        pivots = self._echelon(mat)
        self._basis[k] = (self._compress(mat, len(pivots)), pivots)
        if self.exterior:
            self._pivmons[k] = frozenset(cols[c] for c in pivots)
        else:
            self._pivmons[k] = frozenset(mono_from_exp(cols[c]) for c in pivots)

    def _zeros(self, r, c):
        if self.exact:
            return [[Fraction(0)] * c for _ in range(r)]
        return np.zeros((r, c), dtype=np.uint64)

    def _echelon(self, mat):
        if self.exact:
            return echelon_exact(mat) if mat and mat[0] else []
        return echelon(mat, self.p) if mat.size else []

    def _compress(self, mat, rank):
        if self.exact:
            return mat[:rank]
        return np.ascontiguousarray(mat[:rank])

    def _assemble(self, prev, gen_rows, k, ncols):
        """Variable multiples of the previous basis plus new generators."""
        nprev = len(prev)
        total = self.n * nprev + len(gen_rows)
        out = self._zeros(total, ncols)
        if nprev:
            if self.exterior:
                maps = ext_mulmaps(self.n, k)
            else:
                maps = poly_mulmaps(self.n, k)
            for j in range(self.n):
                lo, hi = j * nprev, (j + 1) * nprev
                if self.exterior:
                    tgt, odd = maps[j]
                    self._scatter_ext(out, lo, prev, tgt, odd)
                else:
                    self._scatter_poly(out, lo, prev, maps[j])
        for t, row in enumerate(gen_rows):
            r = self.n * nprev + t
            for c, val in row.items():
                out[r][c] = val
        return out

    def _scatter_poly(self, out, lo, prev, tgt):
        if self.exact:
            for r, row in enumerate(prev):
                orow = out[lo + r]
                for i, val in enumerate(row):
                    if val:
                        orow[tgt[i]] = val
        else:
            out[lo:lo + len(prev), tgt] = prev

    def _scatter_ext(self, out, lo, prev, tgt, odd):
        if self.exact:
            for r, row in enumerate(prev):
                orow = out[lo + r]
                for i, val in enumerate(row):
                    if val and tgt[i] >= 0:
                        orow[tgt[i]] = -val if odd[i] else val
        else:
            pos = (tgt >= 0) & (odd == 0)
            neg = (tgt >= 0) & (odd == 1)
            if pos.any():
                out[lo:lo + len(prev), tgt[pos]] = prev[:, pos]
            if neg.any():
                vals = prev[:, neg]
                out[lo:lo + len(prev), tgt[neg]] = np.where(
                    vals == 0, vals, self.p - vals
                )

    def _expand_gen(self, g, k):
        """phi applied to one generator, as {column index: coefficient}."""
        if self.exterior:
            return self._expand_wedge(g, k)
        return self._expand_product(g, k)

    def _expand_product(self, g, k):
        _, index = poly_columns(self.n, k)
        cur = {(0,) * self.n: self._one()}
        for v in g:
            col = [self.phi[r][v - 1] for r in range(self.n)]
            nxt = {}
            for e, coeff in cur.items():
                for r in range(self.n):
                    a = col[r]
                    if not a:
                        continue
                    e2 = e[:r] + (e[r] + 1,) + e[r + 1:]
                    nxt[e2] = self._addmul(nxt.get(e2), coeff, a)
            cur = {e: c for e, c in nxt.items() if c}
        return {index[e]: c for e, c in cur.items() if c}

    def _expand_wedge(self, gmask, k):
        _, index = ext_columns(self.n, k)
        cur = {0: self._one()}
        for v in verts_of(gmask):
            col = [self.phi[r][v - 1] for r in range(self.n)]
            nxt = {}
            for smask, coeff in cur.items():
                for r in range(self.n):
                    a = col[r]
                    if not a:
                        continue
                    rbit = 1 << r
                    if smask & rbit:
                        continue
                    # append e_{r+1} on the right: sign counts larger elements
                    sign = (smask >> (r + 1)).bit_count() & 1
                    term = a if not sign else self._negate(a)
                    key = smask | rbit
                    nxt[key] = self._addmul(nxt.get(key), coeff, term)
            cur = {m: c for m, c in nxt.items() if c}
        return {index[m]: c for m, c in cur.items() if c}

    def _one(self):
        return Fraction(1) if self.exact else 1

    def _negate(self, a):
        return -a if self.exact else (self.p - a) % self.p

    def _addmul(self, acc, coeff, a):
        term = coeff * a if self.exact else coeff * a % self.p
        if acc is None:
            return term
        return acc + term if self.exact else (acc + term) % self.p


# -- engine constructors ----------------------------------------------------


def _group_by_degree_masks(masks):
    out = {}
    for m in masks:
        out.setdefault(m.bit_count(), []).append(m)
    return out


def _group_by_degree_tuples(gens):
    out = {}
    for g in gens:
        out.setdefault(len(g), []).append(tuple(g))
    return out


def exterior_engine(c: SimplicialComplex, n: int, phi, p=DEFAULT_PRIME,
                    exact=False) -> GradedShiftEngine:
    gens = _group_by_degree_masks(exterior_face_ideal(c, n))
    return GradedShiftEngine(n, gens, phi, p=p, exterior=True, exact=exact)


def polynomial_engine(ideal: MonomialIdeal, phi, p=DEFAULT_PRIME,
                      exact=False) -> GradedShiftEngine:
    gens = _group_by_degree_tuples(ideal.gens)
    return GradedShiftEngine(ideal.n, gens, phi, p=p, exterior=False, exact=exact)


# -- shared helpers ---------------------------------------------------------


def _facets_from_faces(faces, n: int) -> SimplicialComplex:
    """Complex from a downward-closed face set; single-step maximality."""
    facets = []
    for m in faces:
        if not any(
            (m | (1 << v)) in faces
            for v in range(n)
            if not m >> v & 1
        ):
            facets.append(m)
    return SimplicialComplex(facets)


def _is_downward_closed(faces, n: int) -> bool:
    for m in faces:
        mm = m
        while mm:
            low = mm & -mm
            if (m & ~low) not in faces:
                return False
            mm &= ~low
    return True


def _normalize_ambient(c: SimplicialComplex, ambient):
    """Relabel onto 1..n when no ambient is forced.

    Returns (complex, back-relabeling dict or None, n).
    """
    if ambient is None:
        if c.is_empty_complex:
            return c, None, 0
        vs = c.vertices
        n = len(vs)
        if vs == tuple(range(1, n + 1)):
            return c, None, n
        fwd = {v: k + 1 for k, v in enumerate(vs)}
        back = {k + 1: v for k, v in enumerate(vs)}
        return c.relabel(fwd), back, n
    n = int(ambient)
    if n < 0 or (c.ground >> n):
        raise InvalidParameters(f"complex does not fit in ambient [{n}]")
    return c, None, n


@dataclass
class ShiftReport:
    """Everything a shift run produced, enough to replay it."""

    mode: str
    input_complex: SimplicialComplex
    shifted: SimplicialComplex
    seeds: list
    prime: int
    trials: int
    agreement: bool
    pivot_counts: dict = field(default_factory=dict)
    gin_generators: list | None = None
    gin_complete_degree: int | None = None

    def to_json_dict(self) -> dict:
        d = {
            "mode": self.mode,
            "input": self.input_complex.to_json_dict(),
            "shifted": self.shifted.to_json_dict(),
            "seeds": list(self.seeds),
            "prime": self.prime,
            "trials": self.trials,
            "agreement": self.agreement,
            "pivot_counts": {str(k): v for k, v in sorted(self.pivot_counts.items())},
        }
        if self.gin_generators is not None:
            d["gin_generators"] = [list(g) for g in self.gin_generators]
            d["gin_complete_degree"] = self.gin_complete_degree
        return d


# -- exterior shifting -------------------------------------------------------


def _exterior_faces_once(c, n, phi, p, exact):
    eng = exterior_engine(c, n, phi, p=p, exact=exact)
    faces = set()
    counts = {}
    for k in range(n + 1):
        counts[k] = eng.rank_at(k)
        faces.update(eng.standard_at(k))
    return faces, counts


def _check_shift_result(faces, c, n, want_shifted=True):
    """Certificates: closure, f-vector preservation, shiftedness."""
    if not _is_downward_closed(faces, n):
        return "result not downward closed"
    out = _facets_from_faces(faces, n)
    if out.f_vector != c.f_vector:
        return f"f-vector changed: {out.f_vector} vs {c.f_vector}"
    if want_shifted and not is_shifted(out, n):
        return "result not shifted"
    return None


def exterior_shift(c: SimplicialComplex, ambient=None, seed: int = 0,
                   trials: int = 3, p: int = DEFAULT_PRIME,
                   exact: bool = False) -> ShiftReport:
    """Exterior algebraic shift, computed over independent random trials.

    ambient=None shifts c on its own vertex set (order-isomorphically
    relabeled); an integer ambient treats c as sitting inside [n], where
    missing vertices contribute degree-one generators.
    """
    work, back, n = _normalize_ambient(c, ambient)
    if n == 0:
        return ShiftReport("exterior", c, EMPTY_COMPLEX, [], p, trials, True)
    last_problem = "no trials run"
    for round_no in range(RETRY_ROUNDS):
        seeds = derive_seeds(seed + round_no, trials)
        results = []
        counts = {}
        for s in seeds:
            phi = random_invertible(n, s, p)
            faces, counts = _exterior_faces_once(work, n, phi, p, exact)
            results.append(frozenset(faces))
        if len(set(results)) != 1:
            last_problem = "trials disagree"
            continue
        problem = _check_shift_result(results[0], work, n)
        if problem:
            last_problem = problem
            continue
        out = _facets_from_faces(results[0], n)
        if back:
            out = out.relabel(back)
        return ShiftReport("exterior", c, out, seeds, p, trials, True,
                           pivot_counts=counts)
    raise RandomnessSuspect(f"exterior shift: {last_problem}")


def nongeneric_shift(c: SimplicialComplex, phi, ambient=None,
                     p: int = DEFAULT_PRIME, exact: bool = False) -> SimplicialComplex:
    """Shift by one explicit coordinate change (no genericity, no trials).

    The result is always a simplicial complex with the same f-vector;
    it is generally not shifted.
    """
    work, back, n = _normalize_ambient(c, ambient)
    if n == 0:
        return EMPTY_COMPLEX
    if len(phi) != n or any(len(r) != n for r in phi):
        raise InvalidParameters(f"phi must be {n}x{n}")
    if not exact and matrix_rank(phi, p) != n:
        raise SingularMatrix("phi is singular")
    faces, _ = _exterior_faces_once(work, n, phi, p, exact)
    if not _is_downward_closed(faces, n):
        raise IdentityViolated("initial ideal complement not a complex")
    out = _facets_from_faces(faces, n)
    if out.f_vector != work.f_vector:
        raise IdentityViolated("nongeneric shift changed the f-vector")
    if back:
        out = out.relabel(back)
    return out


# -- polynomial side ---------------------------------------------------------


def _gin_gens_for_trials(engines, upto, state):
    """Advance all trial engines to degree upto, folding pivot monomials
    into a shared minimal generator list; raises on disagreement."""
    for k in range(state["done"] + 1, upto + 1):
        piv_sets = {eng.pivots_at(k) for eng in engines}
        if len(piv_sets) != 1:
            raise RandomnessSuspect(f"gin trials disagree in degree {k}")
        piv = piv_sets.pop()
        for u in sorted(piv):
            if not any(mono_divides(g, u) for g in state["gens"]):
                state["gens"].append(u)
        state["done"] = k


def symmetric_shift(c: SimplicialComplex, ambient=None, seed: int = 0,
                    trials: int = 3, p: int = DEFAULT_PRIME,
                    exact: bool = False) -> ShiftReport:
    """Symmetric algebraic shift via the generic initial ideal.

    Degrees are processed incrementally.  After each degree the current
    generators are stretched to squarefree monomials and the candidate
    complex is compared with the input f-vector: equality certifies the
    shift is complete (the candidate contains the true shifted complex,
    and the shift provably preserves f-vectors, so equal counts force
    equality).  The generator degree of a generic initial ideal of a
    squarefree ideal never exceeds n, which bounds the loop.
    """
    work, back, n = _normalize_ambient(c, ambient)
    if n == 0:
        return ShiftReport("symmetric", c, EMPTY_COMPLEX, [], p, trials, True)
    ideal = stanley_reisner_ideal(work, n)
    if ideal.is_zero:
        out = work.relabel(back) if back else work
        return ShiftReport("symmetric", c, out, [], p, trials, True,
                           gin_generators=[], gin_complete_degree=0)
    target_f = work.f_vector
    last_problem = "no trials run"
    for round_no in range(RETRY_ROUNDS):
        seeds = derive_seeds(seed + round_no, trials)
        engines = [
            polynomial_engine(ideal, random_invertible(n, s, p), p=p, exact=exact)
            for s in seeds
        ]
        state = {"done": 0, "gens": []}
        problem = None
        candidate = None
        stop_degree = None
        try:
            for k in range(1, n + 1):
                _gin_gens_for_trials(engines, k, state)
                sq = squarefree_image_ideal(
                    MonomialIdeal(n, state["gens"]), n
                )
                candidate = complex_from_squarefree_ideal(sq)
                if candidate.f_vector == target_f:
                    stop_degree = k
                    break
        except RandomnessSuspect as exc:
            problem = str(exc)
        except Exception as exc:  # squarefree stretch out of range etc.
            problem = f"{type(exc).__name__}: {exc}"
        if problem is None and stop_degree is None:
            problem = "f-vector never matched up to the degree cap"
        if problem is None and not is_shifted(candidate, n):
            problem = "result not shifted"
        if problem is None:
            counts = {k: engines[0].rank_at(k) for k in range(1, stop_degree + 1)}
            out = candidate.relabel(back) if back else candidate
            gens = [list(mono_exp(g, n)) for g in state["gens"]]
            return ShiftReport("symmetric", c, out, seeds, p, trials, True,
                               pivot_counts=counts,
                               gin_generators=gens,
                               gin_complete_degree=stop_degree)
        last_problem = problem
    raise RandomnessSuspect(f"symmetric shift: {last_problem}")


def gin_polynomial(ideal: MonomialIdeal, degree_bound: int | None = None,
                   seed: int = 0, trials: int = 3, p: int = DEFAULT_PRIME,
                   exact: bool = False) -> MonomialIdeal:
    """Generic initial ideal (reverse lexicographic) of a monomial ideal.

    Generators are collected up to degree_bound (default: the variable
    count n, which is a proven cap when the input is squarefree).  A
    Hilbert-function comparison one degree past the bound raises
    DegreeBoundTooSmall if the truncation provably misses generators.
    The result is checked to be strongly stable.
    """
    n = ideal.n
    if ideal.is_zero:
        return ideal
    bound = n if degree_bound is None else int(degree_bound)
    if bound < 1:
        raise InvalidParameters("degree bound must be >= 1")
    last_problem = "no trials run"
    for round_no in range(RETRY_ROUNDS):
        seeds = derive_seeds(seed + round_no, trials)
        engines = [
            polynomial_engine(ideal, random_invertible(n, s, p), p=p, exact=exact)
            for s in seeds
        ]
        state = {"done": 0, "gens": []}
        try:
            _gin_gens_for_trials(engines, bound, state)
        except RandomnessSuspect as exc:
            last_problem = str(exc)
            continue
        gin = MonomialIdeal(n, state["gens"])
        if gin.dim_at(bound + 1) != ideal.dim_at(bound + 1):
            raise DegreeBoundTooSmall(
                f"generators above degree {bound} remain (Hilbert mismatch)"
            )
        if not gin.is_strongly_stable():
            last_problem = "gin not strongly stable"
            continue
        return gin
    raise RandomnessSuspect(f"gin: {last_problem}")


# -- specific coordinate changes ---------------------------------------------


@dataclass
class ElementaryInitialIdeal:
    """Initial ideal of the image of a Stanley-Reisner ideal under the
    elementary map sending x_j to x_i + x_j."""

    ideal: MonomialIdeal
    degree_bound: int
    is_complete: bool
    hypothesis_holds: bool
    equals_shift_ideal: bool
    shift_ideal: MonomialIdeal
    pivots_by_degree: dict


def initial_ideal_of_elementary_map(c: SimplicialComplex, i: int, j: int,
                                    ambient=None, degree_bound=None,
                                    p: int = DEFAULT_PRIME) -> ElementaryInitialIdeal:
    """in(phi_ij(I_C)) for the elementary map phi_ij: x_j -> x_i + x_j.

    When no generator of I_C is divisible by x_i x_j the result equals
    the Stanley-Reisner ideal of shift_ij(C); this is certified exactly:
    both ideals share a Hilbert function, so containment of the
    generators of one in the other forces equality.  Otherwise the
    truncated ideal up to the degree bound is returned; it then contains
    generators divisible by x_i^2.
    """
    work, back, n = _normalize_ambient(c, ambient)
    if back is not None:
        raise InvalidParameters("vertex labels must already lie in 1..n")
    if not (1 <= i < j <= n):
        raise InvalidParameters("need 1 <= i < j <= n")
    ideal = stanley_reisner_ideal(work, n)
    shifted_c = shift_ij(work, i, j)
    shift_ideal = stanley_reisner_ideal(shifted_c, n)
    hypothesis = not any(i in g and j in g for g in ideal.gens)
    if degree_bound is None:
        degree_bound = max(ideal.max_gen_degree(), shift_ideal.max_gen_degree())
        degree_bound = max(degree_bound, 1)
    phi = [[1 if r == s else 0 for s in range(n)] for r in range(n)]
    phi[i - 1][j - 1] = 1
    eng = polynomial_engine(ideal, phi, p=p)
    gens = []
    pivots_by_degree = {}
    for k in range(1, degree_bound + 1):
        piv = eng.pivots_at(k)
        pivots_by_degree[k] = piv
        for u in sorted(piv):
            if not any(mono_divides(g, u) for g in gens):
                gens.append(u)
    result = MonomialIdeal(n, gens)
    # equality with I_{shift_ij(C)} is decidable from the truncation:
    # every generator of the shift ideal has degree <= the bound, so
    # generator membership plus the common Hilbert function settles it.
    equals = all(
        len(g) <= degree_bound and g in pivots_by_degree[len(g)]
        for g in shift_ideal.gens
    ) and all(
        face_ideal_dim_at(shifted_c, n, k) == len(pivots_by_degree[k])
        for k in range(1, degree_bound + 1)
    )
    complete = equals  # equality pins the whole ideal
    return ElementaryInitialIdeal(
        ideal=result,
        degree_bound=degree_bound,
        is_complete=complete,
        hypothesis_holds=hypothesis,
        equals_shift_ideal=equals,
        shift_ideal=shift_ideal,
        pivots_by_degree=pivots_by_degree,
    )


# -- stability under extra variables and coning ------------------------------


def _exterior_standards_by_degree(c, n, seed, trials, p):
    """Agreed standard-monomial sets of Gin(J_c) inside [n], by degree."""
    last = "no trials run"
    for round_no in range(RETRY_ROUNDS):
        seeds = derive_seeds(seed + round_no, trials)
        outs = []
        for s in seeds:
            phi = random_invertible(n, s, p)
            eng = exterior_engine(c, n, phi, p=p)
            outs.append(
                {k: frozenset(eng.standard_at(k)) for k in range(n + 1)}
            )
        if all(o == outs[0] for o in outs[1:]):
            return outs[0]
        last = "trials disagree"
    raise RandomnessSuspect(f"exterior gin: {last}")


def gin_with_extra_variables(c: SimplicialComplex, n: int, seed: int = 0,
                             trials: int = 3, p: int = DEFAULT_PRIME) -> list:
    """Check that unused low labels pass through the exterior Gin.

    c lives on labels inside [m..n] with m = min vertex.  The generic
    initial ideal of the face ideal of c inside the full [n] must equal
    the one computed inside [m..n] plus the ideal of the extra variables
    e_1..e_{m-1}.  Returns the minimal generator masks of the big Gin;
    raises IdentityViolated on mismatch.
    """
    if c.is_empty_complex:
        raise InvalidParameters("need at least one vertex")
    m = min(c.vertices)
    big = _exterior_standards_by_degree(c, n, seed, trials, p)
    offset = m - 1
    small_c = c.relabel({v: v - offset for v in c.vertices})
    small = _exterior_standards_by_degree(small_c, n - offset, seed, trials, p)
    for k in range(n + 1):
        lifted = frozenset(
            mask << offset for mask in small.get(k, frozenset())
        )
        if big.get(k, frozenset()) != lifted:
            raise IdentityViolated(
                f"extra variables are not transparent in degree {k}"
            )
    # minimal generators of the big Gin: pivots with no pivot strictly below
    pivots = []
    for k in range(1, n + 1):
        cols, _ = ext_columns(n, k)
        stdk = big.get(k, frozenset())
        pivots.extend(m_ for m_ in cols if m_ not in stdk)
    minimal = [
        g for g in pivots
        if not any(h != g and h & g == h for h in pivots)
    ]
    return sorted(minimal)


def shift_of_cone(c: SimplicialComplex, seed: int = 0, trials: int = 3,
                  p: int = DEFAULT_PRIME) -> SimplicialComplex:
    """Exterior shift of a cone, checked to be the cone over the shift.

    The cone over c (apex = a fresh largest label n+1) is shifted inside
    [n+1]; the result must equal the cone with the same apex n+1 over the
    shift of c.  Raises IdentityViolated if coning and shifting fail to
    commute on this input.
    """
    from .complexes import cone as make_cone  # local import avoids cycle noise

    work, back, n = _normalize_ambient(c, None)
    if back is not None:
        raise InvalidParameters("relabel the complex onto 1..n first")
    coned = make_cone(n + 1, work)
    lhs = exterior_shift(coned, ambient=n + 1, seed=seed, trials=trials, p=p).shifted
    base = exterior_shift(work, ambient=n, seed=seed, trials=trials, p=p).shifted
    rhs = make_cone(n + 1, base)
    if lhs != rhs:
        raise IdentityViolated("shift of cone differs from cone of shift")
    return lhs
