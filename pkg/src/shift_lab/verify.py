"""Verification suites: each runs a family of instances of one of the
library's headline facts and reports per-instance pass/fail data.

The suites are scriptable through the command line interface and are
the backbone of the acceptance tests:

* kalai-cyclic     -- both shifts of cyclic polytope boundaries equal
                      the explicit extremal complex Delta(n,d);
* lemma21          -- the three equivalent forms of the Link condition
                      agree on random complexes, and the shift operator
                      preserves the condition;
* lemma52          -- squeezed ball/sphere h-vector formulas, the
                      low-cardinality face equality, and the identity
                      splitting Shift_12 of a squeezed sphere;
* main1            -- shifts of strongly edge decomposable complexes
                      are pure, have symmetric h, and obey the cyclic
                      upper bound;
* main2            -- every shifted pure complex with symmetric h below
                      the cyclic upper bound is realized as the shift
                      of a squeezed sphere;
* properties-s1s4  -- shiftedness, idempotence, f-vector preservation
                      and monotonicity of both shift operators;
* slp-agreement    -- the direct and the shift-based strong Lefschetz
                      checks agree; Artinian quotient dimensions match
                      h-vectors on Cohen-Macaulay inputs; initial-ideal
                      spot checks and the gluing implication hold.

Every failing instance carries a certificate with enough data to
replay it: the input complex, the seeds, and the step that failed.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .complexes import (
    SimplicialComplex,
    cone,
    cyclic_boundary,
    is_shifted,
    mask_of,
    simplex_boundary,
    verts_of,
)
from .delta import build_delta, contained_in_delta
from .errors import InvalidParameters, ShiftLabError
from .lefschetz import (
    artinian_profile,
    check_slp_direct,
    check_slp_via_shift,
    is_cm_via_shift,
    wiebe_spotcheck,
)
from .modp import DEFAULT_PRIME, derive_seeds
from .moves import (
    contraction,
    link,
    link_condition,
    link_condition_via_ideal,
    shift_ij,
)
from .randomgen import random_complex, random_pure_shifted_complex, random_subcomplex
from .sed import is_sed, verify_witness
from .shifting import exterior_shift, symmetric_shift
from .squeezed import (
    ball_boundary,
    ball_h_from_ideal,
    enumerate_shifted_order_ideals,
    hat_complex,
    realize_squeezed,
    sphere_h_from_ideal,
    split_order_ideal,
    squeezed_ball,
    squeezed_sphere,
    tilde_complex,
)


@dataclass
class VerifyInstance:
    """One checked instance: a label, the verdict, and (always, for
    failures) a replayable certificate."""

    label: str
    passed: bool
    certificate: dict | None = None

    def to_json_dict(self) -> dict:
        out = {"label": self.label, "passed": self.passed}
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


@dataclass
class VerifyReport:
    suite: str
    seed: int
    prime: int
    instances: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(inst.passed for inst in self.instances)

    @property
    def failures(self) -> list:
        return [inst for inst in self.instances if not inst.passed]

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "prime": self.prime,
            "passed": self.passed,
            "instances": len(self.instances),
            "failed": len(self.failures),
            "wall_time": round(self.wall_time, 3),
            "results": [inst.to_json_dict() for inst in self.instances],
        }


def _finish(report: VerifyReport, started: float) -> VerifyReport:
    report.wall_time = time.perf_counter() - started
    return report


# -- kalai-cyclic --------------------------------------------------------------


def verify_kalai_cyclic(max_n: int = 7, seed: int = 0, trials: int = 3,
                        p: int = DEFAULT_PRIME) -> VerifyReport:
    """Delta^s(C(n,d)) = Delta(n,d) and Delta^e = Delta^s for
    2 <= d < n <= max_n."""
    started = time.perf_counter()
    report = VerifyReport("kalai-cyclic", seed, p)
    for d in range(2, max_n):
        for n in range(d + 1, max_n + 1):
            cyc = cyclic_boundary(n, d)
            delta = build_delta(n, d)
            sym = symmetric_shift(cyc, ambient=n, seed=seed, trials=trials, p=p)
            ext = exterior_shift(cyc, ambient=n, seed=seed, trials=trials, p=p)
            ok = sym.shifted == delta and ext.shifted == delta
            cert = None
            if not ok:
                cert = {
                    "input": cyc.to_json_dict(),
                    "seed": seed,
                    "step": "symmetric" if sym.shifted != delta else "exterior",
                    "symmetric": sym.shifted.to_json_dict(),
                    "exterior": ext.shifted.to_json_dict(),
                    "expected": delta.to_json_dict(),
                }
            report.instances.append(VerifyInstance(f"n={n} d={d}", ok, cert))
    return _finish(report, started)


# -- lemma21 -------------------------------------------------------------------


def _split_shift_faces(c: SimplicialComplex, i: int, j: int) -> frozenset:
    """The face set the decomposition predicts for shift_ij: the
    contraction's faces plus {i} joined onto the cone of the edge link."""
    ib = 1 << (i - 1)
    faces = set(contraction(c, i, j).faces)
    cone_part = cone(j, link(c, mask_of((i, j))))
    faces.update(m | ib for m in cone_part.faces)
    return frozenset(faces)


def verify_lemma21(n: int = 6, cases: int = 500, seed: int = 7,
                   p: int = DEFAULT_PRIME) -> VerifyReport:
    """Equivalence of the three Link-condition criteria on random
    complexes, plus preservation of the condition by the shift operator.

    For an edge {i,j}: (link form) the link of the edge is the meet of
    the vertex links; (shift form) shift_ij splits as contraction plus
    an i-cone over the edge link coned at j; (ideal form) no minimal
    non-face contains both i and j.
    """
    started = time.perf_counter()
    report = VerifyReport("lemma21", seed, p)
    case_seeds = derive_seeds(seed, cases)
    for idx, cseed in enumerate(case_seeds):
        rng = random.Random(cseed)
        dim = rng.choice((1, 1, 2, 2, 3))
        dim = min(dim, n - 1)
        density = rng.uniform(0.25, 0.9)
        c = random_complex(n, dim, density, cseed)
        edges = sorted(c.faces_of_card(2))
        edge = rng.choice(edges)
        i, j = verts_of(edge)
        cond_link, lc_cert = link_condition(c, i, j)
        cond_shift = set(shift_ij(c, i, j).faces) == set(_split_shift_faces(c, i, j))
        cond_ideal = link_condition_via_ideal(c, i, j)
        agree = cond_link == cond_shift == cond_ideal
        preserved = True
        if cond_link:
            preserved, _ = link_condition(shift_ij(c, i, j), i, j)
        ok = agree and preserved
        cert = None
        if not ok:
            cert = {
                "input": c.to_json_dict(),
                "seed": cseed,
                "edge": [i, j],
                "step": "equivalence" if not agree else "preservation",
                "link_form": cond_link,
                "shift_form": cond_shift,
                "ideal_form": cond_ideal,
                "link_certificate": lc_cert,
            }
        report.instances.append(VerifyInstance(f"case {idx}", ok, cert))
    return _finish(report, started)


# -- lemma52 (and the h-vector formulas around it) -----------------------------


def _valid_ideals(n: int, d: int):
    return enumerate_shifted_order_ideals(n - d - 1, (d + 1) // 2)


def verify_lemma52(max_n: int = 8, seed: int = 0, trials: int = 3,
                   p: int = DEFAULT_PRIME) -> VerifyReport:
    """Squeezed-sphere structure battery over every valid order ideal.

    Part one (d <= 4, n <= max_n): the ball and sphere h-vectors match
    the degree-count formulas, and the ball and sphere have the same
    faces of cardinality at most d/2.  Part two (d in {3,4}, one extra
    vertex at least): the displayed splitting of Shift_12 of the sphere
    into the hat sphere and a cone over the tilde sphere, along with the
    contraction and link identities it implies.
    """
    started = time.perf_counter()
    report = VerifyReport("lemma52", seed, p)
    for d in range(1, 5):
        for n in range(d + 1, max_n + 1):
            for u_ideal in _valid_ideals(n, d):
                tag = f"d={d} n={n} U={sorted(u_ideal)}"
                ball = squeezed_ball(u_ideal, n, d)
                sphere = squeezed_sphere(u_ideal, n, d)
                checks = {
                    "ball_h": ball.h_vector == ball_h_from_ideal(u_ideal, d),
                    "sphere_h": sphere.h_vector == sphere_h_from_ideal(u_ideal, d),
                    "low_faces": (
                        {m for m in ball.faces if m.bit_count() <= d // 2}
                        == {m for m in sphere.faces if m.bit_count() <= d // 2}
                    ),
                }
                if d > 2 and n > d + 1:
                    checks.update(_split_identity_checks(u_ideal, sphere, n, d))
                ok = all(checks.values())
                cert = None
                if not ok:
                    cert = {
                        "input": sorted(u_ideal),
                        "n": n,
                        "d": d,
                        "step": [k for k, v in checks.items() if not v],
                        "sphere": sphere.to_json_dict(),
                    }
                report.instances.append(VerifyInstance(tag, ok, cert))
    return _finish(report, started)


def _split_identity_checks(u_ideal, sphere: SimplicialComplex, n: int,
                           d: int) -> dict:
    hat, tilde = split_order_ideal(u_ideal)
    hat_sphere = ball_boundary(hat_complex(hat, n, d))
    tilde_sphere = ball_boundary(tilde_complex(tilde, n, d))
    lhs = shift_ij(sphere, 1, 2)
    rhs = set(hat_sphere.faces)
    rhs.update(m | 1 for m in cone(2, tilde_sphere).faces)
    return {
        "split": set(lhs.faces) == rhs,
        "contraction": contraction(sphere, 1, 2) == hat_sphere,
        "edge_link": link(sphere, mask_of((1, 2))) == tilde_sphere,
        "link_condition": link_condition(sphere, 1, 2)[0],
    }


# -- main1 ---------------------------------------------------------------------


def _sed_pool(max_n: int, seed: int) -> list:
    """Named strongly edge decomposable complexes plus random finds."""
    pool = [
        ("4-cycle", SimplicialComplex(
            [mask_of(e) for e in ((1, 2), (2, 3), (3, 4), (1, 4))])),
        ("4-cycle with chord relabeled", SimplicialComplex(
            [mask_of(e) for e in ((1, 2), (2, 3), (3, 4), (2, 4))])),
    ]
    for k in range(2, 5):
        pool.append((f"boundary of {k}-simplex",
                     simplex_boundary(range(1, k + 2))))
    for n in range(5, max_n + 1):
        pool.append((f"{n}-cycle", cyclic_boundary(n, 2)))
    for d, n in ((3, 5), (3, 6), (4, 6)):
        if n <= max_n + 2:
            for count, u_ideal in enumerate(_valid_ideals(n, d)):
                pool.append((f"squeezed d={d} n={n} #{count}",
                             squeezed_sphere(u_ideal, n, d)))
    found = 0
    for sampler_seed in derive_seeds(seed, 200):
        if found >= 4:
            break
        c = random_complex(max_n, 1, random.Random(sampler_seed).uniform(0.4, 0.8),
                           sampler_seed)
        if len(c.vertices) == max_n and is_sed(c) is not None:
            pool.append((f"random graph seed={sampler_seed}", c))
            found += 1
    return pool


def verify_main1(max_n: int = 6, seed: int = 0, trials: int = 3,
                 p: int = DEFAULT_PRIME) -> VerifyReport:
    """For strongly edge decomposable complexes: both shifts are pure,
    the h-vector is symmetric, and both shifts lie in Delta(n,d)."""
    started = time.perf_counter()
    report = VerifyReport("main1", seed, p)
    for label, c in _sed_pool(max_n, seed):
        n = max(c.vertices)
        d = c.dim + 1
        h = c.h_vector
        witness = is_sed(c)
        checks = {"sed": witness is not None}
        replay_reason = None
        if witness is not None:
            replay_ok, replay_reason = verify_witness(c, witness)
            checks["witness_replay"] = replay_ok
        checks["h_symmetric"] = all(h[i] == h[d - i] for i in range(d + 1))
        for mode, run in (("exterior", exterior_shift),
                          ("symmetric", symmetric_shift)):
            rep = run(c, ambient=n, seed=seed, trials=trials, p=p)
            checks[f"{mode}_pure"] = rep.shifted.is_pure
            checks[f"{mode}_bound"] = contained_in_delta(rep.shifted, n, d)
        ok = all(checks.values())
        cert = None
        if not ok:
            cert = {
                "input": c.to_json_dict(),
                "seed": seed,
                "step": [k for k, v in checks.items() if not v],
                "witness_reason": replay_reason,
            }
        report.instances.append(VerifyInstance(label, ok, cert))
    return _finish(report, started)


# -- main2 ---------------------------------------------------------------------


def shifted_pure_subcomplexes(n: int, d: int):
    """All pure (d-1)-dimensional shifted complexes inside Delta(n,d).

    A pure complex is shifted exactly when its facet family is closed
    under replacing a facet element by a larger non-element, so the
    enumeration walks subsets of the admissible facets.
    """
    admissible = sorted(build_delta(n, d).facets)
    if len(admissible) > 16:
        raise InvalidParameters(
            "facet family too large to enumerate its up-closed subsets"
        )
    for r in range(1, len(admissible) + 1):
        for subset in itertools.combinations(admissible, r):
            family = set(subset)
            if _upclosed(family, n):
                yield SimplicialComplex(family)


def _upclosed(family, n: int) -> bool:
    for m in family:
        for v in verts_of(m):
            for w in range(v + 1, n + 1):
                wb = 1 << (w - 1)
                if not m & wb and (m & ~(1 << (v - 1))) | wb not in family:
                    return False
    return True


def verify_main2(n: int = 6, d: int = 3, seed: int = 0, trials: int = 3,
                 p: int = DEFAULT_PRIME) -> VerifyReport:
    """Every shifted pure (d-1)-complex with symmetric h inside
    Delta(n,d) is the shift (both kinds) of some squeezed sphere."""
    started = time.perf_counter()
    report = VerifyReport("main2", seed, p)
    for count, sigma in enumerate(shifted_pure_subcomplexes(n, d)):
        h = sigma.h_vector
        if any(h[i] != h[d - i] for i in range(d + 1)):
            continue
        label = f"target #{count} with {len(sigma.facets)} facets"
        cert = {
            "target": sigma.to_json_dict(),
            "seed": seed,
            "step": "realize",
        }
        try:
            realized = realize_squeezed(sigma, seed=seed, trials=trials, p=p)
        except ShiftLabError as exc:
            cert["error"] = str(exc)
            report.instances.append(VerifyInstance(label, False, cert))
            continue
        sphere = realized.sphere
        ext = exterior_shift(sphere, ambient=n, seed=seed, trials=trials, p=p)
        sym = symmetric_shift(sphere, ambient=n, seed=seed, trials=trials, p=p)
        ok = ext.shifted == sigma and sym.shifted == sigma
        if ok:
            cert = None
        else:
            cert["step"] = "shift comparison"
            cert["sphere"] = sphere.to_json_dict()
            cert["exterior"] = ext.shifted.to_json_dict()
            cert["symmetric"] = sym.shifted.to_json_dict()
        report.instances.append(VerifyInstance(label, ok, cert))
    return _finish(report, started)


# -- properties S1-S4 ----------------------------------------------------------


def verify_properties_s1s4(cases: int = 300, max_n: int = 6, seed: int = 0,
                           trials: int = 3, p: int = DEFAULT_PRIME) -> VerifyReport:
    """Both shift operators: output shifted (S1), fixed points exactly
    the shifted complexes (S2, tested as idempotence plus fixed points
    on constructed shifted inputs), f-vector preservation (S3), and
    monotonicity under subcomplexes (S4).

    A monotonicity violation is retried with fresh seeds before being
    reported, and flagged as randomness-suspect in the certificate: the
    property is a theorem, so a stable violation means the sampled
    coordinate changes were bad for the pair.
    """
    started = time.perf_counter()
    report = VerifyReport("properties-s1s4", seed, p)
    case_seeds = derive_seeds(seed, cases)
    for idx, cseed in enumerate(case_seeds):
        rng = random.Random(cseed)
        n = rng.randrange(4, max_n + 1)
        dim = rng.choice((1, 1, 1, 2))
        c = random_complex(n, dim, rng.uniform(0.3, 0.9), cseed)
        sub = random_subcomplex(c, rng.uniform(0.4, 0.9), cseed + 1)
        checks = {}
        suspect = []
        for mode, run in (("exterior", exterior_shift),
                          ("symmetric", symmetric_shift)):
            rep = run(c, ambient=n, seed=cseed, trials=trials, p=p)
            shifted = rep.shifted
            checks[f"{mode}_s1_shifted"] = is_shifted(shifted, n)
            checks[f"{mode}_s3_f"] = shifted.f_vector == c.f_vector
            again = run(shifted, ambient=n, seed=cseed + 2, trials=trials, p=p)
            checks[f"{mode}_s2_idempotent"] = again.shifted == shifted
            sub_rep = run(sub, ambient=n, seed=cseed + 3, trials=trials, p=p)
            mono = sub_rep.shifted.faces <= shifted.faces
            if not mono:
                retry_c = run(c, ambient=n, seed=cseed + 101, trials=trials, p=p)
                retry_s = run(sub, ambient=n, seed=cseed + 102, trials=trials, p=p)
                mono = retry_s.shifted.faces <= retry_c.shifted.faces
                if not mono:
                    suspect.append(mode)
            checks[f"{mode}_s4_monotone"] = mono
        if idx % 5 == 0:
            fixture = random_pure_shifted_complex(n, dim, 2, cseed + 4)
            for mode, run in (("exterior", exterior_shift),
                              ("symmetric", symmetric_shift)):
                rep = run(fixture, ambient=n, seed=cseed + 5, trials=trials, p=p)
                checks[f"{mode}_s2_fixed_point"] = rep.shifted == fixture
        ok = all(checks.values())
        cert = None
        if not ok:
            cert = {
                "input": c.to_json_dict(),
                "subcomplex": sub.to_json_dict(),
                "seed": cseed,
                "step": [k for k, v in checks.items() if not v],
                "randomness_suspect": suspect,
            }
        report.instances.append(VerifyInstance(f"case {idx} n={n}", ok, cert))
    return _finish(report, started)


# -- slp agreement -------------------------------------------------------------


def _criterion_spheres(max_n: int = 8):
    """Squeezed spheres with deg U <= d/2, d in {2,3,4}, up to max_n
    vertices: the family whose order ideals round-trip."""
    for d in (2, 3, 4):
        for n in range(d + 1, max_n + 1):
            for u_ideal in enumerate_shifted_order_ideals(n - d - 1, d // 2):
                yield u_ideal, n, d, squeezed_sphere(u_ideal, n, d)


def _random_cm_complexes(count: int, max_n: int, seed: int, trials: int,
                         p: int) -> list:
    """Cohen-Macaulay sample: constructed shifted pure complexes plus
    random complexes that pass the exterior purity test."""
    out = []
    rng = random.Random(seed)
    for cseed in derive_seeds(seed, 4 * count):
        if len(out) >= count:
            break
        n = rng.randrange(4, max_n + 1)
        dim = rng.choice((1, 1, 2))
        if rng.random() < 0.5:
            c = random_pure_shifted_complex(n, dim, rng.randrange(1, 4), cseed)
            out.append(c)
            continue
        c = random_complex(n, dim, rng.uniform(0.35, 0.9), cseed)
        if is_cm_via_shift(c, "exterior", seed=cseed, trials=trials, p=p):
            out.append(c)
    return out


def _sed_tree_implications(c: SimplicialComplex, witness, seed: int,
                           p: int) -> list:
    """Walk the contraction spine of a decomposition witness; at every
    edge node test that parts with the strong Lefschetz property glue
    to a whole with the strong Lefschetz property.

    Records (edge, parts_true, whole_verdict) triples; a violation is
    parts_true with whole_verdict false.
    """
    out = []
    node_c, node_w = c, witness
    while node_w is not None and node_w.kind == "edge":
        i, j = node_w.edge
        contr = contraction(node_c, i, j)
        lk = link(node_c, mask_of((i, j)))
        parts_true = (
            check_slp_direct(contr, seed=seed, p=p).is_true
            and (lk.is_empty_complex
                 or check_slp_direct(lk, seed=seed, p=p).is_true)
        )
        whole = check_slp_direct(node_c, seed=seed, p=p)
        out.append(((i, j), parts_true, whole.verdict))
        node_c, node_w = contr, node_w.contraction
    return out


def verify_slp_agreement(cm_cases: int = 100, max_n: int = 6, seed: int = 0,
                         trials: int = 3, p: int = DEFAULT_PRIME) -> VerifyReport:
    """Agreement battery for the strong Lefschetz checks.

    Squeezed spheres: both checks say true and the Artinian quotient
    dimensions reproduce the h-vector.  Random Cohen-Macaulay
    complexes: both checks return the same verdict, and the quotient
    dimensions always match.  Spot checks: the initial-ideal route
    never contradicts the direct one, and on decomposition witnesses
    the glued complex inherits the property from its parts.
    """
    started = time.perf_counter()
    report = VerifyReport("slp-agreement", seed, p)

    for u_ideal, n, d, sphere in _criterion_spheres():
        direct = check_slp_direct(sphere, seed=seed, p=p)
        via = check_slp_via_shift(sphere, seed=seed, trials=trials, p=p)
        profile = artinian_profile(sphere, seed=seed + 1, p=p)
        ok = direct.is_true and via.is_true and profile.dims_match
        cert = None
        if not ok:
            cert = {
                "input": sphere.to_json_dict(),
                "seed": seed,
                "step": "sphere agreement",
                "direct": direct.verdict,
                "via_shift": via.verdict,
                "dims": list(profile.dims),
                "expected": list(profile.expected),
            }
        report.instances.append(
            VerifyInstance(f"sphere d={d} n={n} U={sorted(u_ideal)}", ok, cert))

    for k, c in enumerate(_random_cm_complexes(cm_cases, max_n, seed + 17,
                                               trials, p)):
        direct = check_slp_direct(c, seed=seed, p=p)
        via = check_slp_via_shift(c, seed=seed, trials=trials, p=p)
        profile = artinian_profile(c, seed=seed + 1, p=p)
        ok = (direct.verdict == via.verdict
              and direct.verdict in ("true", "false")
              and profile.dims_match)
        cert = None
        if not ok:
            cert = {
                "input": c.to_json_dict(),
                "seed": seed,
                "step": "cm agreement",
                "direct": direct.verdict,
                "direct_reason": direct.reason,
                "via_shift": via.verdict,
                "via_reason": via.reason,
                "dims": list(profile.dims),
                "expected": list(profile.expected),
            }
        report.instances.append(VerifyInstance(f"cm case {k}", ok, cert))

    four_cycle = SimplicialComplex(
        [mask_of(e) for e in ((1, 2), (2, 3), (3, 4), (1, 4))])
    chord = SimplicialComplex(
        [mask_of(e) for e in ((1, 2), (2, 3), (3, 4), (2, 4), (1, 3))])
    hexagon = cyclic_boundary(6, 2)
    sphere6 = squeezed_sphere(next(iter(_valid_ideals(6, 3))), 6, 3)
    wiebe_cases = [(four_cycle, 1, 2), (four_cycle, 1, 3), (hexagon, 1, 2),
                   (chord, 1, 2), (sphere6, 1, 2)]
    for case in wiebe_spotcheck(wiebe_cases, seed=seed, p=p):
        cert = None
        if not case.consistent:
            cert = {
                "input": case.complex.to_json_dict(),
                "seed": seed,
                "step": "initial-ideal implication",
                "edge": [case.i, case.j],
                "initial": case.initial_verdict,
                "original": case.original_verdict,
            }
        report.instances.append(VerifyInstance(
            f"initial-ideal spot check ({case.i},{case.j})",
            case.consistent, cert))

    glue_pool = [four_cycle, cyclic_boundary(5, 2),
                 squeezed_sphere(next(iter(_valid_ideals(5, 3))), 5, 3)]
    for c in glue_pool:
        witness = is_sed(c)
        records = (_sed_tree_implications(c, witness, seed, p)
                   if witness is not None else [])
        bad = [r for r in records
               if r[1] and r[2] == "false"]
        ok = witness is not None and not bad
        cert = None
        if not ok:
            cert = {
                "input": c.to_json_dict(),
                "seed": seed,
                "step": "gluing implication",
                "violations": [[list(r[0]), r[2]] for r in bad],
            }
        report.instances.append(VerifyInstance(
            f"gluing on {len(c.facets)} facets", ok, cert))
    return _finish(report, started)


# -- registry ------------------------------------------------------------------


SUITES = {
    "kalai-cyclic": verify_kalai_cyclic,
    "lemma21": verify_lemma21,
    "lemma52": verify_lemma52,
    "main1": verify_main1,
    "main2": verify_main2,
    "properties-s1s4": verify_properties_s1s4,
    "slp-agreement": verify_slp_agreement,
}


def run_suite(name: str, **params) -> VerifyReport:
    if name not in SUITES:
        raise InvalidParameters(
            f"unknown suite {name!r}; choose from {sorted(SUITES)}"
        )
    return SUITES[name](**params)
