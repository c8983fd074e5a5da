"""Command line surface.

Subcommands: gen (constructors), check (predicates with certificates),
shift (the three shifting operations), verify (the suite harness).

Exit codes: 0 pass, 1 a check or suite instance failed, 2 usage or
malformed input, 3 indeterminate verdict.  All randomized commands are
deterministic given --seed and --prime, and reports embed both.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import inspect
import json
import sys

from .complexes import (
    SimplicialComplex,
    cyclic_boundary,
    is_shifted,
    simplex_boundary,
)
from .delta import build_delta, delta_outlier
from .errors import ShiftLabError
from .lefschetz import check_slp_direct, check_slp_via_shift, is_cm_via_shift
from .modp import DEFAULT_PRIME
from .moves import link_condition, shift_ij
from .randomgen import random_complex
from .sed import is_sed, verify_witness
from .shifting import exterior_shift, symmetric_shift
from .squeezed import squeezed_sphere
from .verify import SUITES, run_suite

PASS, FAIL, USAGE, INDETERMINATE = 0, 1, 2, 3


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "pretty":
        print(json.dumps(payload, indent=2))
    else:
        print(json.dumps(payload, separators=(",", ":")))


def _read_complex(source: str) -> SimplicialComplex:
    if source == "-":
        text = sys.stdin.read()
    else:
        with open(source) as fh:
            text = fh.read()
    return SimplicialComplex.from_json_dict(json.loads(text))


def _add_format(parser) -> None:
    parser.add_argument("--format", choices=("compact", "pretty"),
                        default="compact", help="JSON output style")


def _add_randomness(parser) -> None:
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=3)
    parser.add_argument("--prime", type=int, default=DEFAULT_PRIME)


# -- gen -----------------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.kind == "cyclic":
        c = cyclic_boundary(args.n, args.d)
    elif args.kind == "delta":
        c = build_delta(args.n, args.d)
    elif args.kind == "squeezed":
        if args.u is None:
            m = args.n - args.d - 1
            u_ideal = [()] + [(i,) for i in range(1, m + 1)]
        else:
            u_ideal = [tuple(u) for u in json.loads(args.u)]
        c = squeezed_sphere(u_ideal, args.n, args.d)
    elif args.kind == "simplex":
        c = simplex_boundary(range(1, args.k + 2))
    else:
        c = random_complex(args.n, args.dimension, args.density, args.seed)
    payload = c.to_json_dict()
    if args.kind == "random":
        payload["seed"] = args.seed
    _emit(payload, args.format)
    return PASS


# -- check ---------------------------------------------------------------------


def cmd_check(args) -> int:
    c = _read_complex(args.source)
    kind = args.kind
    payload = {"check": kind}
    code = PASS

    if kind == "sed":
        witness = is_sed(c)
        if witness is None:
            payload["verdict"] = False
            code = FAIL
        else:
            ok, reason = verify_witness(c, witness)
            payload["verdict"] = ok
            payload["witness"] = witness.to_json_dict()
            if not ok:
                payload["reason"] = reason
                code = FAIL
    elif kind == "link-condition":
        ok, cert = link_condition(c, args.i, args.j)
        payload["verdict"] = ok
        payload["certificate"] = cert
        code = PASS if ok else FAIL
    elif kind == "shifted":
        n = args.n if args.n else max(c.vertices, default=0)
        ok = is_shifted(c, n) if n else True
        payload["verdict"] = ok
        payload["n"] = n
        code = PASS if ok else FAIL
    elif kind == "pure":
        ok = c.is_pure
        payload["verdict"] = ok
        code = PASS if ok else FAIL
    elif kind == "cm":
        ok = is_cm_via_shift(c, args.mode, seed=args.seed,
                             trials=args.trials, p=args.prime)
        payload.update(verdict=ok, mode=args.mode, seed=args.seed,
                       prime=args.prime)
        code = PASS if ok else FAIL
    elif kind == "slp":
        if args.method == "direct":
            res = check_slp_direct(c, seed=args.seed, p=args.prime)
        else:
            res = check_slp_via_shift(c, seed=args.seed, trials=args.trials,
                                      p=args.prime)
        payload.update(verdict=res.verdict, reason=res.reason,
                       method=args.method, seed=args.seed, prime=args.prime)
        code = {"true": PASS, "false": FAIL}.get(res.verdict, INDETERMINATE)
    else:  # delta-containment
        n = args.n if args.n else max(c.vertices, default=0)
        d = args.d if args.d else c.dim + 1
        outlier = delta_outlier(c, n, d)
        payload.update(verdict=outlier is None, n=n, d=d)
        if outlier is not None:
            payload["certificate"] = list(outlier)
            code = FAIL

    _emit(payload, args.format)
    return code


# -- shift ---------------------------------------------------------------------


def cmd_shift(args) -> int:
    c = _read_complex(args.source)
    if args.mode == "elementary":
        if args.i is None or args.j is None:
            raise ShiftLabError("elementary mode needs --i and --j")
        shifted = shift_ij(c, args.i, args.j)
        _emit({"mode": "elementary", "i": args.i, "j": args.j,
               "shifted": shifted.to_json_dict()}, args.format)
        return PASS
    run = exterior_shift if args.mode == "exterior" else symmetric_shift
    report = run(c, ambient=args.ambient, seed=args.seed, trials=args.trials,
                 p=args.prime, exact=args.exact)
    _emit(report.to_json_dict(), args.format)
    return PASS


# -- verify --------------------------------------------------------------------


def _suite_kwargs(name: str, args) -> dict:
    candidates = {
        "max_n": args.max_n,
        "n": args.n,
        "d": args.d,
        "cases": args.cases,
        "cm_cases": args.cm_cases,
        "seed": args.seed,
        "trials": args.trials,
        "p": args.prime,
    }
    accepted = inspect.signature(SUITES[name]).parameters
    return {k: v for k, v in candidates.items()
            if k in accepted and v is not None}


def cmd_verify(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    if len(names) > 1 and args.workers > 1:
        with concurrent.futures.ProcessPoolExecutor(args.workers) as pool:
            futures = {name: pool.submit(run_suite, name,
                                         **_suite_kwargs(name, args))
                       for name in names}
            reports = [futures[name].result() for name in names]
    else:
        reports = [run_suite(name, **_suite_kwargs(name, args))
                   for name in names]
    payload = {"reports": [r.to_json_dict() for r in reports]}
    if not args.full:
        for rep in payload["reports"]:
            rep["results"] = [inst for inst in rep["results"]
                              if not inst["passed"]]
    _emit(payload, args.format)
    return PASS if all(r.passed for r in reports) else FAIL


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="shift-lab",
        description="Algebraic and combinatorial shifting toolbox",
    )
    sub = top.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="construct a complex and print it")
    gsub = gen.add_subparsers(dest="kind", required=True)
    for kind in ("cyclic", "delta"):
        gp = gsub.add_parser(kind)
        gp.add_argument("--n", type=int, required=True)
        gp.add_argument("--d", type=int, required=True)
        _add_format(gp)
    gp = gsub.add_parser("squeezed")
    gp.add_argument("--n", type=int, required=True)
    gp.add_argument("--d", type=int, required=True)
    gp.add_argument("--u", help="order ideal as a JSON list of index lists; "
                               "defaults to the smallest valid ideal")
    _add_format(gp)
    gp = gsub.add_parser("simplex")
    gp.add_argument("--k", type=int, required=True,
                    help="boundary of the k-simplex, on k+1 vertices")
    _add_format(gp)
    gp = gsub.add_parser("random")
    gp.add_argument("--n", type=int, required=True)
    gp.add_argument("--dimension", type=int, required=True)
    gp.add_argument("--density", type=float, required=True)
    gp.add_argument("--seed", type=int, default=0)
    _add_format(gp)
    gen.set_defaults(func=cmd_gen)

    check = sub.add_parser("check", help="run a predicate on a complex")
    check.add_argument("kind", choices=("sed", "link-condition", "shifted",
                                        "pure", "cm", "slp",
                                        "delta-containment"))
    check.add_argument("source", nargs="?", default="-",
                       help="complex JSON file, or - for stdin")
    check.add_argument("--i", type=int)
    check.add_argument("--j", type=int)
    check.add_argument("--n", type=int)
    check.add_argument("--d", type=int)
    check.add_argument("--mode", choices=("exterior", "symmetric"),
                       default="exterior", help="shift used by the cm check")
    check.add_argument("--method", choices=("direct", "via-shift"),
                       default="direct", help="route used by the slp check")
    _add_randomness(check)
    _add_format(check)
    check.set_defaults(func=cmd_check)

    shift = sub.add_parser("shift", help="shift a complex")
    shift.add_argument("source", nargs="?", default="-")
    shift.add_argument("--mode", choices=("exterior", "symmetric",
                                          "elementary"), default="exterior")
    shift.add_argument("--i", type=int)
    shift.add_argument("--j", type=int)
    shift.add_argument("--ambient", type=int)
    shift.add_argument("--exact", action="store_true",
                       help="use exact rational arithmetic in the kernels")
    _add_randomness(shift)
    _add_format(shift)
    shift.set_defaults(func=cmd_shift)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=sorted(SUITES) + ["all"])
    verify.add_argument("--max-n", dest="max_n", type=int)
    verify.add_argument("--n", type=int)
    verify.add_argument("--d", type=int)
    verify.add_argument("--cases", type=int)
    verify.add_argument("--cm-cases", dest="cm_cases", type=int)
    verify.add_argument("--workers", type=int, default=1,
                        help="worker processes when running several suites")
    verify.add_argument("--full", action="store_true",
                        help="include passing instances in the report")
    _add_randomness(verify)
    _add_format(verify)
    verify.set_defaults(func=cmd_verify)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ShiftLabError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return USAGE
    except (json.JSONDecodeError, OSError) as exc:
        print(json.dumps({"error": f"bad input: {exc}"}), file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
