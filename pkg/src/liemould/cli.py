"""Command-line front end.

Exit codes: 0 verified / success, 1 verified-negative, 2 input error,
3 internal invariant breach.  All output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance, fixtures, moulds, relations
from .exprs import ParseError, eval_bracket_expr, parse_bracket_expr
from .serialize import (
    commpoly_from_json,
    commpoly_to_json,
    frac_from_str,
    ncpoly_from_json,
    ncpoly_to_json,
)


class InputError(Exception):
    pass


def _emit(payload) -> None:
    json.dump(payload, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _cmd_eval(args) -> int:
    expr = parse_bracket_expr(args.expr)
    family = "eps" if args.family == "eps" else "eps-tilde"
    if args.on not in ("a", "b", "c"):
        raise InputError("--on must be a, b or c")
    if args.on == "c" and family == "eps":
        raise InputError("the eps family lives on {a,b}; use --family eps-tilde for c")
    derivation = eval_bracket_expr(expr, family)
    _emit(ncpoly_to_json(derivation.apply(args.on)))
    return 0


def _load_period_vector(args) -> relations.PeriodVector:
    if args.fixture:
        if args.fixture not in fixtures.FIXTURES:
            raise InputError(f"unknown fixture {args.fixture!r}")
        return fixtures.FIXTURES[args.fixture]
    if not args.periods:
        raise InputError("pass --fixture or --periods")
    if args.d is None or args.weight is None:
        raise InputError("--periods needs --d and --weight")
    with open(args.periods) as handle:
        data = json.load(handle)
    coefficients = {int(p): frac_from_str(v) for p, v in data.items()}
    return relations.PeriodVector(
        label=args.periods, d=args.d, weight=args.weight, coefficients=coefficients
    )


def _cmd_check_relation(args) -> int:
    pv = _load_period_vector(args)
    if pv.d != 3:
        raise InputError(
            f"membership is implemented for d = 3 only; the d = {pv.d} relation "
            "ships as a fixture without a span test"
        )
    expr = relations.pollack_combination(pv)
    derivation = eval_bracket_expr(expr, "eps")
    certificate = relations.theta3_membership_depth3(derivation)
    if certificate is None:
        _emit({"member": False, "label": pv.label, "weight": pv.weight})
        return 1
    if not relations.verify_certificate(certificate):
        raise AssertionError("emitted certificate failed re-verification")
    _emit({"member": True, "certificate": certificate.to_json()})
    return 0


def _cmd_lift(args) -> int:
    if args.fixture:
        if args.fixture not in fixtures.FIXTURES:
            raise InputError(f"unknown fixture {args.fixture!r}")
        pv = fixtures.FIXTURES[args.fixture]
        if pv.d != 3:
            raise InputError("lifting is implemented for the depth-3 pipeline only")
        expr = relations.pollack_combination(pv)
    elif args.expr:
        expr = parse_bracket_expr(args.expr)
    else:
        raise InputError("pass --fixture or --expr")
    try:
        certificate = relations.lift_to_depth3(expr)
    except relations.LiftError as error:
        _emit({"lifted": False, "stage": error.stage, "message": str(error)})
        return 1
    if not relations.verify_certificate(certificate):
        raise AssertionError("emitted certificate failed re-verification")
    _emit({"lifted": True, "certificate": certificate.to_json()})
    return 0


def _cmd_dims(args) -> int:
    if args.start % 2 == 0 or args.stop % 2 == 0:
        raise InputError("the dimension table is indexed by odd weights")
    table = relations.dimension_table(args.start, args.stop)
    if args.format == "json":
        _emit([{"n": n, "computed": c, "formula": f} for n, c, f in table])
    else:
        for n, computed, formula in table:
            sys.stdout.write(f"{n}\t{computed}\t{formula}\n")
    return 0 if all(c == f for _, c, f in table) else 1


def _cmd_mould(args) -> int:
    with open(args.input) as handle:
        data = json.load(handle)
    if args.op == "mi":
        if not isinstance(data, list):
            raise InputError("mi expects the word-polynomial JSON form (an array)")
        poly = ncpoly_from_json(data)
        image = moulds.mi(poly, args.depth)
        _emit(commpoly_to_json(image))
        return 0
    if not isinstance(data, dict) or "arity" not in data:
        raise InputError(f"{args.op} expects the commutative-polynomial JSON form")
    poly = commpoly_from_json(data)
    verdict = moulds.is_alternal(poly) if args.op == "alternal" else moulds.is_prealternal(poly)
    _emit({args.op: verdict})
    return 0 if verdict else 1


def _cmd_appendix_check(args) -> int:
    indices = [i for i in range(4, args.max_index + 1) if i % 2 == 0]
    if not indices:
        raise InputError("--max-index must be at least 4")
    import itertools

    q_bad = [
        (j, k)
        for j, k in itertools.product(indices, repeat=2)
        if moulds.hat_epsilon(j, moulds.appendix_P(k)) != moulds.appendix_Q(j, k)
    ]
    r_bad = [
        (i, j, k)
        for i, j, k in itertools.product(indices, repeat=3)
        if moulds.hat_epsilon(i, moulds.appendix_Q(j, k)) != moulds.appendix_R(i, j, k)
    ]
    s_bad = [
        (i, j, k)
        for i, j, k in itertools.product(indices, repeat=3)
        if not moulds.appendix_S_identity_holds(i, j, k)
    ]
    ok = not (q_bad or r_bad or s_bad)
    _emit(
        {
            "indices": indices,
            "closed_forms_match": not (q_bad or r_bad),
            "identity_holds": not s_bad,
            "failures": {"q": q_bad, "r": r_bad, "s": s_bad},
        }
    )
    return 0 if ok else 1


def _cmd_acceptance(args) -> int:
    only = args.only.split(",") if args.only else None
    report = acceptance.run_acceptance_suite(only=only, seed=args.seed)
    for entry in report["criteria"]:
        status = "PASS" if entry["passed"] else "FAIL"
        sys.stderr.write(f"{entry['id']} {status}\n")
    _emit(report)
    return 0 if report["all_passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liemould",
        description="exact derivation-algebra and mould-calculus engine",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a bracket expression on a generator")
    p.add_argument("--expr", required=True)
    p.add_argument("--on", default="a", choices=("a", "b", "c"))
    p.add_argument("--family", default="eps", choices=("eps", "eps-tilde"))
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("check-relation", help="depth-3 span membership of a period relation")
    p.add_argument("--fixture")
    p.add_argument("--periods", help="JSON file mapping p to the rational period")
    p.add_argument("--d", type=int)
    p.add_argument("--weight", type=int)
    p.set_defaults(func=_cmd_check_relation)

    p = sub.add_parser("lift", help="run the depth-3 lifting pipeline")
    p.add_argument("--fixture")
    p.add_argument("--expr")
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("dims", help="depth-3 alternality dimension table")
    p.add_argument("--from", dest="start", type=int, default=9)
    p.add_argument("--to", dest="stop", type=int, default=19)
    p.add_argument("--format", default="tsv", choices=("tsv", "json"))
    p.set_defaults(func=_cmd_dims)

    p = sub.add_parser("mould", help="commutative-variable translation and symmetry checks")
    p.add_argument("--op", required=True, choices=("mi", "alternal", "prealternal"))
    p.add_argument("--input", required=True)
    p.add_argument("--depth", type=int, default=None)
    p.set_defaults(func=_cmd_mould)

    p = sub.add_parser("appendix-check", help="closed-form oracle suite")
    p.add_argument("--max-index", type=int, default=8)
    p.set_defaults(func=_cmd_appendix_check)

    p = sub.add_parser("acceptance", help="run the acceptance criteria")
    p.add_argument("--only", help="comma-separated criterion ids, e.g. A6,A7")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_acceptance)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ParseError, ValueError, OSError) as error:
        sys.stderr.write(f"error: {error}\n")
        return 2
    except Exception as error:  # anything else is an invariant breach
        sys.stderr.write(f"internal invariant breach: {error}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
