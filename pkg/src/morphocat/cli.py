"""Command-line interface.

Exit codes: 0 ok / property holds, 1 property fails, 2 bad input,
3 capability limit (too large to enumerate, no closed form, no atoms).
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Sequence

from .dot import to_dot
from .errors import CapabilityError, InputError, MorphoError
from .io import (
    dumps,
    ground_from_json,
    load_json,
    model_from_json,
    proof_from_json,
    se_from_json,
    subobject_from_json,
)
from .laws import LAWS, Exhaustive, Sampled, check_law, random_subobject
from .logic.axioms import PROFILES, validate_axiom_suite
from .logic.formula import parse_formula
from .logic.proofs import BUNDLED, check_derivation
from .logic.semantics import evaluate, satisfies
from .morphology import closing, compare_methods, dilate, erode, erode_paper_algorithm, opening
from .structures import dilate_closed_form, erode_closed_form, make_lattice

OK, FAILS, BAD_INPUT, CAPABILITY = 0, 1, 2, 3


def _emit(obj, path: str | None) -> None:
    text = dumps(obj)
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _setup(args):
    lat = make_lattice(ground_from_json(load_json(args.ground)), args.forget)
    b = se_from_json(lat, load_json(args.se))
    return lat, b


# ---------------------------------------------------------------- morph


def _operators(method: str):
    if method == "generic":
        return erode, dilate
    if method == "fast":
        return erode_closed_form, dilate_closed_form
    if method == "paper-algorithm":
        return erode_paper_algorithm, dilate
    raise InputError(f"unknown method {method!r}")


def cmd_morph(args) -> int:
    lat, b = _setup(args)
    d = subobject_from_json(lat, load_json(args.object))
    ero, dil = _operators(args.method)
    if args.op == "erode":
        r = ero(b, d)
    elif args.op == "dilate":
        r = dil(b, d)
    elif args.op == "open":
        r = dil(b, ero(b, d)) if args.method != "generic" else opening(b, d)
    else:
        r = ero(b, dil(b, d)) if args.method != "generic" else closing(b, d)
    _emit(r.payload(), args.out)
    if args.dot:
        baseline = subobject_from_json(lat, load_json(args.diff)) if args.diff else None
        with open(args.dot, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(to_dot(r, baseline))
    return OK


# ---------------------------------------------------------------- laws


def cmd_laws(args) -> int:
    _, b = _setup(args)
    sampler = Sampled(args.samples, args.seed) if args.samples else Exhaustive()
    names = list(LAWS) if args.law == "all" else [args.law]
    reports = [check_law(b, name, sampler) for name in names]
    _emit([r.to_json() for r in reports], args.report)
    return FAILS if any(r.holds is False for r in reports) else OK


# ---------------------------------------------------------------- diverge


def cmd_diverge(args) -> int:
    lat, b = _setup(args)
    if args.object:
        objects = [subobject_from_json(lat, load_json(args.object))]
    elif args.samples:
        rng = random.Random(args.seed)
        objects = [random_subobject(lat, rng) for _ in range(args.samples)]
    else:
        objects = list(lat.enumerate_subobjects())
    ops = ["erode", "dilate"] if args.op == "both" else [args.op]
    comps = [compare_methods(b, d, op) for d in objects for op in ops]
    shown = comps if args.all else [c for c in comps if not c.agree]
    _emit(
        {"compared": len(comps), "divergent": sum(not c.agree for c in comps), "cases": [c.to_json() for c in shown]},
        args.out,
    )
    return OK if all(c.agree for c in comps) else FAILS


# ---------------------------------------------------------------- logic


def cmd_logic(args) -> int:
    if args.action == "prove-check":
        if args.bundled:
            if args.bundled not in BUNDLED:
                raise InputError(f"unknown bundled proof {args.bundled!r}; known: {sorted(BUNDLED)}")
            proof = BUNDLED[args.bundled]()
        elif args.proof:
            proof = proof_from_json(load_json(args.proof))
        else:
            raise InputError("prove-check needs --proof or --bundled")
        res = check_derivation(proof)
        _emit(res.to_json(), args.out)
        return OK if res.ok else FAILS
    if not args.model:
        raise InputError(f"{args.action} needs --model")
    model = model_from_json(load_json(args.model))
    if args.action == "axioms":
        reports = validate_axiom_suite(model, args.profile, samples=args.samples or 500, seed=args.seed)
        _emit([r.to_json() for r in reports], args.out)
        return FAILS if any(r.holds is False for r in reports) else OK
    if not args.formula:
        raise InputError(f"{args.action} needs --formula")
    f = parse_formula(args.formula)
    if args.action == "eval":
        _emit(evaluate(model, f).payload(), args.out)
        return OK
    ok = satisfies(model, f)
    _emit({"formula": str(f), "satisfied": ok, "denotation": evaluate(model, f).payload()}, args.out)
    return OK if ok else FAILS


# ---------------------------------------------------------------- parser


def _structure_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--ground", required=True, help="ground object JSON file")
    p.add_argument("--se", required=True, help="structuring element JSON file")
    p.add_argument("--forget", default=None, help="carrier kind (element, vertex, edge, hyperedge)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="morphocat", description="Morphology on lattices of substructures.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("morph", help="erode, dilate, open or close a subobject")
    p.add_argument("op", choices=["erode", "dilate", "open", "close"])
    _structure_args(p)
    p.add_argument("--object", required=True, help="subobject JSON file")
    p.add_argument("--method", choices=["generic", "fast", "paper-algorithm"], default="generic")
    p.add_argument("--out", help="write the result here instead of stdout")
    p.add_argument("--dot", help="also write a Graphviz rendering")
    p.add_argument("--diff", help="baseline subobject for --dot styling (kept solid, removed dashed)")
    p.set_defaults(func=cmd_morph)

    p = sub.add_parser("laws", help="check algebraic laws")
    _structure_args(p)
    p.add_argument("--law", default="all", choices=["all", *LAWS])
    p.add_argument("--samples", type=int, default=0, help="random samples (default: exhaustive)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("diverge", help="compare generic, closed-form and greedy-procedure results")
    _structure_args(p)
    p.add_argument("--object", help="subobject JSON file (default: every subobject)")
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--op", choices=["erode", "dilate", "both"], default="both")
    p.add_argument("--all", action="store_true", help="list agreeing cases too")
    p.add_argument("--out")
    p.set_defaults(func=cmd_diverge)

    p = sub.add_parser("logic", help="modal logic: evaluate, check, validate axioms, check proofs")
    p.add_argument("action", choices=["eval", "check", "axioms", "prove-check"])
    p.add_argument("--model", help="model JSON file")
    p.add_argument("--formula")
    p.add_argument("--profile", default="intuitionistic-base", choices=sorted(PROFILES))
    p.add_argument("--proof", help="proof JSON file")
    p.add_argument("--bundled", help=f"check a bundled proof ({', '.join(sorted(BUNDLED))})")
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_logic)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except CapabilityError as exc:
        print(f"capability limit: {exc}", file=sys.stderr)
        return CAPABILITY
    except MorphoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
