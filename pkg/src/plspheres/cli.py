"""Command-line front end.

Exit codes: 0 success, 1 suite failure / containment violation / candidate,
2 input error, 3 nothing decided (all Unknown).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions as cons
from .batch import (
    CLASSES,
    RunConfig,
    append_ledger,
    decided_keys,
    dumps,
    p42_instances,
    read_ledger,
    run_batch,
    unknown_only,
)
from .complex import ComplexError, complex_to_json, fhg_vectors, load_complex, save_complex
from .contraction import theorem_2_1_report
from .lefschetz import RATIONAL, reverify_rational, strong_lefschetz_witness
from .linalg import MERSENNE31, is_prime
from .suites import SUITES, SuiteConfig, run_suite
from .verdict import DEFAULT_BUDGET

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNKNOWN = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path: str):
    try:
        return load_complex(path)
    except (OSError, ComplexError) as exc:
        raise InputError(str(exc)) from exc


def _inputs(path: str | None, use_catalog: bool):
    if use_catalog:
        return cons.catalog()
    if path is None:
        raise InputError("give an input file, a directory, or --catalog")
    p = Path(path)
    if p.is_dir():
        files = sorted(p.glob("*.json"))
        if not files:
            raise InputError(f"no .json files in {p}")
        return [_load(str(f)) for f in files]
    return [_load(path)]


def _field(args) -> int | str:
    if getattr(args, "rational", False):
        return RATIONAL
    if not is_prime(args.field):
        raise InputError(f"--field {args.field} is not prime")
    return args.field


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


# -- gen --------------------------------------------------------------------------

def _gen(args) -> int:
    k, a = args.kind, args.params
    try:
        if k == "catalog-dir":
            out = Path(a[0])
            out.mkdir(parents=True, exist_ok=True)
            for name, c in cons.catalog():
                save_complex(c, out / f"{name}.json", name)
            return EXIT_OK
        def ints(n):
            if len(a) != n:
                raise ValueError(f"expected {n} parameter(s), got {len(a)}")
            return [int(x) for x in a]

        if k == "simplex":
            c, name = cons.simplex(*ints(1)), f"simplex_{a[0]}"
        elif k == "simplex-boundary":
            c, name = cons.simplex_boundary(*ints(1)), f"simplex_boundary_{a[0]}"
        elif k == "cross-polytope":
            c, name = cons.cross_polytope_boundary(*ints(1)), f"cross_polytope_{a[0]}"
        elif k == "polygon":
            c, name = cons.polygon(*ints(1)), f"polygon_{a[0]}"
        elif k == "cyclic":
            c, name = cons.cyclic_polytope_boundary(*ints(2)), f"cyclic_{a[0]}_{a[1]}"
        elif k == "catalog":
            c, name = cons.sphere_named(a[0]), a[0]
        elif k in ("suspension", "cone", "sd", "cone-boundary"):
            base_name, base = _load(a[0])
            fn = {
                "suspension": cons.suspension,
                "cone": cons.cone,
                "sd": cons.barycentric_subdivision,
                "cone-boundary": cons.cone_over_boundary_union,
            }[k]
            c, name = fn(base), f"{k}_{base_name}"
        elif k == "join":
            (na, ca), (nb, cb) = _load(a[0]), _load(a[1])
            c, name = cons.join(ca, cb), f"join_{na}_{nb}"
        elif k == "random-subdivision":
            base_name, base = _load(a[0])
            steps = int(a[1])
            c, name = cons.random_subdivided_sphere(base, steps, args.seed), f"{base_name}_sub{steps}_s{args.seed}"
        else:
            raise InputError(f"unknown generator {k!r}")
    except (IndexError, ValueError, KeyError) as exc:
        raise InputError(f"bad parameters for {k}: {exc}") from exc
    text = json.dumps(complex_to_json(c, name))
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return EXIT_OK


def _vectors(args) -> int:
    name, c = _load(args.input)
    try:
        v = fhg_vectors(c)
    except ComplexError as exc:
        raise InputError(str(exc)) from exc
    _emit({"name": name} | v.as_dict())
    return EXIT_OK


def _run_batch(args, kind: str, instances, classes) -> int:
    cfg = RunConfig(args.budget, args.seed, _field(args), args.trials, getattr(args, "cap", 20000))
    skip = decided_keys(read_ledger(args.ledger)) if args.ledger else None
    status = EXIT_OK
    seen, all_unknown = 0, True
    candidates = 0
    for name, recs in run_batch(kind, instances, cfg, args.jobs, skip, classes):
        if recs is None:
            print(f"# {name}: already decided in ledger, skipped", file=sys.stderr)
            all_unknown = False
            continue
        seen += 1
        for r in recs:
            print(dumps(r))
            if r["verdict"] == "violation":
                status = EXIT_FAIL
            if r["verdict"] == "CANDIDATE":
                candidates += 1
                status = EXIT_FAIL
        if not unknown_only(recs):
            all_unknown = False
        if args.ledger:
            append_ledger(args.ledger, recs)
    if kind == "p42":
        print(f"# {seen} instances searched, {candidates} candidates", file=sys.stderr)
    if status == EXIT_OK and seen and all_unknown:
        return EXIT_UNKNOWN
    return status


def _classify(args) -> int:
    return _run_batch(args, "classify", _inputs(args.input, args.catalog), CLASSES)


def _search_p42(args) -> int:
    return _run_batch(args, "p42", p42_instances(args.random, args.seed), ("p42",))


def _contract(args) -> int:
    _, c = _load(args.input)
    try:
        rep = theorem_2_1_report(c, args.u, args.v, args.budget)
    except ComplexError as exc:
        raise InputError(str(exc)) from exc
    _emit(rep.to_json())
    return EXIT_OK if rep.decided else EXIT_UNKNOWN


def _lefschetz(args) -> int:
    _, c = _load(args.input)
    field = _field(args)
    try:
        w = strong_lefschetz_witness(c, field, args.trials, args.seed, args.cap)
    except (ComplexError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    if w is None:
        _emit({"witness": None, "trials": args.trials, "seed": args.seed})
        return EXIT_UNKNOWN
    out = w.to_json()
    if args.verify and field != RATIONAL:
        ok, dims, ranks = reverify_rational(c, w)
        out["rational_check"] = {"agrees": ok, "dims": list(dims), "ranks": list(ranks)}
        if not ok:
            _emit(out)
            return EXIT_FAIL
    _emit(out)
    return EXIT_OK


def _suite(args) -> int:
    names = list(SUITES) if args.name == "all" else [args.name]
    if any(n not in SUITES for n in names):
        raise InputError(f"unknown suite {args.name!r}; choose from {', '.join(SUITES)}, all")
    cfg = SuiteConfig(budget=args.budget, field=_field(args), trials=args.trials, seed=args.seed)
    ok = True
    for n in names:
        rep = run_suite(n, cfg)
        for c in rep.checks:
            print(f"{'PASS' if c.passed else 'FAIL'} {n}: {c.name} ({c.detail})")
        ok &= rep.passed
    return EXIT_OK if ok else EXIT_FAIL


# -- parser ---------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, field: bool = False) -> None:
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node expansions per decision")
    p.add_argument("--seed", type=int, default=0)
    if field:
        g = p.add_mutually_exclusive_group()
        g.add_argument("--field", type=int, default=MERSENNE31, help="prime modulus for Lefschetz search")
        g.add_argument("--rational", action="store_true", help="search over Q instead of GF(p)")
        p.add_argument("--trials", type=int, default=5)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="plspheres", description="Decomposability classes of simplicial spheres.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gen", help="write a generated complex as JSON")
    p.add_argument(
        "kind",
        help="simplex D | simplex-boundary D | cross-polytope D | polygon N | cyclic N D | catalog NAME | "
        "suspension F | cone F | sd F | cone-boundary F | join F G | random-subdivision F STEPS | catalog-dir DIR",
    )
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--out")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_gen)

    p = sub.add_parser("vectors", help="f-, h- and g-vectors")
    p.add_argument("input")
    p.set_defaults(func=_vectors)

    for name, func, helptext in (
        ("classify", _classify, "decide every class and check containments"),
        ("search-p42", _search_p42, "hunt for vertex-decomposable spheres that are not strongly edge-decomposable"),
    ):
        p = sub.add_parser(name, help=helptext)
        if name == "classify":
            p.add_argument("input", nargs="?", help="complex file or directory of them")
            p.add_argument("--catalog", action="store_true", help="use the built-in catalog")
        else:
            p.add_argument("--random", type=int, default=20, help="number of random instances")
        _common(p, field=True)
        p.add_argument("--cap", type=int, default=20000)
        p.add_argument("--ledger")
        p.add_argument("--jobs", type=int, default=1)
        p.set_defaults(func=func)

    p = sub.add_parser("contract", help="edge contraction report (u removed, v kept)")
    p.add_argument("input")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    _common(p)
    p.set_defaults(func=_contract)

    p = sub.add_parser("lefschetz", help="search for a strong Lefschetz witness")
    p.add_argument("input")
    _common(p, field=True)
    p.add_argument("--cap", type=int, default=20000)
    p.add_argument("--verify", action="store_true", help="re-check the witness over Q")
    p.set_defaults(func=_lefschetz)

    p = sub.add_parser("suite", help="run a property suite")
    p.add_argument("name", help=f"{' | '.join(SUITES)} | all")
    _common(p, field=True)
    p.set_defaults(func=_suite)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
