"""Command-line driver.

Subcommands: ``nf`` (normal form), ``coprod``, ``pair``, ``coideal
check|closure|bound``, ``fodc build``, ``verify``, ``filter-5-2`` and
``cohomology``.  Exit codes: 0 all checks passed, 1 verification failure,
2 bad input or schema violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cohomology, coideal, fodc, oq, structures, uq
from .exprs import (ParseError, format_o, format_scalar, format_tensor_u,
                    format_u, parse, parse_o, parse_u)
from .fixtures import FixtureError, FixtureSet, load_u_basis
from .oq import OElement
from .scalars import Scalar, ScalarError
from .uq import UElement
from .verify import (ALL_CHECKS, run_filter, verify_calculus,
                     isomorphism_class_span)


class InputError(ValueError):
    pass


def _fixtures(args):
    return FixtureSet(args.fixtures)


def _coideal_input(args, fixtures):
    """A fixture name, a family name, or ';'-separated expressions."""
    text = args.input
    if ";" in text:
        return [parse_u(part.strip()) for part in text.split(";")
                if part.strip()]
    try:
        rec = fixtures.calculus(text)
        return load_u_basis(rec["coideal_basis"])
    except FixtureError:
        pass
    try:
        return fixtures.family_basis(text)
    except FixtureError:
        pass
    return [parse_u(text)]


def cmd_nf(args, out):
    v = parse(args.expr)
    if isinstance(v, UElement):
        out["result"] = format_u(v)
    elif isinstance(v, OElement):
        out["result"] = format_o(v)
    else:
        out["result"] = format_scalar(v)
    return 0


def cmd_coprod(args, out):
    v = parse_u(args.expr)
    out["result"] = format_tensor_u(uq.coproduct(v))
    return 0


def cmd_pair(args, out):
    X = parse_u(args.uexpr)
    x = parse_o(args.oexpr)
    out["result"] = format_scalar(oq.pair(X, x))
    return 0


def cmd_coideal(args, out):
    fixtures = _fixtures(args)
    gens = _coideal_input(args, fixtures)
    if args.action == "bound":
        total = 0
        for g in gens:
            total += coideal.dim_lower_bound(g)
        out["result"] = total
        return 0
    V = coideal.closure(gens)
    if args.action == "closure":
        out["dim"] = V.dim
        out["basis"] = [format_u(b) for b in V.echelon_basis()]
        return 0
    ok_coideal = coideal.is_right_coideal(V)
    ok_unital = coideal.is_unital(V)
    out["dim"] = V.dim
    out["right_coideal"] = ok_coideal
    out["unital"] = ok_unital
    return 0 if (ok_coideal and ok_unital) else 1


def cmd_fodc_build(args, out):
    fixtures = _fixtures(args)
    rec = fixtures.calculus(args.fixture)
    from .verify import build_model
    model = build_model(rec, degree_cap=args.degree_cap)
    names = "HXY"
    out["name"] = rec["name"]
    out["tangent"] = {names[k]: format_u(z)
                      for k, z in enumerate(model.tangent.basis)}
    out["f_matrix"] = [[format_u(e) for e in row] for row in model.f]
    out["universal_two_form_dim"] = model.universal_dim
    out["exterior_dims"] = list(model.exterior.dims())
    wedge_names = ["HX", "HY", "XY"]
    out["d_omega"] = {names[k]: {wedge_names[b]: format_scalar(c)
                                 for b, c in enumerate(model.d_omega[k])
                                 if not c.is_zero()}
                      for k in range(3)}
    out["sym2"] = [{f"{names[i]}{names[j]}": format_scalar(c)
                    for (i, j), c in sorted(v.items())}
                   for v in model.sym2]
    out["right_ideal_check"] = {k: v for k, v in
                                model.right_ideal_report.items()
                                if k != "failures"}
    return 0


def cmd_verify(args, out):
    fixtures = _fixtures(args)
    names = (fixtures.calculus_names() if args.fixture == "all"
             else [fixtures.calculus(args.fixture)["name"]])
    checks = args.check.split(",") if args.check else None
    if checks:
        for c in checks:
            if c not in ALL_CHECKS:
                raise InputError(f"unknown check {c!r}")
    jobs = max(1, args.jobs)
    results = {}
    if jobs > 1 and len(names) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futs = {name: pool.submit(_verify_worker, args.fixtures, name,
                                      checks, args.two_lambda_max,
                                      args.degree_cap)
                    for name in names}
            for name in names:
                results[name] = futs[name].result()
    else:
        for name in names:
            results[name] = _verify_worker(args.fixtures, name, checks,
                                           args.two_lambda_max,
                                           args.degree_cap)
    all_ok = True
    out["calculi"] = {}
    for name in names:
        rows = results[name]
        out["calculi"][name] = rows
        if not all(r["ok"] for r in rows):
            all_ok = False
    out["ok"] = all_ok
    return 0 if all_ok else 1


def _verify_worker(path, name, checks, two_lambda_max, degree_cap):
    fixtures = FixtureSet(path)
    rec = fixtures.calculus(name)
    rows = verify_calculus(rec, checks, two_lambda_max, degree_cap)
    return [r.as_dict() for r in rows]


def cmd_filter(args, out):
    fixtures = _fixtures(args)
    results, survivors = run_filter(fixtures)
    out["results"] = results
    surviving_items = sorted(r["item"] for r in survivors
                             if r["kind"] == "item")
    out["survivors"] = surviving_items
    out["expected_items"] = [r["item"] for r in results
                             if r["kind"] == "item"]
    out["hopf_selected"] = sorted(
        r["item"] for r in survivors
        if r["kind"] == "item" and r["hopf_invariant"])
    mismatches = [r for r in results if r["kind"] == "item"
                  and (not r["survives"]
                       or r["two_form_dim"] != r["expected_two_form_dim"]
                       or r["hopf_invariant"] != r["expected_hopf"])]
    stray = [r for r in survivors if r["kind"] == "excluded"]
    out["ok"] = not mismatches and not stray
    return 0 if out["ok"] else 1


def cmd_cohomology(args, out):
    fixtures = _fixtures(args)
    rec = fixtures.calculus(args.fixture)
    from .verify import build_model
    model = build_model(rec, degree_cap=args.degree_cap)
    rows = []
    ok = True
    for tl in range(args.two_lambda_max + 1):
        dims = cohomology.cohomology_dims(model, tl)
        expect = (1, 0, 0, 1) if tl == 0 else (0, 0, 0, 0)
        rows.append({"calculus": rec["name"], "two_lambda": tl,
                     "h0": dims[0], "h1": dims[1], "h2": dims[2],
                     "h3": dims[3]})
        if dims != expect:
            ok = False
    out["table"] = rows
    out["ok"] = ok
    return 0 if ok else 1


def _print_text(out, command):
    if command == "verify":
        for name, rows in out.get("calculi", {}).items():
            for r in rows:
                mark = "pass" if r["ok"] else "FAIL"
                detail = f"  {r['detail']}" if r["detail"] else ""
                print(f"{name:10} {r['check']:20} {mark}{detail}")
        print("verify:", "ok" if out.get("ok") else "FAILED")
    elif command == "filter-5-2":
        for r in out["results"]:
            if r["kind"] == "item":
                print(f"item {r['item']:3} family {r['family']:7} "
                      f"li={r['li']} two-form-dim={r['two_form_dim']} "
                      f"hopf={r['hopf_invariant']} "
                      f"{'survives' if r['survives'] else 'rejected'}")
            else:
                print(f"excluded sample {r['family']:7} li={r['li']} "
                      f"two-form-dim={r['two_form_dim']} "
                      f"{'SURVIVES' if r['survives'] else 'rejected'}")
        print("survivors:", out["survivors"])
        print("invariance-selected:", out["hopf_selected"])
    elif command == "cohomology":
        for r in out["table"]:
            print(f"{r['calculus']:10} 2l={r['two_lambda']} "
                  f"({r['h0']}, {r['h1']}, {r['h2']}, {r['h3']})")
    else:
        for k, v in out.items():
            if k == "result":
                print(v)
            else:
                print(f"{k}: {v}")


def _common_flags(parser, suppress=False):
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument("--json", action="store_true",
                        help="JSON output",
                        **({"default": argparse.SUPPRESS} if suppress else {}))
    parser.add_argument("--fixtures", metavar="PATH",
                        help="directory with fixture JSON files",
                        **(kw if suppress else {"default": None}))
    parser.add_argument("--jobs", type=int, metavar="N",
                        **(kw if suppress else {"default": 1}))
    parser.add_argument("--degree-cap", type=int, metavar="D",
                        **(kw if suppress else {"default": 2}))
    parser.add_argument("--two-lambda-max", type=int, metavar="N",
                        **(kw if suppress else {"default": 5}))


def main(argv=None):
    ap = argparse.ArgumentParser(prog="slq2calc")
    _common_flags(ap)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        p = sub.add_parser(name, **kw)
        _common_flags(p, suppress=True)
        return p

    p = add("nf", help="normal form of an expression")
    p.add_argument("expr")
    p = add("coprod", help="coproduct of a dual-algebra element")
    p.add_argument("expr")
    p = add("pair", help="dual pairing")
    p.add_argument("uexpr")
    p.add_argument("oexpr")
    p = add("coideal", help="right-coideal operations")
    p.add_argument("action", choices=["check", "closure", "bound"])
    p.add_argument("input")
    p = add("fodc", help="calculus construction")
    p.add_argument("action", choices=["build"])
    p.add_argument("fixture")
    p = add("verify", help="run the verification battery")
    p.add_argument("fixture")
    p.add_argument("--check", default=None,
                   help="comma-separated subset of checks")
    p = add("filter-5-2", help="run the selection filter")
    p = add("cohomology", help="cohomology dimension table")
    p.add_argument("fixture")

    args = ap.parse_args(argv)
    out = {}
    try:
        if args.command == "nf":
            code = cmd_nf(args, out)
        elif args.command == "coprod":
            code = cmd_coprod(args, out)
        elif args.command == "pair":
            code = cmd_pair(args, out)
        elif args.command == "coideal":
            code = cmd_coideal(args, out)
        elif args.command == "fodc":
            code = cmd_fodc_build(args, out)
        elif args.command == "verify":
            code = cmd_verify(args, out)
        elif args.command == "filter-5-2":
            code = cmd_filter(args, out)
        elif args.command == "cohomology":
            code = cmd_cohomology(args, out)
        else:  # pragma: no cover
            raise InputError(f"unknown command {args.command}")
    except (ParseError, FixtureError, InputError, ScalarError,
            coideal.ClosureCapExceeded, FileNotFoundError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(out, indent=1, sort_keys=True))
    else:
        _print_text(out, args.command)
    return code


if __name__ == "__main__":
    sys.exit(main())
