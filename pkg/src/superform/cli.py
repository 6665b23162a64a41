"""Command-line front door: build and dump algebras, run check batteries.

Human-readable summaries go to standard output; JSON goes only to the path
given with --out, serialized with sorted keys so identical (command, seed)
pairs produce byte-identical files.  Exit status: 0 when every requested check
passes, 1 when a check fails, 2 on bad arguments.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .scalars import Sigma
from .d21.families import FAMILY_KEYS, family_build
from .d21.isos import ALL_PERMS, perm_compose, s3_scale_iso, sigma_image
from .d21.kac import kac_relation_report
from .d21.kaplansky import kaplansky_build
from .degen import analyze
from .sgrp import make_context, verify_engine, verify_group_structure, verify_presentation
from .suite import SCALES, run_suite


def _sigma_arg(text: str) -> Sigma:
    try:
        return Sigma.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _write_json(path: str, obj) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _sigma_str(sigma) -> str:
    return str(sigma) if sigma is not None else "symbolic"


def _cmd_build(args) -> int:
    sigma = None if args.symbolic else args.sigma
    alg = family_build(args.family, sigma)
    even, odd = alg.superdim
    print(f"family {args.family} at sigma={_sigma_str(sigma)}")
    print(f"  superdimension {even}|{odd}")
    print(f"  stored bracket rows: {len(alg.table.entries)}")
    if args.out:
        _write_json(args.out, alg.to_json_dict())
        print(f"  wrote {args.out}")
    return 0


def _cmd_jacobi(args) -> int:
    if args.sigma is not None and args.sigma_sum_nonzero is not None:
        print("error: give only one of --sigma / --sigma-sum-nonzero", file=sys.stderr)
        return 2
    sigma = args.sigma
    if args.sigma_sum_nonzero is not None:
        sigma = args.sigma_sum_nonzero
        if sigma[1] + sigma[2] + sigma[3] == 0:
            print("error: --sigma-sum-nonzero requires entries with nonzero sum",
                  file=sys.stderr)
            return 2
    if args.symbolic:
        sigma = None

    if args.kaplansky:
        alg = kaplansky_build(sigma)
        source = "formula-driven build"
    else:
        alg = family_build(args.family, sigma)
        source = f"family {args.family}"
    rep = alg.check_super_jacobi()
    witness = None
    if not rep.ok and rep.failure is not None:
        witness = [alg.basis[t].name for t in rep.failure]
    print(f"jacobi check, {source}, sigma={_sigma_str(sigma)}")
    if rep.ok:
        print("  all graded Jacobi identities hold exactly")
    else:
        print(f"  FAILED at triple {witness}")
    if args.out:
        _write_json(args.out, {
            "command": "jacobi",
            "family": None if args.kaplansky else args.family,
            "kaplansky": args.kaplansky,
            "sigma": _sigma_str(sigma),
            "ok": rep.ok,
            "witness": witness,
        })
    return 0 if rep.ok else 1


def _cmd_analyze(args) -> int:
    rep = analyze(args.family, args.sigma)
    jd = rep.to_json_dict()
    print(f"family {args.family} at sigma={args.sigma}: case {jd['regime']}")
    if jd["zero_positions"]:
        print(f"  vanishing entries at positions {jd['zero_positions']}")
    for name, value in sorted(jd["facts"].items()):
        print(f"  {name:32s} {'ok' if value else 'FAIL'}")
    claims = [
        {
            "name": name,
            "status": "ok" if value else "fail",
            "data": {},
        }
        for name, value in sorted(jd["facts"].items())
    ]
    if args.out:
        _write_json(args.out, {
            "family": jd["kind"],
            "sigma": jd["sigma"],
            "case": jd["regime"],
            "zero_positions": jd["zero_positions"],
            "claims": claims,
            "ok": jd["ok"],
        })
    return 0 if rep.ok else 1


def _cmd_kac_check(args) -> int:
    sigma = None if args.symbolic else args.sigma
    rep = kac_relation_report(sigma)
    jd = rep.to_json_dict()
    print(f"relation suite at sigma={_sigma_str(sigma)}")
    for name, value in sorted(jd["checks"].items()):
        print(f"  {name:32s} {'ok' if value else 'FAIL'}")
    print(f"  quartic_is_zero                  {jd['quartic_is_zero']}")
    if args.out:
        _write_json(args.out, {"command": "kac-check", **jd})
    return 0 if rep.ok else 1


def _cmd_iso_check(args) -> int:
    sigma = args.sigma if args.sigma is not None else Sigma.parse("1,1,-2")
    results = {}
    ok = True
    try:
        for perm in ALL_PERMS:
            for c in SCALES:
                m = s3_scale_iso(args.family, sigma, perm, c)
                mrep = m.verify_morphism(expect_injective=True, expect_surjective=True)
                key = f"perm={''.join(map(str, perm))},c={c}"
                results[key] = mrep.ok
                ok = ok and mrep.ok
        rng = random.Random(args.seed)
        comp_ok = True
        for _ in range(4):
            p1 = ALL_PERMS[rng.randrange(6)]
            p2 = ALL_PERMS[rng.randrange(6)]
            c1 = Fraction(rng.choice((1, 2, 3, -1)), rng.choice((1, 2)))
            c2 = Fraction(rng.choice((1, 2, -3)), rng.choice((1, 3)))
            m1 = s3_scale_iso(args.family, sigma, p1, c1)
            mid = sigma_image(sigma, p1, c1)
            m2 = s3_scale_iso(args.family, mid, p2, c2)
            direct = s3_scale_iso(args.family, sigma, perm_compose(p2, p1), c2 * c1)
            if m1.then(m2).images != direct.images:
                comp_ok = False
        results["composition_law"] = comp_ok
        ok = ok and comp_ok
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"permutation/scale twists of {args.family} at sigma={sigma}")
    for key, value in results.items():
        print(f"  {key:24s} {'ok' if value else 'FAIL'}")
    if args.out:
        _write_json(args.out, {
            "command": "iso-check",
            "family": args.family,
            "sigma": str(sigma),
            "seed": args.seed,
            "results": results,
            "ok": ok,
        })
    return 0 if ok else 1


def _cmd_group_check(args) -> int:
    try:
        pres = verify_presentation(args.family, args.sigma, q=args.q,
                                   seed=args.seed, draws=2)
        eng = verify_engine(args.family, args.sigma, q=args.q,
                            seed=args.seed + 1, triples=100, pairs=20)
        try:
            struct = verify_group_structure(args.family, args.sigma, q=args.q,
                                            seed=args.seed + 2, rounds=50)
        except ValueError:
            struct = None
        ctx = make_context(args.family, args.sigma, args.q)
        sample = ctx.rand_element(random.Random(args.seed + 3))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    ok = pres.ok and eng.ok and (struct is None or struct.ok)
    counts = pres.counts()
    print(f"group points of {args.family} at sigma={args.sigma}, q={args.q}, "
          f"seed={args.seed}")
    print(f"  relations: {counts['ok']} ok, {counts['fail']} failed, "
          f"{counts['skip']} skipped")
    for name, reason in pres.skipped:
        print(f"    skipped {name}: {reason}")
    for name in pres.failures:
        print(f"    FAILED {name}")
    for name, flag in eng.checks:
        print(f"  engine {name:24s} {'ok' if flag else 'FAIL'}")
    if struct is not None:
        for name, flag in struct.checks:
            print(f"  structure {name:21s} {'ok' if flag else 'FAIL'}")
    if args.out:
        _write_json(args.out, {
            "command": "group-check",
            "family": args.family,
            "sigma": str(args.sigma),
            "q": args.q,
            "seed": args.seed,
            "presentation": pres.to_json_dict(),
            "engine": eng.to_json_dict(),
            "structure": None if struct is None else struct.to_json_dict(),
            "sample_element": sample.to_json_dict(),
            "ok": ok,
        })
    return 0 if ok else 1


def _cmd_suite(args) -> int:
    report = run_suite(seed=args.seed)
    for crit in report.criteria:
        print(f"[{crit.index:2d}] {crit.name:24s} {'ok' if crit.ok else 'FAIL'}")
    print(f"suite: {'all criteria passed' if report.ok else 'FAILURES present'}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
        print(f"wrote {args.out}")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superform",
        description="Exact toolkit for a three-parameter family of 17-dimensional "
                    "Lie superalgebras, their degenerations, and their group points "
                    "over Grassmann algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, family=False, family_default=None, sigma=False,
                   sigma_required=False, seed=False, q=False, symbolic=False):
        if family:
            kwargs = {"choices": FAMILY_KEYS, "help": "family key"}
            if family_default is None:
                kwargs["required"] = True
            else:
                kwargs["default"] = family_default
            p.add_argument("--family", **kwargs)
        if sigma:
            p.add_argument("--sigma", type=_sigma_arg, default=None,
                           required=sigma_required,
                           help="parameter triple a/b,c/d,e/f (rationals)")
        if seed:
            p.add_argument("--seed", type=int, default=0, help="random seed")
        if q:
            p.add_argument("--q", type=int, default=4,
                           help="number of Grassmann generators")
        if symbolic:
            p.add_argument("--symbolic", action="store_true",
                           help="work with symbolic parameters")
        p.add_argument("--out", default=None, help="write a JSON report here")

    p = sub.add_parser("build", help="construct one family and dump its table")
    add_common(p, family=True, sigma=True, symbolic=True)
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("jacobi", help="check the graded Jacobi identity")
    add_common(p, family=True, family_default="g", sigma=True, symbolic=True)
    p.add_argument("--sigma-sum-nonzero", type=_sigma_arg, default=None,
                   help="off-plane parameter triple (expected to fail)")
    p.add_argument("--kaplansky", action="store_true",
                   help="use the formula-driven build instead of the tables")
    p.set_defaults(fn=_cmd_jacobi)

    p = sub.add_parser("analyze", help="certify the structure at one parameter")
    add_common(p, family=True, sigma=True, sigma_required=True)
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("kac-check", help="relation and coroot identity suite")
    add_common(p, sigma=True, symbolic=True)
    p.set_defaults(fn=_cmd_kac_check)

    p = sub.add_parser("iso-check", help="permutation/scale symmetry action")
    add_common(p, family=True, family_default="g", sigma=True, seed=True)
    p.set_defaults(fn=_cmd_iso_check)

    p = sub.add_parser("group-check", help="group points: relations and engine laws")
    add_common(p, family=True, sigma=True, sigma_required=True, seed=True, q=True)
    p.set_defaults(fn=_cmd_group_check)

    p = sub.add_parser("suite", help="run the full acceptance battery")
    add_common(p, seed=True)
    p.set_defaults(fn=_cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
