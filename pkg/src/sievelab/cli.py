"""Command line entry point: sievelab verify | enumerate | census | roots."""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import dissect, dyck, harness, posets, raney, roots
from .errors import DomainError, UnsupportedParametersError

SLOW_TYPES = {"E7", "E8"}


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", "-o", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sievelab", description="Exact sieving checks for polygon, path and cluster families.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    vsub = verify.add_subparsers(dest="suite", required=True)

    p = vsub.add_parser("type-a", help="k-angulations against Cat_{sm+1,m}")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--normalize", action="store_true", help="multiply by (qt)^N before evaluating")
    p.add_argument("--slow", action="store_true", help="allow n > 11")
    _add_format(p)

    p = vsub.add_parser("cluster", help="cluster complex census and reflection row")
    p.add_argument("--type", required=True, help="A..F, E6..E8 or I2")
    p.add_argument("--rank", type=int)
    p.add_argument("--slow", action="store_true", help="allow E7 and E8")
    _add_format(p)

    p = vsub.add_parser("raney", help="Raney recurrences, convolution and coral counts")
    p.add_argument("--pmax", type=int, default=6)
    p.add_argument("--rmax", type=int, default=6)
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--corrected", action="store_true", help="use R_{p,1}(i) in the second recurrence")
    _add_format(p)

    p = vsub.add_parser("dyck", help="signed Dyck path counts and D_s(l,m) laws")
    p.add_argument("--smax", type=int, default=7)
    p.add_argument("--mmax", type=int, default=7)
    p.add_argument("--normalize", action="store_true", help="apply the sign carried by the shape counts")
    _add_format(p)

    p = vsub.add_parser("symmetric", help="h_k and p_k against fixed multisets and subsets")
    p.add_argument("--n", type=int, required=True)
    _add_format(p)

    p = vsub.add_parser("even-dihedral", help="plethystic h_k(<n>) for even n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kmax", type=int, default=8)
    _add_format(p)

    p = vsub.add_parser("binomial", help="q,t-binomials for odd n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kmax", type=int, default=4, help="largest multisubset size")
    _add_format(p)

    p = vsub.add_parser("polygon", help="type B and D polygon models")
    p.add_argument("--n", type=int, required=True)
    _add_format(p)

    p = vsub.add_parser("posets", help="signed ideal sums and root poset isomorphisms")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--line-max", type=int, default=15)
    _add_format(p)

    p = vsub.add_parser("properties", help="randomized algebra checks (seed from SIEVELAB_SEED)")
    p.add_argument("--trials", type=int, default=50)
    _add_format(p)

    enum = sub.add_parser("enumerate", help="dump objects one per line")
    esub = enum.add_subparsers(dest="kind", required=True)
    p = esub.add_parser("dissections")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = esub.add_parser("facets")
    p.add_argument("--type", required=True, help="root system type, or B-model / D-model for polygons")
    p.add_argument("--rank", type=int)
    p.add_argument("--slow", action="store_true")
    p = esub.add_parser("ideals")
    p.add_argument("--type", help="root system type")
    p.add_argument("--rank", type=int)
    p.add_argument("--poset", choices=("trapezoid", "double-triangle", "line"))
    p.add_argument("--n", type=int)
    p = esub.add_parser("coral")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = esub.add_parser("dyck")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    p = sub.add_parser("census", help="fixed k-angulations for every dihedral element, as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("roots", help="root system data as JSON")
    p.add_argument("--type", required=True)
    p.add_argument("--rank", type=int)
    return parser


def _type_label(kind: str, rank: int | None) -> str:
    kind = kind.strip().upper()
    if kind.startswith("I2"):
        return kind if rank is None else f"I2({rank})"
    return roots.build_root_system(kind, rank).label


def _run_verify(args) -> list[harness.CheckResult]:
    s = args.suite
    if s == "type-a":
        if args.s * args.m + 2 > 11 and not args.slow:
            raise DomainError("n = sm+2 > 11 needs --slow")
        return harness.verify_type_a(args.s, args.m, args.normalize)
    if s == "cluster":
        label = _type_label(args.type, args.rank)
        if label in SLOW_TYPES and not args.slow:
            raise DomainError(f"{label} needs --slow")
        return harness.verify_cluster(args.type, args.rank)
    if s == "raney":
        return harness.verify_raney(args.pmax, args.rmax, args.kmax, args.corrected)
    if s == "dyck":
        return harness.verify_dyck(args.smax, args.mmax, args.normalize)
    if s == "symmetric":
        return harness.verify_symmetric(args.n)
    if s == "even-dihedral":
        return harness.verify_even_dihedral(args.n, args.kmax)
    if s == "binomial":
        return harness.verify_binomial(args.n, args.kmax)
    if s == "polygon":
        return harness.verify_polygon_models(args.n)
    if s == "posets":
        return harness.verify_posets(args.nmax, args.line_max)
    if s == "properties":
        return harness.verify_properties(args.trials)
    raise DomainError(f"unknown suite {s}")


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _enumerate(args) -> None:
    out = sys.stdout
    if args.kind == "dissections":
        for d in dissect.enumerate_kangulations(args.n, args.k):
            out.write(f"{d}\n")
    elif args.kind == "facets":
        label = args.type.strip().upper()
        if label in ("B-MODEL", "D-MODEL"):
            gen = dissect.enumerate_typeB_facets if label[0] == "B" else dissect.enumerate_typeD_facets
            for F in gen(args.rank):
                out.write(f"{F}\n")
            return
        if _type_label(args.type, args.rank) in SLOW_TYPES and not args.slow:
            raise DomainError("E7 and E8 need --slow")
        cc = roots.get_complex(args.type, args.rank)
        out.write(roots.facets_to_text(cc) + "\n")
    elif args.kind == "ideals":
        if args.poset:
            if args.n is None:
                raise DomainError("--poset needs --n")
            build = {
                "trapezoid": posets.trapezoid_poset,
                "double-triangle": posets.double_triangle_poset,
                "line": posets.line_poset,
            }[args.poset]
            P = build(args.n)
        elif args.type:
            P = posets.root_poset(args.type, args.rank)
        else:
            raise DomainError("give --type or --poset")
        for mask in posets.enumerate_ideals(P):
            out.write(" ".join(str(i) for i in range(P.size) if mask >> i & 1) + "\n")
    elif args.kind == "coral":
        for tree in raney.enumerate_coral(args.p, args.r, args.k):
            out.write(raney.coral_to_text(tree) + "\n")
    elif args.kind == "dyck":
        for path in dyck.enumerate_dyck(args.a, args.b):
            out.write(f"{path} {dyck.area(path)}\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            start = time.perf_counter()
            results = _run_verify(args)
            report = harness.to_json(results) if args.format == "json" else harness.to_csv(results)
            _emit(report, args.output)
            failed = [r for r in results if not r.ok]
            for r in failed:
                print(f"FAIL {r.check_id}: lhs={r.lhs} rhs={r.rhs} witness={json.dumps(r.witness, default=str)}", file=sys.stderr)
            elapsed = time.perf_counter() - start
            print(f"{len(results) - len(failed)}/{len(results)} checks passed in {elapsed:.2f}s", file=sys.stderr)
            return 1 if failed else 0
        if args.command == "enumerate":
            _enumerate(args)
            return 0
        if args.command == "census":
            sys.stdout.write(dissect.census_to_csv(dissect.dihedral_census(args.n, args.k)))
            return 0
        if args.command == "roots":
            label = args.type.strip().upper()
            print(roots.build_root_system(label, args.rank).to_json())
            return 0
    except (DomainError, UnsupportedParametersError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    parser.error("unknown command")
    return 2


if __name__ == "__main__":
    sys.exit(main())
