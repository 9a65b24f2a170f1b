"""Command line front end.

Subcommands: analyze one subgroup of G x H, enumerate all subdirect
products of a pair, compose two subgroups under the star product, run
the library's invariant sweeps, or list the built-in groups.  Reports
are line-oriented JSON (see records); human summaries go to stdout.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .errors import (
    FactorMismatch,
    InternalInconsistency,
    InvalidQuintuple,
    NotAGroup,
    NotAutomorphism,
    NoDiagonal,
    NotNormal,
    NotSubdirect,
    OrderLimitExceeded,
    ParseError,
    PreconditionFailed,
)
from .presets import catalog_group, catalog_names, preset_descriptions
from .products import DEFAULT_PRODUCT_CAP, direct_product, enumerate_subdirect
from .records import (
    AnalysisRecord,
    analyze_subgroup,
    star_analysis,
    write_records,
)
from .specs import load_group, load_product_subgroup
from .verification import CheckContext, run_checks

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_CAP = 3

INPUT_ERRORS = (ParseError, NotAGroup, NotAutomorphism, NotNormal,
                InvalidQuintuple, FactorMismatch, NoDiagonal,
                PreconditionFailed, NotSubdirect)


def _add_common(sub: argparse.ArgumentParser, *, needs_pair: bool) -> None:
    if needs_pair:
        sub.add_argument("--G", required=True, metavar="SPEC",
                         help="left factor group (shorthand, JSON, or @file)")
        sub.add_argument("--H", metavar="SPEC",
                         help="right factor group; defaults to --G")
    sub.add_argument("--pi", metavar="P1,P2,...",
                     help="primes to decide; default: primes dividing |G x H|")
    sub.add_argument("--prime", type=int, metavar="P",
                     help="single prime to decide (same as --pi P)")
    sub.add_argument("--out", metavar="PATH",
                     help="write a line-oriented JSON report here")
    sub.add_argument("--max-order", type=int, default=DEFAULT_PRODUCT_CAP,
                     metavar="N", help="largest allowed |G x H| "
                     f"(default {DEFAULT_PRODUCT_CAP})")
    sub.add_argument("--seed-order", type=int, default=0, metavar="N",
                     help="reserved; accepted for interface stability, "
                     "has no effect")
    sub.add_argument("--raw-oracle", action="store_true",
                     help="cross-check with the exhaustive value-table hom "
                     "search (tiny groups only)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subdirect",
        description="Extensibility of homomorphisms from subdirect products "
                    "of finite groups into cyclic coefficient groups.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("analyze", help="analyze one subgroup U of G x H")
    _add_common(p, needs_pair=True)
    p.add_argument("--U", required=True, metavar="DESC",
                   help="subgroup: 'full', 'diagonal', JSON pairs/quintuple, "
                        "or @file")
    p.set_defaults(func=cmd_analyze)

    p = subs.add_parser("subdirects",
                        help="enumerate and analyze every subdirect product")
    _add_common(p, needs_pair=True)
    p.set_defaults(func=cmd_subdirects)

    p = subs.add_parser("star", help="compose U <= G x H with V <= H x G")
    _add_common(p, needs_pair=True)
    p.add_argument("--U", required=True, metavar="DESC",
                   help="left composition factor inside G x H")
    p.add_argument("--V", required=True, metavar="DESC",
                   help="right composition factor inside H x G")
    p.set_defaults(func=cmd_star)

    p = subs.add_parser("verify", help="run the library invariant sweeps")
    p.add_argument("--G", metavar="LIST",
                   help="comma-separated selection (default: whole catalog; "
                        "empty string: nothing); entries may be any group "
                        "spec, including @file")
    p.add_argument("--out", metavar="PATH",
                   help="write one JSON object per check here")
    p.add_argument("--max-order", type=int, default=DEFAULT_PRODUCT_CAP,
                   metavar="N", help="largest allowed |G x H| in the sweeps")
    p.add_argument("--seed-order", type=int, default=0, metavar="N",
                   help="reserved; accepted for interface stability, "
                   "has no effect")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("catalog", help="list built-in groups and presets")
    p.set_defaults(func=cmd_catalog)
    return parser


def _primes_from(args) -> Optional[list]:
    chosen = set()
    if args.pi:
        for token in args.pi.split(","):
            token = token.strip()
            if token:
                try:
                    chosen.add(int(token))
                except ValueError as exc:
                    raise ParseError(f"bad prime {token!r}") from exc
    if args.prime:
        chosen.add(args.prime)
    if not chosen:
        return None
    for p in chosen:
        if p < 2:
            raise ParseError(f"{p} is not a prime")
    return sorted(chosen)


def _load_pair(args):
    G = load_group(args.G)
    H = G if args.H is None or args.H == args.G else load_group(args.H)
    if G.order * H.order > args.max_order:
        raise OrderLimitExceeded(
            f"|G x H| = {G.order * H.order} above cap {args.max_order}")
    return G, H


def _print_record(record: AnalysisRecord) -> None:
    left, right = record.left, record.right
    print(f"G: {left['label']} (order {left['order']}) x "
          f"H: {right['label']} (order {right['order']}); "
          f"U order {len(record.pairs)}")
    proj = record.projections
    diag = {True: "yes", False: "no", None: "n/a"}[record.contains_diagonal]
    print(f"subdirect: {'yes' if record.subdirect else 'no'} "
          f"(p1 {proj['p1_order']}, k1 {proj['k1_order']} | "
          f"p2 {proj['p2_order']}, k2 {proj['k2_order']}); "
          f"contains diagonal: {diag}")
    if not record.subdirect:
        print("no extensibility verdicts: U is not subdirect")
        return
    q = record.quotient
    name = q["name"] if q["name"] else "unidentified"
    inv = (f", invariants {q['abelian_invariants']}"
           if q["abelian_invariants"] is not None else "")
    print(f"common section q(U): order {q['order']}, {name}{inv}")
    for p in record.primes:
        entry = record.per_prime[str(p)]
        verdict = "extensible" if entry["extensible"] else "inextensible"
        oracle = entry["oracle"]
        oracle_text = ("" if oracle is None else
                       f"; oracle: {'extensible' if oracle else 'inextensible'}")
        methods = ", ".join(entry["methods"])
        print(f"p={p}: {verdict} [{methods}]{oracle_text}")
    overall = "extensible" if record.extensible else "inextensible"
    agreement = ""
    if record.oracle_extensible is not None:
        agreement = (" (oracle agrees)"
                     if not record.inconsistent else " (ORACLE DISAGREES)")
    print(f"overall: {overall} for pi={record.primes}{agreement}")
    if record.star is not None:
        star = record.star
        print(f"composition: sections of inputs: "
              f"{star['section_of_left']}/{star['section_of_right']}; "
              f"kernel condition: {star['preservation_condition']}")


def _finish(record: AnalysisRecord, args) -> int:
    _print_record(record)
    if args.out:
        write_records(args.out, [record])
        print(f"report written to {args.out}")
    return EXIT_VERIFICATION if record.inconsistent else EXIT_OK


def cmd_analyze(args) -> int:
    G, H = _load_pair(args)
    info = direct_product(G, H, max_order=args.max_order)
    U = load_product_subgroup(info, args.U)
    primes = _primes_from(args)
    record = analyze_subgroup(U, primes, raw_oracle=args.raw_oracle)
    return _finish(record, args)


def cmd_star(args) -> int:
    G, H = _load_pair(args)
    info_gh = direct_product(G, H, max_order=args.max_order)
    info_hg = direct_product(H, G, max_order=args.max_order)
    U = load_product_subgroup(info_gh, args.U)
    V = load_product_subgroup(info_hg, args.V)
    primes = _primes_from(args)
    record = star_analysis(U, V, primes, raw_oracle=args.raw_oracle)
    return _finish(record, args)


def cmd_subdirects(args) -> int:
    G, H = _load_pair(args)
    subs = enumerate_subdirect(G, H, max_order=args.max_order)
    primes = _primes_from(args)
    records = [analyze_subgroup(U, primes, raw_oracle=args.raw_oracle)
               for U in subs]
    effective = records[0].primes if records else []
    summary = {
        "count": len(records),
        "extensible_count": {
            str(p): sum(1 for r in records if r.per_prime[str(p)]["extensible"])
            for p in effective
        },
        "inconsistent_count": sum(1 for r in records if r.inconsistent),
    }
    if args.out:
        write_records(args.out, records,
                      extra_header={"left": G.label, "right": H.label})
    else:
        for record in records:
            print(record.to_json())
    print(json.dumps(summary, sort_keys=True))
    if any(r.inconsistent for r in records):
        return EXIT_VERIFICATION
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.G is None:
        names = list(catalog_names())
    else:
        names = [tok.strip() for tok in args.G.split(",") if tok.strip()]
    groups = []
    for name in names:
        try:
            G = (catalog_group(name) if name in catalog_names()
                 else load_group(name))
            G.validate()
        except NotAGroup as exc:
            print(f"verification failed while loading {name}: {exc}")
            return EXIT_VERIFICATION
        groups.append(G)
    ctx = CheckContext(groups, product_cap=args.max_order)
    results = run_checks(ctx)
    for result in results:
        print(result.line())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for result in results:
                fh.write(json.dumps({
                    "schema": "subdirect-verify/1",
                    "name": result.name,
                    "passed": result.passed,
                    "checked": result.checked,
                    "failures": result.failures,
                }, sort_keys=True) + "\n")
    failed = [r for r in results if not r.passed]
    total = sum(r.checked for r in results)
    if failed:
        print(f"FAILED {len(failed)} of {len(results)} checks "
              f"({total} cases)")
        return EXIT_VERIFICATION
    print(f"all {len(results)} checks passed ({total} cases)")
    return EXIT_OK


def cmd_catalog(args) -> int:
    print("catalog groups (usable by name in --G/--H and verify --G):")
    for name in catalog_names():
        G = catalog_group(name)
        print(f"  {name:8s} order {G.order}")
    print("shorthand grammar: Cn, Dn (order n), Sn, An, Q8, Ep^k, "
          "and x-products such as C2xS3")
    print("presets for JSON specs (kind='preset'):")
    for line in preset_descriptions():
        print(f"  {line}")
    print("spec files: JSON with fields name, kind "
          "(cayley|permutations|preset|product), data; "
          "permutation generators accept cycle strings or image lists")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OrderLimitExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except INPUT_ERRORS as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalInconsistency as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION


if __name__ == "__main__":
    sys.exit(main())
