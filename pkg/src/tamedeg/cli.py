"""Command-line interface.

Subcommands: decide, enumerate, semigroup, gallery, verify, analyze2, reduce.
Exit codes for decide: 0 Realizable, 1 NotRealizable, 2 Unknown,
3 ConditionalOnJC2; usage errors exit 64.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Optional, Sequence

from . import plane, reductions, semigroup, witness
from .classify import Status, classify, enumerate_classifications
from .maps import PolyMap, gallery, gallery_names
from .poly import ParseError, format_poly

EXIT_USAGE = 64

_STATUS_EXIT = {
    Status.REALIZABLE: 0,
    Status.NOT_REALIZABLE: 1,
    Status.UNKNOWN: 2,
    Status.CONDITIONAL_ON_JC2: 3,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="tamedeg", description=__doc__)
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for any randomized work (reproducibility)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="classify a candidate multidegree")
    p.add_argument("degrees", type=int, nargs=3, metavar="d")
    p.add_argument("--witness", action="store_true",
                   help="build and verify a witness when Realizable")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("enumerate", help="classify all triples up to a bound")
    p.add_argument("--max", type=int, required=True, dest="max_d3")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int,
                   default=int(os.environ.get("TAMEMDEG_JOBS", "1")))

    p = sub.add_parser("semigroup", help="two-generator semigroup queries")
    p.add_argument("generators", type=int, nargs=2, metavar="d")
    p.add_argument("--k", type=int, default=None,
                   help="membership/decomposition query")
    p.add_argument("--gaps", action="store_true")
    p.add_argument("--min", type=int, default=0, dest="min_k")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("gallery", help="named maps")
    p.add_argument("name", nargs="?")
    p.add_argument("--mdeg", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="re-verify a persisted witness file")
    p.add_argument("file")

    p = sub.add_parser("analyze2", help="decompose/invert a plane map")
    p.add_argument("--map", required=True, dest="map_file")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--decompose", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("reduce", help="bounded elementary-reduction search")
    p.add_argument("--map", required=True, dest="map_file")
    p.add_argument("--target", type=int, required=True,
                   help="1-based component index")
    p.add_argument("--degy-bound", type=int, default=4)
    p.add_argument("--deg-bound", type=int, default=12)
    p.add_argument("--json", action="store_true")
    return parser


def _load_map(path: str) -> PolyMap:
    with open(path) as fh:
        return PolyMap.from_json(json.load(fh))


def _cmd_decide(args) -> int:
    d1, d2, d3 = args.degrees
    result = classify(d1, d2, d3)
    payload = {
        "input": list(result.original),
        "sorted": list(result.sorted_mdeg),
        "status": result.status.value,
        "rule": result.rule,
        "notes": result.notes,
    }
    built = None
    if args.witness and result.witness_recipe is not None:
        built = witness.build(result.witness_recipe)
        payload["witness"] = built.to_json()
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(f"{result.sorted_mdeg}: {result.status.value} [{result.rule}]")
        for note in result.notes:
            print(f"  note: {note}")
        if built is not None:
            print(f"  witness mdeg verified: {built.verified_mdeg}")
            print(json.dumps(built.to_json()))
    return _STATUS_EXIT[result.status]


def _classify_row(triple):
    c = classify(*triple)
    return (c.sorted_mdeg, c.status.value, c.rule, c.original)


def _cmd_enumerate(args) -> int:
    if args.max_d3 < 1:
        raise _UsageError("--max must be >= 1")
    triples = [(a, b, c)
               for a in range(1, args.max_d3 + 1)
               for b in range(a, args.max_d3 + 1)
               for c in range(b, args.max_d3 + 1)]
    if args.jobs > 1:
        import concurrent.futures
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_classify_row, triples, chunksize=64))
    else:
        rows = [_classify_row(t) for t in triples]
    if args.format == "json":
        print(json.dumps([
            {"sorted": list(s), "status": status, "rule": rule,
             "original": list(orig)}
            for s, status, rule, orig in rows], indent=2))
    else:
        print("d1,d2,d3,status,rule,original")
        for s, status, rule, orig in rows:
            rule_csv = rule.replace('"', "'")
            print(f'{s[0]},{s[1]},{s[2]},{status},"{rule_csv}",'
                  f'{orig[0]} {orig[1]} {orig[2]}')
    counts: dict[str, int] = {}
    for _, status, _, _ in rows:
        counts[status] = counts.get(status, 0) + 1
    print("# " + " ".join(f"{k}={v}" for k, v in sorted(counts.items())),
          file=sys.stderr)
    return 0


def _cmd_semigroup(args) -> int:
    d1, d2 = args.generators
    pair = semigroup.SemigroupPair(d1, d2)
    payload: dict = {"d1": pair.d1, "d2": pair.d2}
    if args.k is not None:
        dec = pair.member(args.k)
        payload["k"] = args.k
        payload["member"] = dec is not None
        payload["decomposition"] = list(dec) if dec else None
    if args.gaps or args.k is None:
        payload["frobenius"] = pair.frobenius()
        payload["gaps"] = pair.gaps(args.min_k)
    if args.json:
        print(json.dumps(payload, indent=2))
    elif args.k is not None:
        dec = payload["decomposition"]
        if dec is None:
            print(f"{args.k}: not a member")
        else:
            print(f"{args.k} = {dec[0]}*{pair.d1} + {dec[1]}*{pair.d2}")
    else:
        print(",".join(str(g) for g in payload["gaps"]))
    return 0


def _cmd_gallery(args) -> int:
    if args.name is None:
        print("\n".join(gallery_names()))
        return 0
    try:
        m = gallery(args.name)
    except KeyError as exc:
        raise _UsageError(str(exc))
    if args.mdeg:
        print(" ".join(str(d) for d in m.mdeg()))
    elif args.json:
        print(json.dumps(m.to_json(), indent=2))
    else:
        print(m)
    return 0


def _cmd_verify(args) -> int:
    data = witness.load_witness_file(args.file)
    ok = witness.verify_witness_json(data)
    print("OK" if ok else "MISMATCH")
    return 0 if ok else 1


def _cmd_analyze2(args) -> int:
    m = _load_map(args.map_file)
    try:
        dec = plane.peel(m)
    except (plane.NotKellerError, plane.PeelStuckError) as exc:
        print(f"not an automorphism: {exc}")
        return 1
    payload: dict = {
        "mdeg": list(m.mdeg()),
        "length": dec.length,
        "factor_degrees": dec.factor_degrees,
    }
    if args.inverse:
        payload["inverse"] = dec.inverse_map().to_json()
    if args.decompose:
        payload["l1"] = dec.l1.map.to_json()
        payload["factors"] = [f.map.to_json() for f in dec.factors]
        payload["l2"] = dec.l2.map.to_json()
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(f"length {dec.length}, factor degrees {dec.factor_degrees}")
        if args.inverse:
            inv = dec.inverse_map()
            print(f"inverse: {inv} (mdeg {inv.mdeg()})")
        if args.decompose:
            print(f"L1: {dec.l1.map}")
            for idx, f in enumerate(dec.factors, start=1):
                print(f"T{idx}: {f.map}")
            print(f"L2: {dec.l2.map}")
    return 0


def _cmd_reduce(args) -> int:
    m = _load_map(args.map_file)
    if not 1 <= args.target <= 3:
        raise _UsageError("--target must be 1, 2, or 3")
    cand = reductions.bounded_reduction_search(
        m, args.target - 1, args.degy_bound, args.deg_bound)
    if args.json:
        payload = {"found": cand is not None}
        if cand is not None:
            ok, achieved = reductions.check_elementary_reduction(m, cand)
            payload["g"] = format_poly(cand.g, ("X", "Y"))
            payload["achieved_degree"] = achieved
        print(json.dumps(payload, indent=2))
    elif cand is None:
        print("not found within bounds")
    else:
        ok, achieved = reductions.check_elementary_reduction(m, cand)
        print(f"g = {format_poly(cand.g, ('X', 'Y'))} "
              f"(reduces component {args.target} to degree {achieved})")
    return 0 if cand is not None else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    random.seed(args.seed)
    handlers = {
        "decide": _cmd_decide,
        "enumerate": _cmd_enumerate,
        "semigroup": _cmd_semigroup,
        "gallery": _cmd_gallery,
        "verify": _cmd_verify,
        "analyze2": _cmd_analyze2,
        "reduce": _cmd_reduce,
    }
    try:
        return handlers[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    raise SystemExit(main(argv=None))
