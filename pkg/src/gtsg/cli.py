"""Command-line front end.

Subcommands:
  info       closed-form summary for one (n, k)
  apery      closed-form Apery set listing for one (n, k)
  frobenius  closed-form Frobenius number only (never enumerates)
  oracle     generic computations on an explicit generator list
  verify     closed-form vs oracle sweep over a parameter grid

Exit codes: 0 success / all match, 1 verification mismatch, 2 usage or
input error.  JSON output serializes every integer as a decimal string so
consumers never lose precision.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import thabit, verify
from .oracle import SemigroupError, make_semigroup

DEFAULT_APERY_CAP = 1_000_000


class TooLarge(Exception):
    """Enumeration refused because s_0 exceeds the cap and --force is absent."""


def _apery_cap() -> int:
    env = os.environ.get("GTSG_S0_CAP")
    return int(env) if env else DEFAULT_APERY_CAP


def _jsonify(obj):
    """Recursively turn ints into decimal strings for lossless JSON."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {key: _jsonify(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(value) for value in obj]
    return obj


def emit_json(obj) -> str:
    return json.dumps(_jsonify(obj), sort_keys=True)


def _info_data(n: int, k: int, force: bool) -> dict:
    gens = thabit.minimal_generating_set(n, k)
    s0 = gens.gens[0]
    data = {
        "n": n,
        "k": k,
        "generators": list(gens.gens),
        "delta": thabit.delta(n, k),
        "e": thabit.embedding_dimension(n, k),
        "case": thabit.case_of(n, k).name,
        "max_apery": thabit.max_apery(n, k),
        "frobenius": thabit.frobenius_closed(n, k),
    }
    # genus enumerates the Apery set, so it honors the size cap
    if s0 <= _apery_cap() or force:
        data["genus"] = thabit.genus_closed(n, k)
    else:
        data["genus"] = None
    return data


def cmd_info(args) -> int:
    data = _info_data(args.n, args.k, args.force)
    if args.format == "json":
        print(emit_json(data))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(data.keys())
        writer.writerow(
            " ".join(map(str, v)) if isinstance(v, list) else v
            for v in data.values()
        )
        sys.stdout.write(buf.getvalue())
    else:
        print(f"GT({data['n']},{data['k']})")
        print("generators =", " ".join(map(str, data["generators"])))
        print(f"delta = {data['delta']}")
        print(f"e = {data['e']}")
        print(f"case = {data['case']}")
        print(f"max_apery = {data['max_apery']}")
        print(f"F = {data['frobenius']}")
        if data["genus"] is None:
            print("genus = (skipped: s0 exceeds enumeration cap; use --force)")
        else:
            print(f"genus = {data['genus']}")
    return 0


def _apery_rows(n: int, k: int) -> list[tuple[int, int, tuple[int, ...]]]:
    s0 = thabit.generator_at(n, k, 0)
    rows = []
    for t in thabit.iter_apery_coeffs(n, k):
        value = thabit.coeff_value(n, k, t)
        rows.append((value % s0, value, t))
    rows.sort(key=lambda row: row[1])
    return rows


def cmd_apery(args) -> int:
    s0 = thabit.generator_at(args.n, args.k, 0)
    if s0 > _apery_cap() and not args.force:
        raise TooLarge(
            f"s0 = {s0} exceeds the enumeration cap {_apery_cap()}; "
            "pass --force to enumerate anyway"
        )
    rows = _apery_rows(args.n, args.k)
    if args.format == "json":
        data = {
            "n": args.n,
            "k": args.k,
            "s0": s0,
            "apery": [row[1] for row in rows],
        }
        if args.with_coeffs:
            data["coeffs"] = [list(row[2]) for row in rows]
        print(emit_json(data))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["residue", "value", "coeffs"])
        for residue, value, coeffs in rows:
            writer.writerow([residue, value, " ".join(map(str, coeffs))])
        sys.stdout.write(buf.getvalue())
    else:
        for residue, value, coeffs in rows:
            if args.with_coeffs:
                print(value, " ".join(map(str, coeffs)))
            else:
                print(value)
    return 0


def cmd_frobenius(args) -> int:
    value = thabit.frobenius_closed(args.n, args.k)
    if args.format == "json":
        print(emit_json({"n": args.n, "k": args.k, "frobenius": value}))
    elif args.format == "csv":
        print("n,k,frobenius")
        print(f"{args.n},{args.k},{value}")
    else:
        print(f"F = {value}")
    return 0


def cmd_oracle(args) -> int:
    gens = make_semigroup(int(x) for x in args.gens.split(","))
    what = args.what
    if what == "apery":
        table = gens.apery_set(args.x)
        values = sorted(table.w)
        data = {"gens": list(gens.gens), "modulus": table.modulus, "apery": values}
        text = " ".join(map(str, values))
    elif what == "frobenius":
        value = gens.frobenius()
        data = {"gens": list(gens.gens), "frobenius": value}
        text = str(value)
    elif what == "genus":
        value = gens.genus()
        data = {"gens": list(gens.gens), "genus": value}
        text = str(value)
    else:  # membership
        if args.x is None:
            raise SemigroupError("membership requires --x")
        member = gens.is_member(args.x)
        data = {"gens": list(gens.gens), "x": args.x, "member": member}
        text = "member" if member else "not-member"
    if args.format == "json":
        print(emit_json(data))
    elif args.format == "csv":
        keys = [key for key in data if key != "gens"]
        print(",".join(keys))
        print(",".join(str(data[key]) for key in keys))
    else:
        print(text)
    return 0


def cmd_verify(args) -> int:
    report = verify.verify_grid(
        n_max=args.n_max, k_max=args.k_max, s0_max=args.s0_max, jobs=args.jobs
    )
    if args.format == "json":
        data = {
            "total": report.total,
            "mismatched": len(report.mismatched),
            "points": [
                {
                    "n": p.n,
                    "k": p.k,
                    "s0": p.s0,
                    "status": "match" if p.ok else "mismatch",
                    "mismatches": [
                        {
                            "field": m.field,
                            "closed_value": m.closed_value,
                            "oracle_value": m.oracle_value,
                        }
                        for m in p.mismatches
                    ],
                }
                for p in report.points
            ],
        }
        print(emit_json(data))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "k", "s0", "status", "detail"])
        for p in report.points:
            detail = "; ".join(
                f"{m.field}: closed={m.closed_value} oracle={m.oracle_value}"
                for m in p.mismatches
            )
            writer.writerow([p.n, p.k, p.s0, "match" if p.ok else "mismatch", detail])
        sys.stdout.write(buf.getvalue())
    else:
        for p in report.points:
            status = "match" if p.ok else "MISMATCH"
            line = f"GT({p.n},{p.k}) s0={p.s0} {status}"
            for m in p.mismatches:
                line += f" [{m.field}: closed={m.closed_value} oracle={m.oracle_value}]"
            print(line)
        print(f"{report.total} points, {len(report.mismatched)} mismatched")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gtsg",
        description="Closed forms and oracle checks for the GT(n,k) "
        "numerical-semigroup family.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_nk(p):
        p.add_argument("--n", type=int, required=True, help="exponent offset n >= 0")
        p.add_argument("--k", type=int, required=True, help="coefficient index k >= 1")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--force", action="store_true",
                       help="enumerate even when s0 exceeds the cap")

    p_info = sub.add_parser("info", help="closed-form summary for GT(n,k)")
    add_nk(p_info)
    p_info.set_defaults(func=cmd_info)

    p_apery = sub.add_parser("apery", help="closed-form Apery set of GT(n,k)")
    add_nk(p_apery)
    p_apery.add_argument("--with-coeffs", action="store_true",
                         help="include the coefficient sequence per value")
    p_apery.set_defaults(func=cmd_apery)

    p_fr = sub.add_parser("frobenius", help="closed-form Frobenius number")
    add_nk(p_fr)
    p_fr.set_defaults(func=cmd_frobenius)

    p_oracle = sub.add_parser("oracle", help="generic semigroup computations")
    p_oracle.add_argument("--gens", required=True,
                          help="comma-separated generators, e.g. 7,11,13")
    p_oracle.add_argument("what",
                          choices=("apery", "frobenius", "genus", "membership"))
    p_oracle.add_argument("--x", type=int, default=None,
                          help="Apery modulus / membership candidate")
    p_oracle.add_argument("--format", choices=("text", "json", "csv"),
                          default="text")
    p_oracle.set_defaults(func=cmd_oracle)

    p_verify = sub.add_parser("verify", help="closed-form vs oracle sweep")
    p_verify.add_argument("--n-max", type=int, default=None)
    p_verify.add_argument("--k-max", type=int, default=None)
    p_verify.add_argument("--s0-max", type=int, default=verify.DEFAULT_S0_MAX)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--format", choices=("text", "json", "csv"),
                          default="text")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "k", 1) < 1 or getattr(args, "n", 0) < 0:
        print("gtsg: error: n must be >= 0 and k must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (SemigroupError, TooLarge, ValueError) as exc:
        print(f"gtsg: error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
