"""Command-line front end: bounds, tables, constructions, verification.

File formats
------------
Code files are JSON lines (UTF-8).  The first line is a header::

    {"q": ..., "p": ..., "m": ..., "moduli": [c0..cm], "N": ..., "k": ...,
     "claimed_distance": ..., "provenance": {...}, "count": ...}

followed by one line per member: the RREF basis as an array of rows, each
row an array of integer element codes.  Members appear in canonical sorted
order, so identical codes produce identical files.

Numeric tables are CSV with columns ``A_q(n,d,k), new, old, formula``; the
best-known registry is CSV with header ``q,n,d,k,value,source``.

Exit codes: 0 success / all checks pass, 1 check failure, 2 usage or parse
error, 3 enumeration budget exceeded.  The environment variable CDC_BUDGET
overrides the default enumeration cap of 2^24 elements.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds as bounds_mod
from .construct import (
    CodeSet,
    ConstructionError,
    grassmannian_code,
    lifted_mrd_code,
    multiblock_parallel_mrd,
    parallel_linkage,
)
from .gf import GF
from .linalg import MatrixGF, Subspace, subspace_from_rows
from .qpoly import BudgetError
from .verify import validate_codeset

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def default_budget() -> int:
    value = os.environ.get("CDC_BUDGET")
    return int(value) if value else 1 << 24


# ----------------------------------------------------------------------
# Code file round trip
# ----------------------------------------------------------------------

def write_codeset(code: CodeSet, fh) -> None:
    header = {
        "q": code.q,
        "p": code.field.p,
        "m": code.field.m,
        "moduli": list(code.field.modulus),
        "N": code.ambient_dim,
        "k": code.dim,
        "claimed_distance": code.claimed_distance,
        "provenance": code.provenance,
        "count": len(code.members),
    }
    fh.write(json.dumps(header, sort_keys=True) + "\n")
    for member in code.members:
        fh.write(json.dumps([list(row) for row in member.basis]) + "\n")


def read_codeset(fh) -> CodeSet:
    header_line = fh.readline()
    if not header_line.strip():
        raise ValueError("empty code file")
    header = json.loads(header_line)
    for key in ("q", "p", "m", "moduli", "N", "k", "claimed_distance", "count"):
        if key not in header:
            raise ValueError(f"code file header is missing '{key}'")
    field = GF(header["p"], header["m"], tuple(header["moduli"]))
    if field.order != header["q"]:
        raise ValueError("header q does not match p^m")
    members = []
    for lineno, line in enumerate(fh, start=2):
        if not line.strip():
            continue
        rows = json.loads(line)
        member = Subspace(field, header["N"], [tuple(r) for r in rows])
        canonical = subspace_from_rows(MatrixGF(field, member.basis))
        if canonical != member:
            raise ValueError(f"line {lineno}: basis is not a canonical full-rank RREF")
        members.append(member)
    if len(members) != header["count"]:
        raise ValueError(
            f"header count {header['count']} does not match {len(members)} member lines"
        )
    return CodeSet(
        field=field,
        ambient_dim=header["N"],
        dim=header["k"],
        claimed_distance=header["claimed_distance"],
        members=tuple(members),
        provenance=header.get("provenance", {}),
    )


# ----------------------------------------------------------------------
# Subcommands
# ----------------------------------------------------------------------

def cmd_bound(args) -> int:
    if args.formula == "multiblock":
        rec = bounds_mod.bound_multiblock(args.q, args.n, args.t, args.s)
    elif args.formula == "johnson":
        rec = bounds_mod.bound_johnson_halving(args.q, args.n, args.t)
    elif args.formula == "anticode":
        rec = bounds_mod.anticode_upper(args.q, args.n, args.delta, args.k)
    else:  # parallel-linkage
        rec = bounds_mod.bound_parallel_linkage(
            args.q, args.k, args.h, args.d, args.input, input_source="cli"
        )
    print(f"{rec.value} {rec.formula} {rec.kind} {rec.label()}")
    return EXIT_OK


def _table_records(args):
    if args.table_id == 1:
        if args.best_known:
            registry = bounds_mod.load_best_known(args.best_known)
        else:
            registry = bounds_mod.default_best_known()
        records, skipped = bounds_mod.generate_table1(registry)
        return records, skipped
    return bounds_mod.generate_table(args.table_id), []


def cmd_table(args) -> int:
    if args.check:
        if args.table_id == 1:
            print("table 1 depends on external inputs and has no embedded reference", file=sys.stderr)
            return EXIT_USAGE
        mismatches = bounds_mod.check_table(args.table_id)
        if mismatches:
            for mm in mismatches:
                print(f"MISMATCH {mm['label']}: expected {mm['expected']}, got {mm['actual']}")
            return EXIT_CHECK_FAILED
        rows = len(bounds_mod.expected_rows(args.table_id))
        print(f"table {args.table_id}: all {rows} rows reproduce exactly")
        return EXIT_OK

    records, skipped = _table_records(args)
    olds = {
        label: old for label, _new, old in bounds_mod.expected_rows(args.table_id)
    }
    lines = ["A_q(n,d,k),new,old,formula"]
    for rec in records:
        old = olds.get(rec.label()) or ""
        lines.append(f"{rec.label()},{rec.value},{old},{rec.formula}")
    for q, k, h, d, reason in skipped:
        lines.append(f"A_{q}({3 * k + h},{d},{k}),,,skipped: {reason}")
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {len(records)} rows to {args.output}"
              + (f" ({len(skipped)} skipped)" if skipped else ""))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_construct(args) -> int:
    budget = args.budget if args.budget is not None else default_budget()
    if args.construction == "lifted":
        code = lifted_mrd_code(args.q, args.n, args.t, budget=budget)
    elif args.construction == "multiblock":
        code = multiblock_parallel_mrd(args.q, args.n, args.t, args.s, budget=budget)
    elif args.construction == "parallel-linkage":
        v_code = None
        if args.v_code:
            with open(args.v_code, encoding="utf-8") as fh:
                v_code = read_codeset(fh)
        code = parallel_linkage(args.q, args.k, args.h, args.d, v_code, budget=budget)
    else:  # grassmannian, handy for building v-code inputs
        code = grassmannian_code(args.q, args.n, args.k, budget=budget)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            write_codeset(code, fh)
        print(f"wrote {len(code)} members to {args.output}")
    else:
        write_codeset(code, sys.stdout)
    return EXIT_OK


def cmd_verify(args) -> int:
    with open(args.path, encoding="utf-8") as fh:
        code = read_codeset(fh)
    report = validate_codeset(code, exhaustive_cap=args.cap, sampled_pairs=args.pairs,
                              seed=args.seed, mode=args.mode)
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK if report["pass"] else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdc",
        description="Constant-dimension subspace codes: constructions, verification, bound tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="evaluate one bound formula")
    bsub = p_bound.add_subparsers(dest="formula", required=True)
    b_multi = bsub.add_parser("multiblock", help="multi-block lower bound on A_q((s+1)n, 2(n-t), n)")
    b_multi.add_argument("--q", type=int, required=True)
    b_multi.add_argument("--n", type=int, required=True)
    b_multi.add_argument("--t", type=int, required=True)
    b_multi.add_argument("--s", type=int, required=True)
    b_john = bsub.add_parser("johnson", help="halved bound on A_q(2n-1, 2(n-t), n-1)")
    b_john.add_argument("--q", type=int, required=True)
    b_john.add_argument("--n", type=int, required=True)
    b_john.add_argument("--t", type=int, required=True)
    b_anti = bsub.add_parser("anticode", help="anticode upper bound on A_q(n, 2*delta, k)")
    b_anti.add_argument("--q", type=int, required=True)
    b_anti.add_argument("--n", type=int, required=True)
    b_anti.add_argument("--delta", type=int, required=True)
    b_anti.add_argument("--k", type=int, required=True)
    b_link = bsub.add_parser("parallel-linkage", help="three-block linkage bound on A_q(3k+h, d, k)")
    b_link.add_argument("--q", type=int, required=True)
    b_link.add_argument("--k", type=int, required=True)
    b_link.add_argument("--h", type=int, default=0)
    b_link.add_argument("--d", type=int, required=True)
    b_link.add_argument("--input", type=int, required=True,
                        help="known lower bound on A_q(2k+h, d, k)")
    for sp in (b_multi, b_john, b_anti, b_link):
        sp.set_defaults(func=cmd_bound)

    p_table = sub.add_parser("table", help="regenerate a published bound table")
    p_table.add_argument("table_id", type=int, choices=[1, 2, 3, 4, 5])
    p_table.add_argument("--check", action="store_true",
                         help="compare against the embedded reference rows (tables 2-5)")
    p_table.add_argument("--best-known", dest="best_known", default=None,
                         help="best-known CSV supplying table-1 inputs")
    p_table.add_argument("-o", "--output", default=None)
    p_table.set_defaults(func=cmd_table)

    p_con = sub.add_parser("construct", help="build a code and write it as JSON lines")
    p_con.add_argument("construction",
                       choices=["lifted", "multiblock", "parallel-linkage", "grassmannian"])
    p_con.add_argument("--q", type=int, required=True)
    p_con.add_argument("--n", type=int, help="block size / ambient dimension")
    p_con.add_argument("--t", type=int, help="q-degree bound of the MRD code")
    p_con.add_argument("--s", type=int, help="extra blocks (multiblock)")
    p_con.add_argument("--k", type=int, help="codeword dimension")
    p_con.add_argument("--h", type=int, default=0, help="ambient widening (parallel-linkage)")
    p_con.add_argument("--d", type=int, help="target distance (parallel-linkage)")
    p_con.add_argument("--v-code", dest="v_code", default=None,
                       help="code file for the second linkage family")
    p_con.add_argument("--budget", type=int, default=None,
                       help="override the enumeration budget (default CDC_BUDGET or 2^24)")
    p_con.add_argument("-o", "--output", default=None)
    p_con.set_defaults(func=cmd_construct)

    p_ver = sub.add_parser("verify", help="validate a code file and print a JSON report")
    p_ver.add_argument("path")
    p_ver.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    p_ver.add_argument("--cap", type=int, default=5000, help="exhaustive pair-scan cap")
    p_ver.add_argument("--pairs", type=int, default=1_000_000)
    p_ver.add_argument("--seed", type=int, default=0x5EED)
    p_ver.set_defaults(func=cmd_verify)

    return parser


def _missing_args(args) -> list[str]:
    required = {
        "lifted": ["n", "t"],
        "multiblock": ["n", "t", "s"],
        "parallel-linkage": ["k", "d"],
        "grassmannian": ["n", "k"],
    }
    if getattr(args, "command", None) != "construct":
        return []
    return [name for name in required[args.construction] if getattr(args, name) is None]


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    missing = _missing_args(args)
    if missing:
        print(f"construct {args.construction} requires --" + " --".join(missing), file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ConstructionError, ValueError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
