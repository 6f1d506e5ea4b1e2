"""Command line front end.

Subcommands mirror the library: enumerate, genus, maximal, min-genus,
closure, min-gens, rank, feasible, verify.  Formats: text (one semigroup
per line, count footer unless streaming), json, csv.  Exit codes: 0 on
success, 1 on a domain error (one-line diagnostic on stderr), 2 on a
usage error.  Set SATSEMI_COLOR=1 to color verify status lines; data
lines are never decorated.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Iterable

from .errors import SemigroupError
from .extremal import maximal_elements, min_genus
from .oracle import check_all
from .rank_enum import enumerate_rank, feasible_rank
from .satsets import closure, minimal_system
from .semigroup import NumericalSemigroup
from .tree import enumerate_sat_genus, iter_sat

SEMIGROUP_CSV_COLUMNS = (
    "frobenius",
    "genus",
    "multiplicity",
    "edim",
    "rank",
    "small_elements",
    "msg",
    "sat_msg",
)


def _record(S: NumericalSemigroup) -> dict:
    system = minimal_system(S)
    rec = S.canonical_json()
    rec["gaps"] = list(S.gaps())
    rec["sat_msg"] = list(system.elements)
    rec["embedding_dimension"] = S.embedding_dimension
    rec["rank"] = len(system.elements)
    return rec


def _text_line(rec: dict) -> str:
    members = ",".join(
        map(str, [0, *rec["small_elements"], rec["frobenius"] + 1])
    )
    msg = ",".join(map(str, rec["msg"]))
    return (
        f"{members}→ | msg=⟨{msg}⟩"
        f" | g={rec['genus']} | rank={rec['rank']}"
    )


def _csv_row(rec: dict) -> list:
    return [
        rec["frobenius"],
        rec["genus"],
        rec["multiplicity"],
        rec["embedding_dimension"],
        rec["rank"],
        ";".join(map(str, rec["small_elements"])),
        ";".join(map(str, rec["msg"])),
        ";".join(map(str, rec["sat_msg"])),
    ]


def _emit_semigroups(
    semigroups: Iterable[NumericalSemigroup], fmt: str, stream: bool = False
) -> None:
    if fmt == "text":
        count = 0
        for S in semigroups:
            print(_text_line(_record(S)))
            count += 1
        if not stream:
            print(count)
    elif fmt == "json":
        if stream:
            for S in semigroups:
                print(json.dumps(_record(S)))
        else:
            print(json.dumps([_record(S) for S in semigroups], indent=2))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(SEMIGROUP_CSV_COLUMNS)
        for S in semigroups:
            writer.writerow(_csv_row(_record(S)))


def _emit_value(fmt: str, columns: tuple[str, ...], record: dict, text: str) -> None:
    if fmt == "json":
        print(json.dumps(record))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(columns)
        writer.writerow([record[c] for c in columns])
    else:
        print(text)


def _decorate(line: str, good: bool) -> str:
    if os.environ.get("SATSEMI_COLOR") == "1":
        code = "32" if good else "31"
        return f"\x1b[{code}m{line}\x1b[0m"
    return line


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None


def _cmd_enumerate(args: argparse.Namespace) -> int:
    nodes = iter_sat(args.frobenius, jobs=args.jobs)
    _emit_semigroups(
        (node.semigroup for node in nodes), args.format, stream=args.stream
    )
    return 0


def _cmd_genus(args: argparse.Namespace) -> int:
    _emit_semigroups(
        enumerate_sat_genus(args.frobenius, args.genus, jobs=args.jobs),
        args.format,
    )
    return 0


def _cmd_maximal(args: argparse.Namespace) -> int:
    _emit_semigroups(maximal_elements(args.frobenius), args.format)
    return 0


def _cmd_min_genus(args: argparse.Namespace) -> int:
    value = min_genus(args.frobenius)
    _emit_value(
        args.format,
        ("frobenius", "min_genus"),
        {"frobenius": args.frobenius, "min_genus": value},
        str(value),
    )
    return 0


def _cmd_closure(args: argparse.Namespace) -> int:
    _emit_semigroups([closure(args.frobenius, args.set)], args.format)
    return 0


def _cmd_min_gens(args: argparse.Namespace) -> int:
    S = NumericalSemigroup.from_small_elements(args.frobenius, args.small)
    system = minimal_system(S, args.frobenius)
    elems = ",".join(map(str, system.elements))
    _emit_value(
        args.format,
        ("frobenius", "rank", "sat_msg"),
        {
            "frobenius": args.frobenius,
            "rank": len(system.elements),
            "sat_msg": ";".join(map(str, system.elements))
            if args.format == "csv"
            else list(system.elements),
        },
        f"sat_msg=⟨{elems}⟩ | rank={len(system.elements)}",
    )
    return 0


def _cmd_rank(args: argparse.Namespace) -> int:
    _emit_semigroups(enumerate_rank(args.frobenius, args.rank), args.format)
    return 0


def _cmd_feasible(args: argparse.Namespace) -> int:
    value = feasible_rank(args.frobenius, args.rank)
    _emit_value(
        args.format,
        ("frobenius", "rank", "feasible"),
        {"frobenius": args.frobenius, "rank": args.rank, "feasible": value},
        "true" if value else "false",
    )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    reports = [
        check_all(f, jobs=args.jobs)
        for f in range(1, args.max_frobenius + 1)
    ]
    all_ok = all(r.ok for r in reports)
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(("frobenius", "semigroup_count", "ok", "discrepancies"))
        for r in reports:
            writer.writerow(
                [r.frobenius, r.semigroup_count, r.ok, ";".join(r.discrepancies)]
            )
    else:
        for r in reports:
            status = "ok" if r.ok else f"{len(r.discrepancies)} discrepancies"
            print(
                _decorate(
                    f"F={r.frobenius}: {status}, {r.semigroup_count} semigroups",
                    r.ok,
                )
            )
            for line in r.discrepancies:
                print(f"  {line}")
        print(_decorate("all checks passed" if all_ok else "FAILED", all_ok))
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="satsemi",
        description=(
            "Saturated numerical semigroups with a fixed Frobenius number: "
            "enumeration, generating systems, ranks."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--jobs", type=int, default=1,
        help="worker processes for enumeration (default: 1)",
    )
    common.add_argument(
        "--sort", choices=("canonical",), default="canonical",
        help="output order; only the canonical order exists",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "enumerate", parents=[common],
        help="all saturated semigroups with Frobenius number F",
    )
    p.add_argument("--frobenius", type=int, required=True, metavar="F")
    p.add_argument(
        "--stream", action="store_true",
        help="emit each layer as computed and skip the count footer",
    )
    p.set_defaults(run=_cmd_enumerate)

    p = sub.add_parser(
        "genus", parents=[common], help="the members with a fixed genus"
    )
    p.add_argument("--frobenius", type=int, required=True, metavar="F")
    p.add_argument("--genus", type=int, required=True, metavar="G")
    p.set_defaults(run=_cmd_genus)

    p = sub.add_parser(
        "maximal", parents=[common], help="the inclusion-maximal members"
    )
    p.add_argument("--frobenius", type=int, required=True, metavar="F")
    p.set_defaults(run=_cmd_maximal)

    p = sub.add_parser(
        "min-genus", parents=[common], help="the least genus in the family"
    )
    p.add_argument("--frobenius", type=int, required=True, metavar="F")
    p.set_defaults(run=_cmd_min_genus)

    p = sub.add_parser(
        "closure", parents=[common],
        help="least member containing the given set",
    )
    p.add_argument("--frobenius", type=int, required=True, metavar="F")
    p.add_argument(
        "--set", type=_int_list, required=True, metavar="A,B,C",
        help="comma-separated integers in 1..F-1",
    )
    p.set_defaults(run=_cmd_closure)

    p = sub.add_parser(
        "min-gens", parents=[common],
        help="minimal generating system and rank of a member given by its small elements",
    )
    p.add_argument("--frobenius", type=int, required=True, metavar="F")
    p.add_argument(
        "--small", type=_int_list, required=True, metavar="A,B,C",
        help="comma-separated nonzero members below F",
    )
    p.set_defaults(run=_cmd_min_gens)

    p = sub.add_parser(
        "rank", parents=[common], help="the members with a fixed rank"
    )
    p.add_argument("--frobenius", type=int, required=True, metavar="F")
    p.add_argument("--rank", type=int, required=True, metavar="P")
    p.set_defaults(run=_cmd_rank)

    p = sub.add_parser(
        "feasible", parents=[common],
        help="whether any member has the given rank",
    )
    p.add_argument("--frobenius", type=int, required=True, metavar="F")
    p.add_argument("--rank", type=int, required=True, metavar="P")
    p.set_defaults(run=_cmd_feasible)

    p = sub.add_parser(
        "verify", parents=[common],
        help="cross-validate the fast paths against the brute-force oracle",
    )
    p.add_argument("--max-frobenius", type=int, required=True, metavar="N")
    p.set_defaults(run=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except SemigroupError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
