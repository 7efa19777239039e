"""Command-line interface: ``qtype decompose | tables | verify``.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 computational failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import commutant, decomp
from .decomp import AlgebraDecomposition
from .errors import QTypeError
from .perm import DEFAULT_MAX_ORDER, close_group, parse_generators
from .tables import TABLE_SIZES, build_table
from .verify import SUITES, Limits, run_suite
from .young import YoungDiagram

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_COMPUTE = 3


class UsageError(Exception):
    pass


def _label_text(kind: str, label: object) -> str:
    if isinstance(label, YoungDiagram):
        return str(label)
    if kind == "cycle":
        return f"k={label}"
    return f"component={label}"


def render_text(result: AlgebraDecomposition, ascii: bool = False) -> str:
    lines = [result.render(ascii=ascii)]
    labels = [_label_text(result.kind, b.label) for b in result.blocks]
    width = max((len(s) for s in labels), default=0)
    for label, block in zip(labels, result.blocks):
        line = f"  {label:<{width}}  M_{block.dimension}"
        if result.kind == "subgroup":
            line += f"  (irrep dim {block.irrep_dim})"
        lines.append(line)
    if result.truncated_at is not None:
        lines.append(f"  (truncated at {result.truncated_at} boxes)")
    return "\n".join(lines)


def render_csv(result: AlgebraDecomposition) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["kind", "n", "d", "label", "dim"])
    for block in result.blocks:
        n = result.n if result.n is not None else ""
        writer.writerow([result.kind, n, result.d, _label_text(result.kind, block.label), block.dimension])
    return buf.getvalue().rstrip("\n")


def render(result: AlgebraDecomposition, fmt: str, ascii: bool = False) -> str:
    if fmt == "json":
        return json.dumps(result.to_dict(), ensure_ascii=ascii)
    if fmt == "csv":
        return render_csv(result)
    return render_text(result, ascii=ascii)


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.kind} needs {', '.join(missing)}")


def cmd_decompose(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind in ("unordered", "cycle"):
        _require(args, "n", "d")
        result = decomp.unordered_tuple(args.n, args.d) if kind == "unordered" else decomp.cycle(args.n, args.d)
    elif kind == "words":
        _require(args, "d", "max_n")
        result = decomp.unordered_words(args.d, args.max_n)
    else:
        _require(args, "n", "d", "generators")
        gens = [g for text in args.generators for g in parse_generators(text, args.n)]
        group = close_group(gens, max_order=args.max_order, n=args.n)
        result = commutant.subgroup_decomposition(group, args.d, seed=args.seed, tol=args.tol, cap=args.cap)
    if result.zero_blocks:
        print(f"vanishing multiplicities at k = {list(result.zero_blocks)}", file=sys.stderr)
    print(render(result, args.format, args.ascii))
    return EXIT_OK


def render_table_text(table, ascii: bool = False) -> str:
    headers = ["d"] + [str(c) for c in table.columns]
    body = [[str(d)] + ["" if v is None else f"M_{v}" for v in cells] for d, cells in table.rows.items()]
    widths = [max(len(r[i]) for r in [headers, *body]) for i in range(len(headers))]
    fmt = lambda row: "  ".join(cell.rjust(w) if i == 0 else cell.ljust(w) for i, (cell, w) in enumerate(zip(row, widths)))
    return "\n".join(fmt(r).rstrip() for r in [headers, *body])


def cmd_tables(args: argparse.Namespace) -> int:
    if args.d_max < 2:
        raise UsageError("--d-max must be >= 2")
    table = build_table(args.which, 2, args.d_max)
    if args.format == "json":
        print(json.dumps(table.to_dict()))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["d"] + [str(c) for c in table.columns])
        for d, cells in table.rows.items():
            writer.writerow([d] + ["" if v is None else v for v in cells])
        print(buf.getvalue().rstrip("\n"))
    else:
        print(render_table_text(table, args.ascii))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    limits = Limits(seed=args.seed)
    for name in ("oracle_d_max", "oracle_n_max", "cycle_n_max", "cycle_d_max"):
        value = getattr(args, name)
        if value is not None:
            setattr(limits, name, value)
    checks = run_suite(args.suite, limits)
    ok = all(c.passed for c in checks)
    if args.format == "json":
        print(json.dumps({"suite": args.suite, "passed": ok, "checks": [c.to_dict() for c in checks]}))
    else:
        for c in checks:
            status = "PASS" if c.passed else "FAIL"
            print(f"{status}  {c.name}  ({c.cases - len(c.failures)}/{c.cases})")
            for failure in c.failures[:10]:
                print(f"      {failure}")
        print(f"{'all checks passed' if ok else 'verification FAILED'}")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtype",
        description="Matrix-block decompositions of quotient quantum types.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    fmt_choices = ("text", "json", "csv")

    p = sub.add_parser(
        "decompose",
        help="decompose one quantum type",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    p.add_argument("kind", choices=decomp.KINDS)
    p.add_argument("--n", type=int, help="tuple length (unordered, cycle, subgroup)")
    p.add_argument("--d", type=int, help="local dimension")
    p.add_argument("--max-n", type=int, help="box-count truncation for words")
    p.add_argument(
        "--generators",
        action="append",
        help='subgroup generators, e.g. "(1 2 3)" or "2 3 1"; separate several with ";" or repeat the flag',
    )
    p.add_argument("--format", choices=fmt_choices, default="text")
    p.add_argument("--ascii", action="store_true", help='write "(+)" instead of "⊕"')
    p.add_argument("--seed", type=int, default=0, help="oracle seed")
    p.add_argument(
        "--cap",
        type=int,
        default=None,
        help=f"oracle cap on d**n (default {commutant.DEFAULT_CAP}, or $QTYPE_CAP)",
    )
    p.add_argument("--tol", type=float, default=commutant.DEFAULT_TOL, help="relative eigenvalue gap")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER, help="largest group to close")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser(
        "tables",
        help="reproduce the pairs/triples/quads tables",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    p.add_argument("which", choices=tuple(TABLE_SIZES))
    p.add_argument("--d-max", type=int, default=10)
    p.add_argument("--format", choices=fmt_choices, default="text")
    p.add_argument("--ascii", action="store_true")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser(
        "verify",
        help="run formula-vs-oracle cross-checks",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0, help="oracle seed")
    p.add_argument("--oracle-d-max", type=int, help="largest d in the oracle grid (default 3)")
    p.add_argument("--oracle-n-max", type=int, help="largest n in the oracle grid (default 5)")
    p.add_argument("--cycle-n-max", type=int, help="largest n in the cycle grid (default 12)")
    p.add_argument("--cycle-d-max", type=int, help="largest d in the cycle grid (default 5)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"qtype: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QTypeError as exc:
        print(f"qtype: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
