"""Command line surface.

Four subcommands cover the pipeline: `automaton` builds and exports
the region automaton, `accept` tests one word, `cells` runs the cell
pipeline and emits the report (plus a picture next to it for rank 2),
and `svg` draws an arrangement on its own.

Exit codes: 0 on success or acceptance, 1 on rejection or a failed
verification, 2 on bad usage.  All output is deterministic.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from .alcoves import ball
from .arrangement import ArrangementSpec
from .automaton import accepts, count_words, from_arrangement, to_dot, to_json
from .cellregions import report_document, report_json
from .drawing import draw_arrangement
from .kl import cells_stabilized
from .rootsystem import build_root_system

_FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


class UsageError(Exception):
    pass


def _root_system(args):
    if args.type not in _FAMILIES:
        raise UsageError(f"unknown type {args.type!r}; choose from {'/'.join(_FAMILIES)}")
    try:
        return build_root_system(args.type, args.rank)
    except ValueError as exc:
        raise UsageError(str(exc))


def _spec(args, rs) -> ArrangementSpec:
    if args.N is not None and args.nu_preset is not None:
        raise UsageError("give either --N or --nu-preset, not both")
    if args.nu_preset is not None:
        text = args.nu_preset
        if text == "short0long1":
            return ArrangementSpec.short_zero_long_one(rs)
        if text.startswith("uniform:"):
            try:
                n = int(text.split(":", 1)[1])
            except ValueError:
                raise UsageError(f"bad preset {text!r}")
            if n < 0:
                raise UsageError("uniform bound must be nonnegative")
            return ArrangementSpec.uniform(rs, n)
        raise UsageError(
            f"unknown preset {text!r}; use uniform:<n> or short0long1"
        )
    n = 0 if args.N is None else args.N
    if n < 0:
        raise UsageError("--N must be nonnegative")
    return ArrangementSpec.uniform(rs, n)


def _write(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_automaton(args) -> int:
    rs = _root_system(args)
    spec = _spec(args, rs)
    aut = from_arrangement(spec)
    if args.format == "json":
        _write(to_json(aut), args.out)
    elif args.format == "dot":
        _write(to_dot(aut), args.out)
    elif args.format == "text":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["states", aut.n_states])
        writer.writerow(["length", "count"])
        for length, count in enumerate(count_words(aut, args.max_len)):
            writer.writerow([length, count])
        _write(buf.getvalue(), args.out)
    else:
        raise UsageError(f"format {args.format!r} not supported for automaton")
    return 0


def cmd_accept(args) -> int:
    rs = _root_system(args)
    spec = _spec(args, rs)
    aut = from_arrangement(spec)
    word = args.word
    if any(x < 0 or x > rs.rank for x in word):
        raise UsageError(f"letters must lie in 0..{rs.rank}")
    ok = accepts(aut, word)
    print("accept" if ok else "reject")
    return 0 if ok else 1


def cmd_cells(args) -> int:
    rs = _root_system(args)
    spec = _spec(args, rs)
    if args.stability_len <= args.max_len:
        raise UsageError("--stability-len must exceed --max-len")
    dec = cells_stabilized(rs, args.max_len, args.stability_len)
    for line in dec.mismatches:
        print(f"unstable: {line}", file=sys.stderr)
    if args.format == "json":
        _write(report_json(dec, spec), args.out)
    elif args.format == "text":
        doc = report_document(dec, spec)
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["label", "size_in_ball", "n_regions", "exact", "stable"])
        for cell in doc["cells"]:
            writer.writerow(
                [
                    cell["label"],
                    cell["size_in_ball"],
                    len(cell["regions"]),
                    str(cell["exact"]).lower(),
                    str(cell["stable"]).lower(),
                ]
            )
        _write(buf.getvalue(), args.out)
    else:
        raise UsageError(f"format {args.format!r} not supported for cells")
    if args.out is not None and rs.rank == 2:
        figure_path = str(Path(args.out).with_suffix(".svg"))
        draw_arrangement(spec, ball(rs, args.max_len), figure_path, dec)
        print(f"figure: {figure_path}", file=sys.stderr)
    if dec.mismatches and not args.allow_unstable:
        print(
            f"{len(dec.mismatches)} classes changed between the radii "
            "(rerun with --allow-unstable to accept the report anyway)",
            file=sys.stderr,
        )
        return 1
    return 0


def cmd_svg(args) -> int:
    rs = _root_system(args)
    if rs.rank != 2:
        raise UsageError("svg output is only supported for rank 2")
    spec = _spec(args, rs)
    dec = None
    if args.stability_len is not None:
        if args.stability_len <= args.max_len:
            raise UsageError("--stability-len must exceed --max-len")
        dec = cells_stabilized(rs, args.max_len, args.stability_len)
    summary = draw_arrangement(spec, ball(rs, args.max_len), args.out, dec)
    print(
        f"{summary.out_path}: {summary.lines_drawn} lines, "
        f"{summary.alcoves_drawn} alcoves, {summary.coloured_alcoves} coloured"
    )
    return 0


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--type", required=True, help="family letter A..G")
    sub.add_argument("--rank", required=True, type=int, help="rank of the type")
    sub.add_argument("--N", type=int, default=None, help="uniform strip bound")
    sub.add_argument(
        "--nu-preset",
        default=None,
        help="strip bounds by root length: uniform:<n> or short0long1",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylcells",
        description="Automata and cells from extended strip arrangements",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("automaton", help="build and export the region automaton")
    _add_common(p)
    p.add_argument("--max-len", type=int, default=10, help="count words up to this length")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_automaton)

    p = subs.add_parser("accept", help="test one word for acceptance")
    _add_common(p)
    p.add_argument("word", nargs="*", type=int, help="letters 0..rank")
    p.set_defaults(func=cmd_accept)

    p = subs.add_parser("cells", help="stabilized cells, regions, report")
    _add_common(p)
    p.add_argument("--max-len", type=int, default=10, help="reporting ball radius")
    p.add_argument(
        "--stability-len", type=int, default=12, help="cross-check ball radius"
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument(
        "--allow-unstable",
        action="store_true",
        help="exit 0 even when classes changed between the radii",
    )
    p.set_defaults(func=cmd_cells)

    p = subs.add_parser("svg", help="draw a rank-2 arrangement")
    _add_common(p)
    p.add_argument("--max-len", type=int, default=6, help="alcoves up to this length")
    p.add_argument(
        "--stability-len",
        type=int,
        default=None,
        help="when given, colour alcoves by stable cell at radius --max-len",
    )
    p.add_argument("--out", required=True, help="SVG output path")
    p.set_defaults(func=cmd_svg)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
