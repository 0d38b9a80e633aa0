"""Command-line interface.

Subcommands
    tree       emit rows of one of the six trees
    enumerate  emit a linear enumeration of the positive rationals
    locate     show a fraction's path, parents, handedness and BFS indices
    approx     best approximation under a denominator bound

Results go to stdout, diagnostics to stderr.  Exit code 0 on success, 2 on
usage or input errors.  Fractions are written and read only as "num/den"
(integers need the explicit "/1").  Output is deterministic: identical
invocations produce byte-identical output.
"""

import argparse
import json
import sys
from itertools import islice
from typing import Iterable, Iterator

from fractree.enumerations import index_of, iter_cw_sequence, iter_newman
from fractree.fraction import Frac
from fractree.genealogy import handedness, parents, path_to
from fractree.approximation import best_bounded
from fractree.trees import TreeKind, iter_rows

__all__ = ["main", "run"]

_FORMATS = ("plain", "csv", "jsonl")
_KINDS = ("sb", "cw", "sa", "kepler", "sb-reduced", "cw-reduced")
_MAX_ROWS = 64
_MAX_COUNT = 1 << 24


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _parse_fraction(text: str, finite_positive: bool = False) -> Frac:
    f = Frac.parse(text)
    if finite_positive and (f.num == 0 or f.den == 0):
        raise ValueError(f"{f} is a boundary fraction; need a positive finite one")
    return f


def _json_fraction(f: Frac) -> dict:
    return {"num": str(f.num), "den": str(f.den)}


def _emit_json_line(obj: dict, out) -> None:
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")


def cmd_tree(args) -> int:
    kind = TreeKind.parse(args.kind)
    if args.rows > _MAX_ROWS and not args.force:
        print(
            f"error: {args.rows} rows exceed the limit of {_MAX_ROWS};"
            " pass --force to override",
            file=sys.stderr,
        )
        return 2
    out = sys.stdout
    rows = islice(iter_rows(kind), args.rows)
    if args.format == "plain":
        for row in rows:
            out.write(" ".join(map(str, row)) + "\n")
    elif args.format == "csv":
        out.write("row,index,num,den\n")
        for r, row in enumerate(rows):
            for i, f in enumerate(row):
                out.write(f"{r},{i},{f.num},{f.den}\n")
    else:
        for row in rows:
            for f in row:
                _emit_json_line(_json_fraction(f), out)
    return 0


def _enumeration(method: str) -> Iterator[Frac]:
    if method == "stern":
        return iter_cw_sequence()
    if method == "newman":
        return iter_newman()
    if method.startswith("bfs:"):
        kind = TreeKind.parse(method[4:])
        return (f for row in iter_rows(kind) for f in row)
    raise ValueError(f"unknown enumeration method: {method!r}")


def cmd_enumerate(args) -> int:
    if args.count > _MAX_COUNT and not args.force:
        print(
            f"error: count {args.count} exceeds the limit of {_MAX_COUNT};"
            " pass --force to override",
            file=sys.stderr,
        )
        return 2
    terms = islice(_enumeration(args.method), args.count)
    _emit_fraction_stream(terms, args.format, sys.stdout)
    return 0


def _emit_fraction_stream(fracs: Iterable[Frac], fmt: str, out) -> None:
    if fmt == "plain":
        for f in fracs:
            out.write(f"{f}\n")
    elif fmt == "csv":
        out.write("index,num,den\n")
        for i, f in enumerate(fracs, start=1):
            out.write(f"{i},{f.num},{f.den}\n")
    else:
        for f in fracs:
            _emit_json_line(_json_fraction(f), out)


def cmd_locate(args) -> int:
    f = _parse_fraction(args.fraction, finite_positive=True)
    path = path_to(f)
    left, right = parents(f)
    hand = handedness(f).value
    indices = {
        kind: index_of(f, kind) for kind in (TreeKind.SB, TreeKind.CW, TreeKind.SA)
    }
    out = sys.stdout
    if args.format == "plain":
        out.write(f"fraction {f}\n")
        out.write(f"path {path}\n")
        out.write(f"left-parent {left}\n")
        out.write(f"right-parent {right}\n")
        out.write(f"handedness {hand}\n")
        for kind, index in indices.items():
            out.write(f"index-{kind.value} {index}\n")
    elif args.format == "csv":
        out.write("fraction,path,left_parent,right_parent,handedness,"
                  "index_sb,index_cw,index_sa\n")
        cells = [str(f), path, str(left), str(right), hand]
        cells += [str(indices[k]) for k in (TreeKind.SB, TreeKind.CW, TreeKind.SA)]
        out.write(",".join(cells) + "\n")
    else:
        _emit_json_line(
            {
                "fraction": _json_fraction(f),
                "path": path,
                "left_parent": _json_fraction(left),
                "right_parent": _json_fraction(right),
                "handedness": hand,
                "index_sb": str(indices[TreeKind.SB]),
                "index_cw": str(indices[TreeKind.CW]),
                "index_sa": str(indices[TreeKind.SA]),
            },
            out,
        )
    return 0


def cmd_approx(args) -> int:
    target = _parse_fraction(args.target, finite_positive=True)
    result = best_bounded(target, args.max_den, args.mode)
    cert = result.interval_certificate
    out = sys.stdout
    if args.format == "plain":
        out.write(f"target {target}\n")
        out.write(f"below {result.below}\n")
        out.write(f"above {result.above}\n")
        out.write(f"best {result.best}\n")
        out.write(f"certificate-lo {cert.lo}\n")
        out.write(f"certificate-hi {cert.hi}\n")
    elif args.format == "csv":
        out.write("target,below,above,best,certificate_lo,certificate_hi\n")
        out.write(
            f"{target},{result.below},{result.above},{result.best},"
            f"{cert.lo},{cert.hi}\n"
        )
    else:
        _emit_json_line(
            {
                "target": _json_fraction(target),
                "below": _json_fraction(result.below),
                "above": _json_fraction(result.above),
                "best": _json_fraction(result.best),
                "certificate_lo": _json_fraction(cert.lo),
                "certificate_hi": _json_fraction(cert.hi),
            },
            out,
        )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fractree",
        description="Rational trees, enumerations and exact fraction approximation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tree = sub.add_parser("tree", help="emit tree rows")
    tree.add_argument("--kind", required=True, choices=_KINDS)
    tree.add_argument("--rows", required=True, type=_positive_int,
                      help="number of rows to emit, starting at the root row")
    tree.add_argument("--format", default="plain", choices=_FORMATS)
    tree.add_argument("--force", action="store_true",
                      help=f"allow more than {_MAX_ROWS} rows")
    tree.set_defaults(func=cmd_tree)

    enum = sub.add_parser("enumerate", help="emit an enumeration of the rationals")
    enum.add_argument("--method", required=True,
                      help="stern, newman, or bfs:<kind>")
    enum.add_argument("--count", required=True, type=_positive_int)
    enum.add_argument("--format", default="plain", choices=_FORMATS)
    enum.add_argument("--force", action="store_true",
                      help=f"allow counts above {_MAX_COUNT}")
    enum.set_defaults(func=cmd_enumerate)

    locate = sub.add_parser("locate", help="path, parents and indices of a fraction")
    locate.add_argument("fraction", help='a positive finite fraction, e.g. "4/7"')
    locate.add_argument("--format", default="plain", choices=_FORMATS)
    locate.set_defaults(func=cmd_locate)

    approx = sub.add_parser("approx", help="best bounded-denominator approximation")
    approx.add_argument("target", help='a positive finite fraction, e.g. "7/5"')
    approx.add_argument("--max-den", required=True, type=_positive_int)
    approx.add_argument("--mode", default="absolute",
                        choices=("absolute", "normalized"))
    approx.add_argument("--format", default="plain", choices=_FORMATS)
    approx.set_defaults(func=cmd_approx)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream closed the pipe (e.g. head); not an error
        try:
            sys.stdout.close()
        except BrokenPipeError:
            pass
        return 0


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())
