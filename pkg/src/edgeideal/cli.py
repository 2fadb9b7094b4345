"""Command-line front end.

    edgeideal analyze <file> [--field q|p:<prime>] [--recheck]
    edgeideal verify thm1|thm2 --max-part <k> [--field ...] [--report FILE]
    edgeideal verify structure --max-n <k> --sample <m> --seed <s> [--report FILE]
    edgeideal verify trees --max-n <k>
    edgeideal gen <family> <params...> [--out DIR]

Exit status: 0 all checks passed, 1 a violation was found, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import InputError
from .formats import format_edge_list, parse_edge_list
from .graph import FAMILIES, generate
from .harness import analyze, verify_structure, verify_thm1, verify_thm2, verify_trees
from .homology import FieldSpec


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _param(text: str):
    for conv in (int, float):
        try:
            return conv(text)
        except ValueError:
            pass
    raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgeideal", description="Edge-ideal invariants and theorem checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="all invariants of one graph given as an edge list")
    p.add_argument("file", help="edge-list file, or - for standard input")
    p.add_argument("--field", type=_field, default=FieldSpec("q"))
    p.add_argument("--recheck", action="store_true", help="replay certificates through the verifier")

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("campaign", choices=["thm1", "thm2", "structure", "trees"])
    p.add_argument("--max-part", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--sample", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--field", type=_field, default=FieldSpec("q"))
    p.add_argument("--recheck", action="store_true")
    p.add_argument("--report", type=Path, help="write the machine-readable report here")

    p = sub.add_parser("gen", help="emit edge-list files for a graph family")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*", type=_param)
    p.add_argument("--out", type=Path, help="directory for one file per graph (default: stdout)")
    return parser


def _cmd_analyze(args) -> int:
    text = sys.stdin.read() if args.file == "-" else Path(args.file).read_text(encoding="ascii")
    G = parse_edge_list(text)
    values = analyze(G, args.field, args.recheck)
    for key, value in values.items():
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif value is None:
            value = "-"
        print(f"{key}: {value}")
    if args.recheck and not (values["recheck_vd"] and values["recheck_shelling"]):
        return 1
    return 0


def _cmd_verify(args, parser) -> int:
    c = args.campaign
    if c in ("thm1", "thm2"):
        if args.max_part is None:
            parser.error(f"verify {c} needs --max-part")
        if c == "thm1":
            rep = verify_thm1(args.max_part, args.field, args.recheck)
        else:
            rep = verify_thm2(args.max_part, args.field)
    elif c == "structure":
        if args.max_n is None:
            parser.error("verify structure needs --max-n")
        rep = verify_structure(args.max_n, args.sample, args.seed, args.field, args.recheck)
    else:
        if args.max_n is None:
            parser.error("verify trees needs --max-n")
        rep = verify_trees(args.max_n, args.field)
    print("\n".join(rep.summary_lines()))
    if args.report:
        args.report.write_text(rep.to_text(), encoding="ascii")
    return 0 if rep.all_agree else 1


def _cmd_gen(args) -> int:
    graphs = generate(args.family, *args.params)
    if args.out is None:
        for idx, G in enumerate(graphs):
            sys.stdout.write(f"# {args.family} #{idx}\n")
            sys.stdout.write(format_edge_list(G))
        return 0
    args.out.mkdir(parents=True, exist_ok=True)
    for idx, G in enumerate(graphs):
        (args.out / f"{args.family}_{idx:06d}.txt").write_text(format_edge_list(G), encoding="ascii")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "verify":
            return _cmd_verify(args, parser)
        return _cmd_gen(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
