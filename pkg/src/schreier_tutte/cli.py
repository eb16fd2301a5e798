"""Command-line entry point: ``schreier-tutte {generate,tutte,eval,verify,report}``.

Exit codes: 0 success, 1 usage error, 2 verification mismatch.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import TextIO

from . import bipoly
from .invariants.ising import ising_identity_check
from .multigraph import GraphError, parse_edge_list, strip_loops, to_dot, to_edge_list
from .pipeline import evaluation_report, level_graph, level_tutte, run_checks
from .report import render_figures, table_csv, table_latex
from .schreier import GROUPS, LevelCapExceeded
from .tutte import MethodInapplicable, ResourceLimitExceeded, TutteMethod, tutte

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2

WHAT_KEYS = {
    "complexity": "tau",
    "connected": "connected_spanning",
    "forests": "forests",
    "acyclic": "acyclic",
    "chromatic": "chromatic",
    "reliability": "reliability",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schreier-tutte", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    groups = sorted(GROUPS)

    def common(p, level=True, need_group=True):
        p.add_argument("--group", choices=groups, required=need_group)
        if level:
            p.add_argument("--level", type=_positive, required=need_group)
        p.add_argument("--output", "-o", help="write to FILE instead of stdout")

    p = sub.add_parser("generate", help="emit a Schreier graph")
    common(p)
    p.add_argument("--strip-loops", action="store_true")
    p.add_argument("--format", choices=("edges", "dot", "json"), default="edges")

    p = sub.add_parser("tutte", help="Tutte polynomial of a Schreier graph or an input graph")
    common(p, need_group=False)
    p.add_argument("--input", help="graph in edge-list format; '-' reads stdin")
    p.add_argument("--strip-loops", action="store_true")
    p.add_argument("--method", choices=[m.value for m in TutteMethod], default="auto")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")

    p = sub.add_parser("eval", help="special evaluations at one level")
    common(p)
    p.add_argument("--what", choices=[*WHAT_KEYS, "ising", "all"], default="all")
    p.add_argument("--format", choices=("json", "latex", "csv", "text"), default="text")

    p = sub.add_parser("verify", help="run every cross-check for levels 1..N")
    common(p, level=False)
    p.add_argument("--max-level", type=_positive, required=True)
    p.add_argument("--jobs", type=_positive, default=1)

    p = sub.add_parser("report", help="table of evaluations for levels 1..N plus figures")
    common(p, level=False)
    p.add_argument("--max-level", type=_positive, required=True)
    p.add_argument("--format", choices=("csv", "latex"), default="csv")
    p.add_argument("--figure-dir", help="directory for PNG figures (default: next to --output)")
    p.add_argument("--no-figures", action="store_true")
    return parser


def _open_output(path: str | None) -> TextIO:
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w", encoding="utf-8")


def _write_poly(stream: TextIO, p: bipoly.BiPoly, fmt: str) -> None:
    """Write term by term so huge polynomials are never joined into one string."""
    if fmt == "json":
        stream.write("[")
        for k, ((i, j), c) in enumerate(p.items()):
            stream.write(("," if k else "") + f'[{i},{j},"{c}"]')
        stream.write("]\n")
        return
    stream.write(bipoly.serialize(p, fmt) + "\n")


def _cmd_generate(args, out: TextIO) -> int:
    g = level_graph(args.group, args.level, loops=not args.strip_loops)
    if args.format == "edges":
        out.write(to_edge_list(g))
    elif args.format == "dot":
        out.write(to_dot(g, f"{args.group}_{args.level}"))
    else:
        json.dump({"group": args.group, "level": args.level, "vertices": g.vertex_count,
                   "edges": [[e.u, e.v, e.label] for e in g.edges]}, out)
        out.write("\n")
    return EXIT_OK


def _read_graph(source: str):
    if source == "-":
        text = sys.stdin.read()
    else:
        text = Path(source).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        from .multigraph import build

        return build(data["vertices"], [tuple(e[:2]) + tuple(e[2:3]) for e in data["edges"]])
    return parse_edge_list(text)


def _cmd_tutte(args, out: TextIO) -> int:
    if args.input is not None:
        g = _read_graph(args.input)
        if args.strip_loops:
            g = strip_loops(g)
        T = tutte(g, args.method)
    elif args.group and args.level:
        if args.method == "auto":
            T = level_tutte(args.group, args.level, loops=not args.strip_loops)
        else:
            T = tutte(level_graph(args.group, args.level, loops=not args.strip_loops), args.method)
    else:
        raise UsageError("give --group and --level, or --input FILE")
    _write_poly(out, T, args.format)
    return EXIT_OK


def _cmd_eval(args, out: TextIO) -> int:
    report = evaluation_report(args.group, args.level, ising=args.what in ("ising", "all"))
    values = report.values()
    if args.what == "ising":
        gs = level_graph(args.group, args.level, loops=False)
        check = ising_identity_check(args.group, args.level, gs, level_tutte(args.group, args.level, False),
                                     oracle=False)
        values = {"ising": check.sides["tutte"].to_text("t"),
                  "ising_identity": "pass" if check.ok else "fail"}
    elif args.what != "all":
        key = WHAT_KEYS[args.what]
        values = {key: values[key]}
    else:
        values["ising_identity"] = "pass" if report.ising_identity else "fail"

    if args.format == "json":
        if args.what == "all":
            checks = [c.as_dict() for c in run_checks(args.group, args.level, ising_oracle=False)]
            json.dump({"group": args.group, "level": args.level, "values": values, "checks": checks}, out)
        else:
            json.dump(values, out)
        out.write("\n")
    elif args.format == "csv":
        out.write(",".join(values) + "\n")
        out.write(",".join(f'"{v}"' if "," in v else v for v in values.values()) + "\n")
    elif args.format == "latex":
        out.write("\\begin{tabular}{ll}\n")
        for k, v in values.items():
            out.write(f"{k.replace('_', chr(92) + '_')} & ${v}$ \\\\\n")
        out.write("\\end{tabular}\n")
    else:
        for k, v in values.items():
            out.write(f"{k}: {v}\n")
    return EXIT_OK


def _verify_level(group: str, n: int):
    return n, run_checks(group, n)


def _cmd_verify(args, out: TextIO) -> int:
    levels = range(1, args.max_level + 1)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_level, [args.group] * len(levels), levels))
    else:
        results = [_verify_level(args.group, n) for n in levels]
    failures = 0
    for n, checks in sorted(results):
        for c in checks:
            line = f"{args.group} n={n} {c.status.upper():4} {c.name}"
            if c.detail and c.status != "pass":
                line += f" -- {c.detail}"
            out.write(line + "\n")
            if c.status == "fail":
                failures += 1
                if failures == 1:
                    print(f"first mismatch: {args.group} n={n} {c.name}: {c.detail}", file=sys.stderr)
    out.write(f"{args.group}: {failures} failing checks over levels 1..{args.max_level}\n")
    return EXIT_MISMATCH if failures else EXIT_OK


def _cmd_report(args, out: TextIO) -> int:
    reports = [evaluation_report(args.group, n) for n in range(1, args.max_level + 1)]
    out.write(table_csv(reports) if args.format == "csv" else table_latex(reports))
    if not args.no_figures:
        if args.figure_dir:
            fig_dir = Path(args.figure_dir)
        elif args.output:
            fig_dir = Path(args.output).resolve().parent
        else:
            fig_dir = Path.cwd()
        for path in render_figures(reports, fig_dir, f"{args.group}_report"):
            print(f"wrote {path}", file=sys.stderr)
    failed = [r.level for r in reports if r.ising_identity is False]
    return EXIT_MISMATCH if failed else EXIT_OK


COMMANDS = {
    "generate": _cmd_generate,
    "tutte": _cmd_tutte,
    "eval": _cmd_eval,
    "verify": _cmd_verify,
    "report": _cmd_report,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required")
    except UsageError as exc:
        print(f"error: {exc}\nhint: run 'schreier-tutte --help' for usage", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    out = _open_output(args.output)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}\nhint: run 'schreier-tutte {args.command} --help'", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, LevelCapExceeded, MethodInapplicable, ResourceLimitExceeded, ValueError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if out is not sys.stdout:
            out.close()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
