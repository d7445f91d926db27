"""Command-line front end: ``symbreak {analyze,generate,colour,dnum,census}``.

Output is deterministic: JSON is emitted with sorted keys and no timings.
Exit codes: 0 success, 1 census failure, 2 usage or input error, 3 budget
exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Sequence

from . import __version__
from .catalog import CATALOG
from .classifier import classify, verify_theorem
from .colourings.common import InvariantViolation, PreconditionError
from .constructions import ConstructionError, family_names, parse_family
from .distinguishing import DEFAULT_BUDGET, BudgetExceeded, DistinguishingError, distinguishing_index, distinguishing_number
from .formats import FormatError, parse_graph, to_adjacency_text, to_graph6
from .graph import Graph, GraphError, girth, is_connected
from .symmetry import (
    SearchCapReached,
    SymmetryError,
    automorphism_group,
    edge_types,
    local_group,
    transitivity_profile,
)

MIN_BUDGET = 10**4


class UsageError(Exception):
    pass


def _budget(value: str) -> int:
    try:
        b = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"budget must be an integer, got {value!r}") from None
    if b < MIN_BUDGET:
        raise argparse.ArgumentTypeError(f"budget must be at least {MIN_BUDGET}")
    return b


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symbreak", description="Distinguishing colourings of vertex-transitive graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=_budget, default=None,
                        help=f"search node limit (default {DEFAULT_BUDGET}, or $SYMBREAK_BUDGET)")
    common.add_argument("--output", choices=("json", "table"), default="table")
    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--input", help="graph file, '-' for stdin (one graph6 per line, or adjacency text)")
    source.add_argument("--format", choices=("graph6", "adj", "auto"), default="auto")
    source.add_argument("--family", help="built-in graph, e.g. wreath:5, circulant:12,1,2 or a catalog name")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common, source], help="symmetry profile of a graph")
    gen = sub.add_parser("generate", parents=[common], help="print a built-in graph")
    gen.add_argument("--family")
    gen.add_argument("--format", choices=("graph6", "adj"), default="graph6")
    gen.add_argument("--list", action="store_true", help="list family and catalog names instead")
    sub.add_parser("colour", parents=[common, source], help="certificate for a 4-valent vertex-transitive graph")
    dnum = sub.add_parser("dnum", parents=[common, source], help="exact distinguishing number and index")
    dnum.add_argument("--k-max", type=int, default=None)
    census = sub.add_parser("census", parents=[common], help="classify a catalog and check every verdict")
    census.add_argument("--input", help="graph6 file (default: the bundled catalog)")
    census.add_argument("--jobs", type=int, default=1)
    census.add_argument("--confirm-upto", type=int, default=24,
                        help="confirm D = 2 by exact search for graphs up to this order")
    return parser


# -- graph input ----------------------------------------------------------------------


def _catalog_graph(name: str) -> Graph | None:
    for item in CATALOG:
        if item.name == name:
            return item.graph()
    return None


def _family_graph(spec: str) -> Graph:
    g = _catalog_graph(spec)
    if g is not None:
        return g
    try:
        return parse_family(spec)
    except ConstructionError as exc:
        raise UsageError(str(exc)) from None


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _graphs(args: argparse.Namespace) -> list[tuple[str, Graph]]:
    if args.family and args.input:
        raise UsageError("give either --input or --family, not both")
    if args.family:
        return [(args.family, _family_graph(args.family))]
    if not args.input:
        raise UsageError("an input graph is required (--input or --family)")
    text = _read_text(args.input)
    fmt = args.format
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if fmt == "auto":
        fmt = "graph6" if lines and all(_looks_graph6(ln) for ln in lines) else "adj"
    try:
        if fmt == "adj":
            g = parse_graph(text, "adj")
            return [(to_graph6(g), g)]
        return [(ln, parse_graph(ln, "graph6")) for ln in lines]
    except (FormatError, GraphError) as exc:
        raise UsageError(f"cannot parse input: {exc}") from None


def _looks_graph6(line: str) -> bool:
    body = line[len(">>graph6<<"):] if line.startswith(">>graph6<<") else line
    return bool(body) and " " not in body and all(63 <= ord(ch) <= 126 for ch in body)


# -- commands -------------------------------------------------------------------------


def analyze(g: Graph) -> dict:
    group = automorphism_group(g)
    gg = girth(g)
    out: dict = {"graph6": to_graph6(g), "n": g.n, "m": g.m, "valency": g.regular_degree(),
                 "connected": is_connected(g), "girth": None if gg == float("inf") else int(gg),
                 "aut_order": group.order()}
    if not out["connected"]:
        return out
    profile = transitivity_profile(g)
    out.update(vertex_transitive=profile.vertex_transitive, edge_transitive=profile.edge_transitive,
               arc_transitive=profile.arc_transitive, max_s=profile.max_s,
               s_arc_regular_at=profile.s_arc_regular_at)
    if profile.vertex_transitive and g.n > 1:
        out["edge_type_partition"] = list(edge_types(g).vertex_partition)
        out["local_group"] = local_group(g, 0).iso_label
    return out


def _analysis_line(info: dict) -> str:
    words = []
    if info.get("arc_transitive"):
        words.append(f"{info['max_s']}-arc-transitive" if info.get("max_s", 0) > 1 else "arc-transitive")
    elif info.get("edge_transitive") and info.get("vertex_transitive"):
        words.append("half-arc-transitive")
    elif info.get("vertex_transitive"):
        words.append("vertex-transitive")
    else:
        words.append("not vertex-transitive" if info["connected"] else "disconnected")
    if "local_group" in info:
        words.append(f"locally {info['local_group']}")
    words.append("acyclic" if info["girth"] is None else f"girth {info['girth']}")
    words.append(f"|Aut|={info['aut_order']}")
    return ", ".join(words)


def _table(info: dict, keys: Sequence[str]) -> str:
    width = max(len(k) for k in keys)
    return "\n".join(f"{k:<{width}}  {_fmt(info[k])}" for k in keys if k in info)


def _fmt(value) -> str:
    if isinstance(value, list):
        return "(" + ", ".join(str(v) for v in value) + ")"
    return "-" if value is None else str(value)


def _emit_json(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def cmd_analyze(args: argparse.Namespace) -> int:
    for _, g in _graphs(args):
        info = analyze(g)
        if args.output == "json":
            _emit_json(info)
        else:
            print(_analysis_line(info))
            print(_table(info, ["graph6", "n", "m", "valency", "aut_order", "girth", "vertex_transitive",
                                "edge_transitive", "arc_transitive", "max_s", "s_arc_regular_at",
                                "edge_type_partition", "local_group"]))
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    if args.list:
        for name in family_names():
            print(name)
        for item in CATALOG:
            print(item.name)
        return 0
    if not args.family:
        raise UsageError("--family is required unless --list is given")
    g = _family_graph(args.family)
    sys.stdout.write(to_graph6(g) + "\n" if args.format == "graph6" else to_adjacency_text(g))
    return 0


def cmd_colour(args: argparse.Namespace) -> int:
    for _, g in _graphs(args):
        try:
            cert = classify(g, args.budget)
        except PreconditionError as exc:
            raise UsageError(f"graph does not qualify: {exc}") from None
        info = cert.as_dict()
        if args.output == "json":
            _emit_json(info)
        else:
            verdict = (f"exceptional {info['exceptional']}, D={info['D']}" if info["exceptional"]
                       else "distinguishing 2-colouring (verified)")
            print(f"{info['graph6']}: {verdict}")
            print(f"edge types: {_fmt(info['edge_type_partition'])}; branch: {cert.branch}")
            if info["colouring"] is not None:
                print("black: " + " ".join(str(v) for v, col in enumerate(info["colouring"]) if col == 1))
            for step in info["branch_trace"]["steps"]:
                print(f"  {step['rule']}: {step['anchor']}")
    return 0


def cmd_dnum(args: argparse.Namespace) -> int:
    for _, g in _graphs(args):
        if not is_connected(g):
            raise UsageError("distinguishing numbers are computed for connected graphs")
        try:
            d, col = distinguishing_number(g, args.k_max, args.budget)
            di = None
            if g.m > 0:
                di, _ = distinguishing_index(g, args.k_max, args.budget)
        except DistinguishingError as exc:
            raise UsageError(str(exc)) from None
        info = {"graph6": to_graph6(g), "D": d, "D_index": di, "colouring": list(col.colours)}
        if args.output == "json":
            _emit_json(info)
        else:
            print(f"D={d}")
            print(f"D'={_fmt(di)}")
    return 0


def cmd_census(args: argparse.Namespace) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    catalog = None
    if args.input:
        text = _read_text(args.input)
        try:
            catalog = [(ln.strip(), parse_graph(ln.strip(), "graph6")) for ln in text.splitlines() if ln.strip()]
        except (FormatError, GraphError) as exc:
            raise UsageError(f"cannot parse catalog: {exc}") from None
    report = verify_theorem(catalog, jobs=args.jobs, confirm_upto=args.confirm_upto, budget=args.budget)
    sys.stdout.write(report.json_lines() if args.output == "json" else report.table())
    return 0 if report.ok else 1


COMMANDS = {"analyze": cmd_analyze, "generate": cmd_generate, "colour": cmd_colour, "dnum": cmd_dnum,
            "census": cmd_census}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    saved = os.environ.get("SYMBREAK_BUDGET")
    if args.budget is not None:
        # worker processes and nested searches pick the budget up from the environment
        os.environ["SYMBREAK_BUDGET"] = str(args.budget)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"symbreak: error: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceeded, SearchCapReached) as exc:
        print(f"symbreak: search budget exhausted: {exc}", file=sys.stderr)
        return 3
    except (SymmetryError, InvariantViolation) as exc:
        print(f"symbreak: internal check failed: {exc}", file=sys.stderr)
        return 1
    finally:
        if saved is None:
            os.environ.pop("SYMBREAK_BUDGET", None)
        else:
            os.environ["SYMBREAK_BUDGET"] = saved


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
