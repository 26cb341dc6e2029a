"""Command-line interface.

Exit codes: 0 success, 1 property violation (or a search that is not
exhaustive), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Optional, Sequence

from . import bounds as B
from .bounds import CageParams, InfeasibleTriplet
from .draw import DrawingError, draw_svg
from .families import FAMILIES, build
from .graph import GraphError, SimpleGraph, complete_bipartite, complete_graph, encode_graph6, parse_graph_text, to_edgelist_text
from .search import SearchError, enumerate_graphs, min_order
from .verify import certify, reproduce_tables

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_graph(path: str) -> SimpleGraph:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="ascii").read()
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        return parse_graph_text(text)
    except GraphError as exc:
        raise UsageError(f"cannot parse {path}: {exc}") from None


def _params(nums: Sequence[int]) -> CageParams:
    try:
        if len(nums) == 2:
            return CageParams.regular(nums[0], nums[1])
        if len(nums) == 3:
            return CageParams.biregular(*nums)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError("give either 'k g' (regular) or 'r m g' (biregular)")


def to_dot(g: SimpleGraph) -> str:
    lines = ["graph G {"] + [f"  {v};" for v in range(g.n)] + [f"  {u} -- {v};" for u, v in g.edges] + ["}"]
    return "\n".join(lines) + "\n"


def _serialise(g: SimpleGraph, fmt: str) -> str:
    if fmt == "graph6":
        return encode_graph6(g).decode("ascii") + "\n"
    if fmt == "edgelist":
        return to_edgelist_text(g)
    if fmt == "dot":
        return to_dot(g)
    return draw_svg(g)


def _emit(text: str, out: Optional[str]) -> None:
    if out and out != "-":
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _named_graph(target: str, args: list[str]) -> Optional[SimpleGraph]:
    mk = re.fullmatch(r"K(\d+)", target)
    if mk and not args:
        return complete_graph(int(mk.group(1)))
    mb = re.fullmatch(r"K(\d+),(\d+)", target)
    if mb and not args:
        return complete_bipartite(int(mb.group(1)), int(mb.group(2)))
    if target == "platonic" or target in FAMILIES:
        return build(target, args)
    return None


# --- commands -------------------------------------------------------------


def cmd_construct(ns: argparse.Namespace) -> int:
    g = build(ns.family, ns.params)
    _emit(_serialise(g, ns.format), ns.output)
    return EXIT_OK


def render_report(r: int, m: int, g: int) -> str:
    rep = B.known_bounds_table(r, m, g)
    lines = [
        f"triplet: ({{{r},{m}}};{g})",
        "feasible: yes",
        f"lower: {rep.lower}",
        f"upper: {'unknown' if rep.upper is None else rep.upper}",
        f"exact: {'yes' if rep.exact else 'no'}",
        "sources:",
    ]
    lines += [f"  {name}: {val} [{src}]" for name, val, src in rep.provenance]
    lines.append(f"graphs: {', '.join(rep.graphs) if rep.graphs else '-'}")
    return "\n".join(lines) + "\n"


def cmd_bounds(ns: argparse.Namespace) -> int:
    r, m, g = ns.r, ns.m, ns.g
    try:
        CageParams.biregular(r, m, g)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not B.biregular_feasible(r, m, g):
        sys.stdout.write(f"triplet: ({{{r},{m}}};{g})\ninfeasible: no planar graph; allowed set for girth {g}: {B.violated_set(r, m, g)}\n")
        return EXIT_VIOLATION
    sys.stdout.write(render_report(r, m, g))
    return EXIT_OK


def cmd_table(ns: argparse.Namespace) -> int:
    rows = reproduce_tables(max_m=ns.max_m, max_g=max(ns.max_g, 6))
    which = ns.girth
    if which == "lower":
        keep = [row for row in rows if row.table == "lower"]
    else:
        try:
            gv = int(which)
        except ValueError:
            raise UsageError("table takes 3, 4, 5, 6 (meaning girth >= 6) or 'lower'") from None
        if gv < 3:
            raise UsageError("girth must be at least 3")
        keep = [row for row in rows if row.table != "lower" and (row.g == gv if gv < 6 else row.g >= 6)]
    sys.stdout.write("".join(row.render() + "\n" for row in keep))
    return EXIT_OK


def cmd_check(ns: argparse.Namespace) -> int:
    g = _read_graph(ns.path)
    cert = certify(g, _params(ns.params))
    sys.stdout.write(cert.to_text())
    return EXIT_VIOLATION if cert.violated else EXIT_OK


def cmd_search(ns: argparse.Namespace) -> int:
    params = _params(ns.params)
    if (ns.n is None) == (ns.max_n is None):
        raise UsageError("give exactly one of --n or --max-n")
    if ns.threads < 1:
        raise UsageError("--threads must be positive")
    try:
        if ns.n is not None:
            out = enumerate_graphs(params, ns.n, workers=ns.threads, checkpoint=ns.checkpoint, split_depth=ns.split_depth)
        else:
            if ns.checkpoint:
                raise UsageError("--checkpoint is only supported with --n")
            out = min_order(params, ns.max_n, workers=ns.threads, split_depth=ns.split_depth)
    except InfeasibleTriplet as exc:
        raise UsageError(str(exc)) from None
    except SearchError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(out.render())
    sys.stderr.write(f"elapsed: {out.elapsed:.2f}s\n")
    return EXIT_OK if out.exhaustive else EXIT_VIOLATION


def cmd_draw(ns: argparse.Namespace) -> int:
    g = _named_graph(ns.target, ns.args)
    if g is None:
        if ns.args:
            raise UsageError(f"unknown family {ns.target!r}")
        g = _read_graph(ns.target)
    try:
        svg = draw_svg(g)
    except DrawingError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VIOLATION
    _emit(svg, ns.output)
    return EXIT_OK


# --- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planarcages", description="Planar regular and biregular cages: constructions, bounds, certification and search.")
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("construct", help="build a family member")
    c.add_argument("family", help="platonic or one of: " + ", ".join(FAMILIES))
    c.add_argument("params", nargs="*")
    c.add_argument("--format", choices=("graph6", "edgelist", "dot", "svg"), default="graph6")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    b = sub.add_parser("bounds", help="bounds for n_p({r,m};g)")
    b.add_argument("r", type=int)
    b.add_argument("m", type=int)
    b.add_argument("g", type=int)
    b.set_defaults(func=cmd_bounds)

    t = sub.add_parser("table", help="regenerate a bound table")
    t.add_argument("girth", help="3, 4, 5, 6 (all g >= 6) or 'lower'")
    t.add_argument("--max-m", type=int, default=20)
    t.add_argument("--max-g", type=int, default=12)
    t.set_defaults(func=cmd_table)

    k = sub.add_parser("check", help="certify a graph file ('-' for stdin)")
    k.add_argument("path")
    k.add_argument("params", nargs="+", type=int, help="k g or r m g")
    k.set_defaults(func=cmd_check)

    s = sub.add_parser("search", help="exhaustive search")
    s.add_argument("params", nargs="+", type=int, help="k g or r m g")
    s.add_argument("--n", type=int)
    s.add_argument("--max-n", type=int)
    s.add_argument("--threads", type=int, default=1, help="worker processes")
    s.add_argument("--checkpoint")
    s.add_argument("--split-depth", type=int, default=3, help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_search)

    d = sub.add_parser("draw", help="SVG drawing of a family member, K<n>, K<a>,<b> or a graph file")
    d.add_argument("target")
    d.add_argument("args", nargs="*")
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_draw)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
