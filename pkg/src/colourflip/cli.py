"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 node budget exceeded,
64 usage error, 65 unreadable input data.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

from .checks import run_checks
from .colouring import (
    ColourScheme,
    count_coloured,
    enumerate_coloured,
    flippable_diagonals,
    is_frozen,
)
from .flipgraph import (
    BudgetExceeded,
    build_flip_graph,
    census,
    component_of,
    default_budget,
    independent_flippable_sets,
)
from .formats import (
    DataError,
    analysis_json,
    census_csv,
    census_json,
    component_dot,
    component_json,
    dump_coloured,
    dump_triangulation,
    graph_dot,
    graph_json,
    load_coloured,
)
from .polygon import iter_triangulations
from .signed import (
    colouring,
    decide_equivalence,
    is_alternating,
    uses_four_colours,
    valuation,
    weighting,
)

EXIT_OK, EXIT_FAIL, EXIT_BUDGET, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 64, 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    n_vertices: int
    m: int = 2
    sigma: str = "cyclic"
    node_budget: int = 10_000_000
    worker_count: int = 1
    output_format: str = "csv"
    drop_isolated: bool = False
    output_path: Optional[str] = None
    header: bool = False

    def __post_init__(self):
        if self.n_vertices < 3:
            raise UsageError("--vertices must be at least 3")
        if self.m < 1:
            raise UsageError("--colours must be at least 1")
        if self.node_budget < 1:
            raise UsageError("--budget must be at least 1")
        if self.worker_count < 1:
            raise UsageError("--workers must be at least 1")
        try:
            self.scheme = ColourScheme.parse(self.sigma, self.m)
        except ValueError as exc:
            raise UsageError(f"--sigma: {exc}") from None


def _config(args, default_format: str) -> RunConfig:
    return RunConfig(
        n_vertices=args.vertices,
        m=args.colours,
        sigma=args.sigma,
        node_budget=args.budget if args.budget is not None else default_budget(),
        worker_count=args.workers,
        output_format=args.format or default_format,
        drop_isolated=getattr(args, "drop_isolated", False),
        output_path=args.out,
        header=getattr(args, "header", False),
    )


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _graph_options(p: argparse.ArgumentParser, formats, need_vertices=True) -> None:
    p.add_argument("--vertices", "-n", type=int, required=need_vertices)
    p.add_argument("--colours", "-m", type=int, default=2)
    p.add_argument("--sigma", default="cyclic",
                   help='"cyclic" or an image array such as "1,0,3,2"')
    p.add_argument("--budget", type=int, default=None,
                   help="node budget (default 10^7 or $FLIPGRAPH_BUDGET)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=formats, default=None)
    p.add_argument("--out", default=None)


def cmd_census(args) -> int:
    cfg = _config(args, "csv")
    hist = census(cfg.n_vertices, cfg.scheme, cfg.node_budget, cfg.worker_count)
    if cfg.output_format == "json":
        text = census_json(hist, cfg.n_vertices, cfg.m)
    else:
        text = census_csv(hist, cfg.header)
    _emit(text, cfg.output_path)
    if args.figure:
        from .report import plot_census
        plot_census(hist, args.figure, f"{cfg.n_vertices}-gon, {cfg.m} colours")
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = _config(args, "csv")
    if cfg.m != 2 or not cfg.scheme.is_default():
        raise UsageError("verify runs the two-colour cyclic suite; use --colours 2")
    sample = 1000 if cfg.n_vertices >= 9 else None
    checks = run_checks(cfg.n_vertices, cfg.node_budget, cfg.worker_count,
                        weighting_sample=sample)
    _emit("".join(c.line() + "\n" for c in checks), cfg.output_path)
    return EXIT_OK if all(c.ok or c.advisory for c in checks) else EXIT_FAIL


def cmd_export(args) -> int:
    cfg = _config(args, "dot")
    if args.ct:
        ct = load_coloured(args.ct)
        if ct.n != cfg.n_vertices:
            raise DataError(f"{args.ct}: field 'n': expected {cfg.n_vertices}, got {ct.n}")
        comp = component_of(ct, cfg.scheme, cfg.node_budget)
        text = component_dot(comp) if cfg.output_format == "dot" else \
            json.dumps(component_json(comp)) + "\n"
    else:
        graph = build_flip_graph(cfg.n_vertices, cfg.scheme, cfg.node_budget, cfg.worker_count)
        text = graph_dot(graph, cfg.drop_isolated) if cfg.output_format == "dot" else \
            graph_json(graph, cfg.drop_isolated)
    _emit(text, cfg.output_path)
    return EXIT_OK


def cmd_component(args) -> int:
    ct = load_coloured(args.file)
    try:
        scheme = ColourScheme.parse(args.sigma, args.colours)
    except ValueError as exc:
        raise UsageError(f"--sigma: {exc}") from None
    if max(ct.colours) >= scheme.m:
        raise DataError(f"{args.file}: field 'colours': colour {max(ct.colours)} "
                        f"out of range for --colours {scheme.m}")
    budget = args.budget if args.budget is not None else default_budget()
    comp = component_of(ct, scheme, budget)
    fmt = args.format or "json"
    text = component_dot(comp) if fmt == "dot" else json.dumps(component_json(comp), indent=2) + "\n"
    _emit(text, args.out)
    if args.figure:
        from .report import plot_component
        plot_component(comp, args.figure)
    return EXIT_OK


def analyze(ct) -> dict:
    report = {
        "key": ct.key,
        "faces": [list(f) for f in ct.faces],
        "frozen": is_frozen(ct),
        "flippable": [list(d) for d in flippable_diagonals(ct)],
        "independent_flips": [list(d) for d in independent_flippable_sets(ct)],
    }
    if max(ct.colours) <= 1:
        col = colouring(ct)
        report.update({
            "weighting": list(weighting(ct)),
            "valuation": list(valuation(ct)),
            "colouring": list(col),
            "four_colours": uses_four_colours(col),
            "alternating": is_alternating(ct),
        })
    return report


def cmd_analyze(args) -> int:
    ct = load_coloured(args.file)
    _emit(analysis_json(analyze(ct)), args.out)
    if args.figure:
        from .report import plot_triangulations
        plot_triangulations([ct], args.figure)
    return EXIT_OK


def cmd_equiv(args) -> int:
    a, b = load_coloured(args.file1), load_coloured(args.file2)
    if a.n != b.n:
        raise DataError(f"{args.file2}: field 'n': polygon sizes differ ({a.n} vs {b.n})")
    _emit("equivalent\n" if decide_equivalence(a, b) else "not-equivalent\n", args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    n = args.vertices
    if n < 3:
        raise UsageError("--vertices must be at least 3")
    budget = args.budget if args.budget is not None else default_budget()
    if args.colours == 0:
        lines = (dump_triangulation(t) for t in iter_triangulations(n))
    else:
        total = count_coloured(n, args.colours)
        if total > budget:
            raise BudgetExceeded(f"{total} states exceed the node budget of {budget}")
        lines = (dump_coloured(ct, args.colours) for ct in enumerate_coloured(n, args.colours))
    _emit("".join(lines), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="colourflip",
                     description="Coloured flip graphs of convex polygon triangulations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("census", help="component-size histogram")
    _graph_options(p, ("csv", "json"))
    p.add_argument("--header", action="store_true")
    p.add_argument("--figure", help="also write a bar chart (png/svg/pdf)")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run the invariant suite")
    _graph_options(p, ("csv",))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="DOT or JSON export of a graph or component")
    _graph_options(p, ("dot", "json"))
    p.add_argument("--drop-isolated", action="store_true")
    p.add_argument("--ct", help="export only the component of this coloured triangulation")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("component", help="component containing a coloured triangulation")
    p.add_argument("file")
    _graph_options(p, ("json", "dot"), need_vertices=False)
    p.add_argument("--figure")
    p.set_defaults(func=cmd_component)

    p = sub.add_parser("analyze", help="weighting, valuation, colouring of one triangulation")
    p.add_argument("file")
    p.add_argument("--out")
    p.add_argument("--figure")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("equiv", help="decide flip equivalence of two signed triangulations")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--out")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("enumerate", help="list (coloured) triangulations as JSON lines")
    p.add_argument("--vertices", "-n", type=int, required=True)
    p.add_argument("--colours", "-m", type=int, default=0,
                   help="0 lists uncoloured triangulations")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"colourflip: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"colourflip: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except DataError as exc:
        print(f"colourflip: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
