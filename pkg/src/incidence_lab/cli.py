"""Command-line front end: analyze, verify, generate, search, plot.

Exit codes are part of the contract: 0 on success, 1 on input or usage
errors, 2 when a proven check fails (a bug sentinel: the underlying
mathematics is proven, so a red check means broken code, not bad input).
The conjectural floor(n/2) status never influences the exit code.
"""

from __future__ import annotations

import argparse
import sys

from .arrangement import build_arrangement
from .errors import IncidenceLabError, SearchSpaceTooLargeError
from .generators import (
    grid,
    near_pencil,
    random_integer,
    two_lines_crossing,
    two_lines_parallel,
)
from .pointfile import load_point_file, write_point_file
from .report import (
    analyze_configuration,
    dumps_document,
    proven_checks_pass,
    report_document,
    search_document,
)
from .search import SearchSpec, run_search
from .svgplot import render_svg


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit 1 (2 is reserved)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_analyze(args) -> int:
    analysis = analyze_configuration(load_point_file(args.input))
    text = dumps_document(report_document(analysis))
    _write_output(text, None if args.stdout else args.json)
    if not proven_checks_pass(analysis):
        print(
            "proven check failed: this indicates a bug, not bad input",
            file=sys.stderr,
        )
        return 2
    return 0


def _cmd_verify(args) -> int:
    analysis = analyze_configuration(load_point_file(args.input))
    s = analysis.stats
    lines = [
        f"n={s.n} lines={s.line_count} max_degree={s.max_degree} "
        f"witness_index={s.witness_index} max_collinear={s.max_collinear}"
    ]
    for identity in (analysis.lemma1, analysis.lemma2):
        status = "ok" if identity.equal else "MISMATCH"
        lines.append(
            f"{identity.label}: {identity.lhs} == {identity.rhs} {status}"
        )
    for verdict in (analysis.hirzebruch, analysis.bojanowski, analysis.degree_sum):
        if verdict.applicable:
            status = "satisfied" if verdict.satisfied else "VIOLATED"
            lines.append(
                f"{verdict.name}: lhs_q={verdict.lhs_q} rhs_q={verdict.rhs_q} "
                f"slack_q={verdict.slack_q} {status}"
            )
        else:
            lines.append(f"{verdict.name}: not applicable")
    if analysis.bounds is None:
        lines.append("bounds: skipped (collinear configuration)")
    else:
        for entry in analysis.bounds.entries:
            status = "met" if entry.met else "NOT MET"
            tag = " (conjectural)" if entry.conjectural else ""
            lines.append(f"{entry.name}: threshold={entry.threshold} {status}{tag}")
    print("\n".join(lines))
    return 0 if proven_checks_pass(analysis) else 2


def _cmd_generate(args) -> int:
    if args.family == "two-lines-parallel":
        config = two_lines_parallel(args.k)
        spec_text = f"two-lines-parallel {args.k}"
    elif args.family == "two-lines-crossing":
        config = two_lines_crossing(args.k, args.include_intersection)
        spec_text = f"two-lines-crossing {args.k}"
        if args.include_intersection:
            spec_text += " --include-intersection"
    elif args.family == "near-pencil":
        config = near_pencil(args.n)
        spec_text = f"near-pencil {args.n}"
    elif args.family == "grid":
        config = grid(args.width, args.height)
        spec_text = f"grid {args.width} {args.height}"
    else:
        config = random_integer(args.n, args.range, args.seed)
        spec_text = f"random {args.n} {args.range} {args.seed}"
    text = write_point_file(
        config, header=[f"incidence-lab generate {spec_text}", f"n = {config.n}"]
    )
    _write_output(text, args.output)
    return 0


def _cmd_search(args) -> int:
    spec = SearchSpec(
        n=args.n,
        grid_size=args.grid,
        mode=args.mode,
        budget=args.budget,
        seed=args.seed,
    )
    result = run_search(spec)
    _write_output(dumps_document(search_document(result)), args.json)
    if result.best_max_degree < result.theorem_floor:
        print(
            f"best_max_degree {result.best_max_degree} under the proven floor "
            f"{result.theorem_floor}: this indicates a bug",
            file=sys.stderr,
        )
        return 2
    return 0


def _cmd_plot(args) -> int:
    config = load_point_file(args.input)
    stats = build_arrangement(config)
    if stats.max_collinear == stats.n:
        print("warning: all points are collinear", file=sys.stderr)
    svg = render_svg(config, stats, width=args.width, rich_min=args.rich_min)
    _write_output(svg, args.output)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(
        prog="incidence-lab",
        description="Exact determined-line statistics, bound verdicts, and "
        "extremal searches for planar point sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="full JSON report for a point file")
    analyze.add_argument("input", help="point file path")
    group = analyze.add_mutually_exclusive_group()
    group.add_argument("--json", metavar="PATH", help="write the report here")
    group.add_argument(
        "--stdout", action="store_true", help="print the report (default)"
    )
    analyze.set_defaults(func=_cmd_analyze)

    verify = sub.add_parser(
        "verify", help="like analyze, but print only verdict lines"
    )
    verify.add_argument("input", help="point file path")
    verify.set_defaults(func=_cmd_verify)

    out_opt = _Parser(add_help=False)
    out_opt.add_argument(
        "-o", "--output", metavar="PATH", help="output file (default stdout)"
    )
    generate = sub.add_parser("generate", help="write a named-family point file")
    families = generate.add_subparsers(dest="family", required=True)
    p = families.add_parser("two-lines-parallel", parents=[out_opt])
    p.add_argument("k", type=int, help="points per line")
    p = families.add_parser("two-lines-crossing", parents=[out_opt])
    p.add_argument("k", type=int, help="points per line")
    p.add_argument(
        "--include-intersection",
        action="store_true",
        help="share the origin between the two lines",
    )
    p = families.add_parser("near-pencil", parents=[out_opt])
    p.add_argument("n", type=int, help="total points (n-1 collinear + apex)")
    p = families.add_parser("grid", parents=[out_opt])
    p.add_argument("width", type=int)
    p.add_argument("height", type=int)
    p = families.add_parser("random", parents=[out_opt])
    p.add_argument("n", type=int, help="number of points")
    p.add_argument("range", type=int, help="coordinates drawn from [-range, range]")
    p.add_argument("seed", type=int)
    generate.set_defaults(func=_cmd_generate)

    search = sub.add_parser("search", help="minimize max degree over grid subsets")
    search.add_argument("--n", type=int, required=True, help="points per subset")
    search.add_argument("--grid", type=int, required=True, help="grid side length")
    search.add_argument(
        "--mode", choices=("exhaustive", "hill_climb"), default="exhaustive"
    )
    search.add_argument("--budget", type=int, help="hill_climb evaluation budget")
    search.add_argument("--seed", type=int, help="hill_climb random seed")
    search.add_argument("--json", metavar="PATH", help="write the result here")
    search.set_defaults(func=_cmd_search)

    plot = sub.add_parser("plot", help="render points and lines as SVG")
    plot.add_argument("input", help="point file path")
    plot.add_argument("-o", "--output", metavar="PATH", help="SVG path (default stdout)")
    plot.add_argument("--width", type=int, default=640, help="image width in px")
    plot.add_argument(
        "--rich-min", type=int, default=2, help="draw only lines with at least r points"
    )
    plot.set_defaults(func=_cmd_plot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SearchSpaceTooLargeError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 1
    except IncidenceLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
