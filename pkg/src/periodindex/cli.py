"""Command-line front end.

Subcommands: ``bound`` (index bound for one (n, d)), ``table`` (a grid of
bounds), ``homology`` (model homology for an order or a prime power),
``words`` (admissible and auxiliary word enumeration) and ``verify`` (the
oracle cross-check suites).  Data goes to stdout, diagnostics to stderr.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .bounds import compare_bounds, index_bound, is_prime
from .complexes import model_homology, primary_model_homology
from .graded import exponent
from .verify import SUITES, run_suite
from .words import enumerate_words, format_word

FORMATS = ("pretty-table", "json", "csv")


def _use_color() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _green(s: str) -> str:
    return f"\033[32m{s}\033[0m" if _use_color() else s


def _red(s: str) -> str:
    return f"\033[31m{s}\033[0m" if _use_color() else s


def _render_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _emit_csv(headers: list[str], rows: list[list[str]]) -> None:
    print(",".join(headers))
    for row in rows:
        print(",".join(row))


def _cmd_bound(args, parser) -> int:
    if args.n < 1 or args.d < 1:
        parser.error("n and d must be positive integers")
    report = index_bound(args.n, args.d)
    comparison = compare_bounds(args.n, args.d) if args.compare else None

    if args.format == "json":
        payload = report.to_json_dict()
        if comparison is not None:
            payload["comparison"] = comparison.to_json_dict()
        print(json.dumps(payload, sort_keys=True))
        return 0

    sharp = report.known_sharp
    if args.format == "csv":
        headers = ["n", "d", "theorem_a", "corollary_b"]
        row = [str(report.n), str(report.d), str(report.theorem_a_bound),
               str(report.corollary_b_applies).lower()]
        if args.compare:
            headers += ["sharp", "ratio"]
            row += [str(sharp.value) if sharp else "",
                    str(comparison.ratio) if comparison.ratio is not None else ""]
        _emit_csv(headers, [row])
        return 0

    print(f"period n = {report.n}, dimension 2d = {2 * report.d} (d = {report.d})")
    for p, r, bound in report.prime_breakdown:
        print(f"  p = {p}, r = {r}: bound {bound}")
    print(f"theorem_a = {report.theorem_a_bound}")
    print(f"corollary_b_applies = {str(report.corollary_b_applies).lower()}")
    if sharp is not None:
        print(f"sharp = {sharp.value} ({sharp.source})")
    if comparison is not None and comparison.ratio is not None:
        print(f"ratio theorem_a / sharp = {comparison.ratio}")
        if comparison.sharp_improves:
            print("the sharp value strictly improves on theorem_a")
    return 0


def _cmd_table(args, parser) -> int:
    if args.n_max < 1 or args.d_max < 1:
        parser.error("--n-max and --d-max must be positive integers")
    cells = {(n, d): index_bound(n, d).theorem_a_bound
             for n in range(1, args.n_max + 1)
             for d in range(1, args.d_max + 1)}
    if args.format == "json":
        payload = [{"n": n, "d": d, "theorem_a": str(cells[(n, d)])}
                   for n in range(1, args.n_max + 1)
                   for d in range(1, args.d_max + 1)]
        print(json.dumps(payload))
        return 0
    if args.format == "csv":
        rows = [[str(n), str(d), str(cells[(n, d)])]
                for n in range(1, args.n_max + 1)
                for d in range(1, args.d_max + 1)]
        _emit_csv(["n", "d", "theorem_a"], rows)
        return 0
    headers = ["n\\d"] + [str(d) for d in range(1, args.d_max + 1)]
    rows = [[str(n)] + [str(cells[(n, d)]) for d in range(1, args.d_max + 1)]
            for n in range(1, args.n_max + 1)]
    print(_render_table(headers, rows))
    return 0


def _cmd_homology(args, parser) -> int:
    have_n = args.n is not None
    have_pr = args.prime is not None or args.exponent is not None
    if have_n == have_pr:
        parser.error("give either an order n or both --prime and --exponent")
    if args.max_degree < 0:
        parser.error("--max-degree must be >= 0")
    if have_pr:
        if args.prime is None or args.exponent is None:
            parser.error("--prime and --exponent go together")
        if not is_prime(args.prime):
            parser.error(f"{args.prime} is not prime")
        if args.exponent < 1:
            parser.error("--exponent must be >= 1")
        group = primary_model_homology(args.prime, args.exponent, args.max_degree)
    else:
        if args.n < 2:
            parser.error("n must be >= 2")
        group = model_homology(args.n, args.max_degree)

    if args.format == "json":
        print(json.dumps(group.to_json(), sort_keys=True))
        return 0
    rows = []
    for d in range(group.max_degree + 1):
        free, torsion = group.summands(d)
        exp, _ = exponent(group, d)
        rows.append([str(d), group.describe(d), str(exp), str(free),
                     "+".join(str(t) for t in torsion)])
    if args.format == "csv":
        _emit_csv(["degree", "free", "exponent", "torsion"],
                  [[r[0], r[3], r[2], r[4]] for r in rows])
        return 0
    print(_render_table(["degree", "group", "exponent"],
                        [[r[0], r[1], r[2]] for r in rows]))
    return 0


def _cmd_words(args, parser) -> int:
    if not is_prime(args.p):
        parser.error(f"{args.p} is not prime")
    if args.r < 1:
        parser.error("r must be >= 1")
    if args.max_degree < 0:
        parser.error("--max-degree must be >= 0")
    listing = enumerate_words(args.p, args.r, args.max_degree)
    rendered = [(format_word(w, ascii_symbols=args.ascii), deg, ht)
                for w, deg, ht in listing]
    if args.format == "json":
        print(json.dumps(
            [{"word": w, "degree": deg, "height": ht} for w, deg, ht in rendered]))
        return 0
    rows = [[str(deg), str(ht), w] for w, deg, ht in rendered]
    if args.format == "csv":
        _emit_csv(["degree", "height", "word"], rows)
        return 0
    print(_render_table(["degree", "height", "word"], rows))
    return 0


def _cmd_verify(args, parser) -> int:
    results = run_suite(args.suite, seed=args.seed)
    failed = 0
    for res in results:
        if res.passed:
            print(f"{_green('PASS')}  {res.name}")
        else:
            failed += 1
            print(f"{_red('FAIL')}  {res.name}: {res.detail}")
    print(f"{len(results) - failed}/{len(results)} checks passed"
          f" (suite {args.suite}, seed {args.seed})")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="periodindex",
        description="Index bounds for topological Brauer classes and the "
                    "Eilenberg-MacLane homology models behind them.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="pretty-table")

    p_bound = sub.add_parser("bound", help="index bound for period n, dimension 2d")
    p_bound.add_argument("n", type=int)
    p_bound.add_argument("d", type=int)
    p_bound.add_argument("--compare", action="store_true",
                         help="also compare against the best known sharp value")
    add_format(p_bound)
    p_bound.set_defaults(func=_cmd_bound)

    p_table = sub.add_parser("table", help="grid of bounds over n and d ranges")
    p_table.add_argument("--n-max", type=int, required=True)
    p_table.add_argument("--d-max", type=int, required=True)
    add_format(p_table)
    p_table.set_defaults(func=_cmd_table)

    p_hom = sub.add_parser(
        "homology", help="model homology for an order n, or one prime power")
    p_hom.add_argument("n", type=int, nargs="?")
    p_hom.add_argument("--prime", type=int)
    p_hom.add_argument("--exponent", type=int)
    p_hom.add_argument("--max-degree", type=int, required=True)
    add_format(p_hom)
    p_hom.set_defaults(func=_cmd_homology)

    p_words = sub.add_parser("words", help="enumerate admissible and auxiliary words")
    p_words.add_argument("p", type=int)
    p_words.add_argument("r", type=int)
    p_words.add_argument("--max-degree", type=int, required=True)
    p_words.add_argument("--ascii", action="store_true",
                         help="render symbols as s, g, f, y instead of unicode")
    add_format(p_words)
    p_words.set_defaults(func=_cmd_words)

    p_verify = sub.add_parser("verify", help="run the oracle cross-check suites")
    p_verify.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
