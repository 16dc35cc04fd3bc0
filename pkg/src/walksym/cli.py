"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 input or data error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .electrical import hitting_matrix, resistance_matrix
from .enumeration import enumerate_connected
from .errors import InternalCheckError, WalksymError
from .exact import format_rational
from .graph import FAMILIES, make_family, parse_graph6, read_graph6_lines, write_graph6
from .scanner import classify, r_pi_spectrum, scan_stream, spectrum_csv
from .walks import closed_walk_count_profile, simulate_return_frequency

GRAMMAR = """\
subcommands:
  analyze <G6|file> [--json] [--tmax T]
  gen <family> [params]          families: {families}
  enumerate <n>                  1 <= n <= 7
  scan <file.g6> --filter <expr> [--filter <expr> ...] [--jobs N] [--out file.json]
  spectrum <file.g6> [--csv file]
  simulate <G6> --vertex v --steps t --trials T --seed S [--json]
  hitting <G6> [--json]
  resistance <G6> [--json]
filter expressions: conjunctions of flags, negation with ¬ or !, e.g. "walk_regular ∧ ¬vertex_transitive"
""".format(families=", ".join(FAMILIES))


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load(arg: str):
    """Graphs from a .g6 file path, or a single inline graph6 string."""
    # '/' and '.' never occur in graph6, so such arguments are paths even when missing
    if os.path.isfile(arg) or os.sep in arg or arg.endswith(".g6"):
        with open(arg, encoding="latin-1") as fh:
            return [g for _, g in read_graph6_lines(fh)]
    return [parse_graph6(arg)]


def _fmt_table(matrix) -> str:
    cells = [[format_rational(x) for x in row] for row in matrix]
    width = max(len(c) for row in cells for c in row)
    n = len(cells)
    head = " " * 4 + " ".join(f"{j:>{width}}" for j in range(n))
    lines = [head] + [f"{i:>3} " + " ".join(f"{c:>{width}}" for c in row) for i, row in enumerate(cells)]
    return "\n".join(lines)


def _yes(b):
    return "yes" if b else "no"


def _report_text(rep) -> str:
    lines = [
        f"graph6: {rep.graph6}",
        f"n = {rep.n}, m = {rep.m}",
        f"regular: {_yes(rep.regular)}" + (f" (degree {rep.degree})" if rep.regular else ""),
        f"walk-regular: {_yes(rep.walk_regular)}",
        f"equal return probabilities: {_yes(rep.return_condition)}",
        f"vertex-transitive: {_yes(rep.vertex_transitive)}",
        f"distance-regular: {_yes(rep.distance_regular)}"
        + (f" {rep.intersection_array}" if rep.intersection_array is not None else ""),
        f"reversible: {_yes(rep.reversible)}",
        "R_d: " + (" ".join(format_rational(q) for q in rep.r_d) if rep.r_d else "-"),
        "R_pi: " + (format_rational(rep.r_pi) if rep.r_pi is not None else "-"),
        "spectral gap: " + (f"{rep.spectral_gap:.12f}" if rep.spectral_gap is not None else "-"),
        f"max |H_xy - H_yx|: {format_rational(rep.max_hitting_asymmetry)}",
    ]
    return "\n".join(lines)


def _profile_dict(profile):
    return {
        "tmax": profile.tmax,
        "counts": [list(row) for row in profile.counts],
        "return_probs": [[format_rational(q) for q in row] for row in profile.return_probs],
    }


def cmd_analyze(args, out):
    graphs = _load(args.graph)
    for i, g in enumerate(graphs):
        rep = classify(g)
        profile = closed_walk_count_profile(g, args.tmax) if args.tmax is not None else None
        if args.json:
            d = rep.to_dict()
            if profile is not None:
                d["profile"] = _profile_dict(profile)
            out.write(json.dumps(d, ensure_ascii=False) + "\n")
            continue
        if i:
            out.write("\n")
        out.write(_report_text(rep) + "\n")
        if profile is not None:
            out.write("closed walks / return probabilities by length:\n")
            for t in range(profile.tmax + 1):
                counts = " ".join(map(str, profile.counts[t]))
                probs = " ".join(format_rational(q) for q in profile.return_probs[t])
                out.write(f"  t={t}: {counts} | {probs}\n")


def cmd_gen(args, out):
    out.write(write_graph6(make_family(args.family, *args.params)) + "\n")


def cmd_enumerate(args, out):
    for g in enumerate_connected(args.n):
        out.write(write_graph6(g) + "\n")


def cmd_scan(args, out):
    summary = scan_stream(_load(args.file), args.filter, jobs=args.jobs)
    text = summary.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_spectrum(args, out):
    spectrum = r_pi_spectrum(_load(args.file))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(spectrum_csv(spectrum))
    out.write(f"{len(spectrum)} distinct R_pi values\n")
    for value, witness in spectrum:
        out.write(f"{format_rational(value):>12}  {float(value):.10f}  {witness}\n")


def cmd_simulate(args, out):
    (g,) = _load(args.graph)[:1]
    est = simulate_return_frequency(g, args.vertex, args.steps, args.trials, args.seed)
    exact = closed_walk_count_profile(g, args.steps).return_probs[args.steps][args.vertex]
    z = (est.point - float(exact)) / est.stderr if est.stderr > 0 else None
    if args.json:
        d = {
            "graph6": write_graph6(g),
            "vertex": args.vertex,
            "steps": args.steps,
            "trials": est.trials,
            "seed": est.seed,
            "point": est.point,
            "stderr": est.stderr,
            "exact": format_rational(exact),
            "z": z,
        }
        out.write(json.dumps(d) + "\n")
        return
    out.write(f"graph6: {write_graph6(g)}  vertex {args.vertex}  steps {args.steps}\n")
    out.write(f"estimate: {est.point:.6f} +/- {est.stderr:.6f}  (trials {est.trials}, seed {est.seed})\n")
    out.write(f"exact:    {format_rational(exact)} = {float(exact):.6f}\n")
    out.write("deviation: " + ("n/a (zero standard error)" if z is None else f"{z:+.3f} standard errors") + "\n")


def _matrix_cmd(fn, label):
    def run(args, out):
        for i, g in enumerate(_load(args.graph)):
            mat = fn(g)
            if args.json:
                d = {"graph6": write_graph6(g), label: [[format_rational(x) for x in row] for row in mat]}
                out.write(json.dumps(d) + "\n")
                continue
            if i:
                out.write("\n")
            out.write(f"{label} for {write_graph6(g)} (row x, column y)\n")
            out.write(_fmt_table(mat) + "\n")

    return run


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="walksym", description="Exact random-walk symmetry checks for small graphs.",
                formatter_class=argparse.RawDescriptionHelpFormatter, epilog=GRAMMAR)
    p.add_argument("--version", action="version", version=f"walksym {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    a = sub.add_parser("analyze", help="classify graphs")
    a.add_argument("graph", help="graph6 string or .g6 file")
    a.add_argument("--json", action="store_true")
    a.add_argument("--tmax", type=int, help="also print closed-walk profiles up to this length")
    a.set_defaults(func=cmd_analyze)

    gen = sub.add_parser("gen", help="emit a standard family in graph6")
    gen.add_argument("family", choices=FAMILIES)
    gen.add_argument("params", nargs="*", type=int)
    gen.set_defaults(func=cmd_gen)

    e = sub.add_parser("enumerate", help="connected graphs on n vertices, one per class")
    e.add_argument("n", type=int)
    e.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("scan", help="classify a .g6 corpus")
    s.add_argument("file")
    s.add_argument("--filter", action="append", default=[], metavar="EXPR")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out")
    s.set_defaults(func=cmd_scan)

    sp = sub.add_parser("spectrum", help="sorted R_pi values of the reversible graphs in a corpus")
    sp.add_argument("file")
    sp.add_argument("--csv")
    sp.set_defaults(func=cmd_spectrum)

    sim = sub.add_parser("simulate", help="Monte Carlo return frequency next to the exact value")
    sim.add_argument("graph")
    sim.add_argument("--vertex", type=int, required=True)
    sim.add_argument("--steps", type=int, required=True)
    sim.add_argument("--trials", type=int, required=True)
    sim.add_argument("--seed", type=int, required=True)
    sim.add_argument("--json", action="store_true")
    sim.set_defaults(func=cmd_simulate)

    for name, fn, label in (("hitting", hitting_matrix, "hitting times"), ("resistance", resistance_matrix, "effective resistance")):
        c = sub.add_parser(name, help=f"all-pairs {label}")
        c.add_argument("graph")
        c.add_argument("--json", action="store_true")
        c.set_defaults(func=_matrix_cmd(fn, label))
    return p


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be >= 1")
    except UsageError as exc:
        err.write(f"walksym: usage error: {exc}\n{parser.format_usage()}{GRAMMAR}")
        return 1
    try:
        args.func(args, out)
    except (WalksymError, OSError) as exc:
        err.write(f"walksym: error: {exc}\n")
        return 2
    except InternalCheckError as exc:
        err.write(f"walksym: internal check failed: {exc}\n")
        return 2
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
