"""Command-line interface: ``randic <command> ...``.

Graph inputs are accepted as a graph6 string, a family spec such as
``sun:3`` or ``double-sun:3,2``, or a path to a file holding either one
graph6 line or an edge list (``n m`` header then ``u v`` lines).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .bounds import check_all
from .closed_forms import cross_validate
from .families import CONNECTED_GRAPH_MAX_N, TREE_MAX_N, from_family_spec
from .graph import Graph, GraphFormatError, is_connected, is_tree, parse_edgelist, parse_graph6, to_edgelist, to_graph6
from .inertia import inertia, parse_shift
from .spectra import (
    IsolatedVertexError,
    adjacency_matrix,
    eigenvalues,
    laplacian_matrix,
    normalized_laplacian,
    nullity,
    randic_index_minus1,
    randic_matrix,
    trace_R2,
)
from .sweep import sweep_connected, sweep_graph6_file, sweep_trees, tree_extremes

CSV_VERSION = "randic-csv v1"

_MATRICES = {
    "randic": (randic_matrix, lambda g: 0.0),
    "nlap": (normalized_laplacian, lambda g: 1.0),
    "adjacency": (adjacency_matrix, lambda g: 0.0),
    "laplacian": (laplacian_matrix, lambda g: 2.0 * g.m / g.n),
}


class CLIError(Exception):
    pass


def read_graph(text: str) -> Graph:
    """Interpret a command-line graph argument."""
    if os.path.isfile(text):
        with open(text) as fh:
            content = fh.read()
        lines = [ln for ln in content.splitlines() if ln.strip()]
        if not lines:
            raise CLIError(f"{text}: empty file")
        if len(lines[0].split()) == 2:
            return parse_edgelist(content)
        if len(lines) != 1:
            raise CLIError(f"{text}: expected a single graph6 line, found {len(lines)}")
        return parse_graph6(lines[0])
    if ":" in text:
        return from_family_spec(text)
    return parse_graph6(text)


def _emit_json(obj, out) -> None:
    json.dump(obj, out, indent=2, sort_keys=False)
    out.write("\n")


def _emit_csv(kind: str, header: Sequence[str], rows: Sequence[Sequence], out) -> None:
    out.write(f"# {CSV_VERSION} {kind}\n")
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def _fmt(x) -> str:
    return "" if x is None else repr(x) if isinstance(x, float) else str(x)


# --- commands ---------------------------------------------------------------


def cmd_spectrum(args, out) -> None:
    g = read_graph(args.input)
    build, center = _MATRICES[args.matrix]
    spec = eigenvalues(build(g), args.zero_tol)
    report = {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "matrix": args.matrix,
        "eigenvalues": list(spec.values),
        "energy": spec.energy(center(g)),
        "nullity": nullity(g, args.zero_tol),
        "trace_R2": trace_R2(g),
        "randic_index_minus1": randic_index_minus1(g),
    }
    if args.format == "csv":
        keys = [k for k in report if k != "eigenvalues"] + ["eigenvalues"]
        row = [_fmt(report[k]) for k in keys[:-1]] + [" ".join(repr(v) for v in spec.values)]
        _emit_csv("spectrum", keys, [row], out)
    else:
        _emit_json(report, out)


def cmd_energy(args, out) -> None:
    g = read_graph(args.input)
    build, center = _MATRICES[args.matrix]
    if args.matrix == "nlap" and 0 in g.degrees:
        raise IsolatedVertexError("normalized Laplacian energy requires a graph without isolated vertices")
    value = eigenvalues(build(g), args.zero_tol).energy(center(g))
    report = {"graph6": to_graph6(g), "n": g.n, "matrix": args.matrix, "energy": value}
    if args.format == "csv":
        _emit_csv("energy", list(report), [[_fmt(v) for v in report.values()]], out)
    else:
        _emit_json(report, out)


def cmd_bounds(args, out) -> None:
    g = read_graph(args.input)
    if not is_connected(g):
        raise CLIError("bounds are stated for connected graphs; input is disconnected")
    report = check_all(g)
    if args.format == "csv":
        header = ["graph6", "n", "RE", "nullity", "name", "applicable", "quantity", "value", "observed", "margin", "holds"]
        rows = [
            [report.graph6, report.n, _fmt(report.RE), report.nullity, e.name, e.applicable, e.quantity,
             _fmt(e.value), _fmt(e.observed), _fmt(e.margin), _fmt(e.holds)]
            for e in report.entries
        ]
        _emit_csv("bounds", header, rows, out)
    else:
        _emit_json(report.as_dict(), out)


def cmd_family(args, out) -> None:
    g = from_family_spec(args.spec)
    if args.format == "edgelist":
        out.write(to_edgelist(g))
    else:
        out.write(to_graph6(g) + "\n")


def cmd_sweep(args, out) -> None:
    if args.matrix != "randic":
        if args.graph6_file or not args.trees:
            raise CLIError("--matrix adjacency/laplacian sweeps are tree-only (use --trees)")
        results = [tree_extremes(n, args.matrix).__dict__ for n in range(2, args.max_n + 1)]
        kind = f"tree-extremes-{args.matrix}"
    else:
        if args.graph6_file:
            found = sweep_graph6_file(args.graph6_file, args.jobs)
        elif args.connected:
            if args.max_n > CONNECTED_GRAPH_MAX_N:
                raise CLIError(
                    f"built-in connected-graph enumeration stops at n={CONNECTED_GRAPH_MAX_N}; "
                    "pass --graph6-file with graphs from an external generator"
                )
            found = [sweep_connected(n, args.jobs) for n in range(1, args.max_n + 1)]
        else:
            if args.max_n > TREE_MAX_N:
                raise CLIError(f"built-in tree enumeration stops at n={TREE_MAX_N}")
            found = [sweep_trees(n, args.jobs) for n in range(1, args.max_n + 1)]
        results = [r.as_dict() for r in found]
        kind = "sweep"
    if args.format == "csv":
        header = list(results[0]) if results else []
        rows = [[_fmt(" ".join(v) if isinstance(v, list) else v) for v in r.values()] for r in results]
        _emit_csv(kind, header, rows, out)
    else:
        _emit_json(results, out)


def cmd_verify_formulas(args, out) -> None:
    if args.max_p < 1:
        raise CLIError("--max-p must be >= 1")
    reports = [cross_validate(p) for p in range(1, args.max_p + 1)]
    for p in range(1, args.max_p + 1):
        for q in (p - 1, p):
            if q >= 0 and p + q >= 2 and p + q + 1 <= 2 * args.max_p:
                reports.append(cross_validate(p, q))
    dicts = [r.as_dict() for r in reports]
    if args.format == "csv":
        header = list(dicts[0])
        rows = [[_fmt(" ".join(map(str, v)) if isinstance(v, list) else v) for v in d.values()] for d in dicts]
        _emit_csv("formulas", header, rows, out)
    else:
        _emit_json(dicts, out)


def cmd_inertia(args, out) -> None:
    g = read_graph(args.input)
    if not is_tree(g):
        raise CLIError("inertia needs a tree input; graph is not a tree")
    x = parse_shift(args.shift)
    triple = inertia(g, x)
    _emit_json({"graph6": to_graph6(g), "shift": str(x), **triple.as_dict()}, out)


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--zero-tol",
        type=float,
        default=None,
        help="eigenvalue zero tolerance (default 1e-8 or $RANDIC_ZERO_TOL)",
    )
    parser = argparse.ArgumentParser(
        prog="randic",
        description="Randić energy, normalized Laplacian spectra, bounds and conjecture sweeps.",
        epilog="Family specs: sun:P, double-sun:P,Q, balanced-double-sun:N, path:N, star:N, "
        "cycle:N, complete:N, starlike:L1,L2,L3[,...]",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    matrices = list(_MATRICES)

    p = sub.add_parser("spectrum", parents=[common], help="eigenvalues and indices of one graph")
    p.add_argument("input")
    p.add_argument("--matrix", choices=matrices, default="randic")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("energy", parents=[common], help="energy of one graph")
    p.add_argument("input")
    p.add_argument("--matrix", choices=matrices, default="randic")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("bounds", parents=[common], help="evaluate every applicable energy bound")
    p.add_argument("input")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("family", parents=[common], help="construct a named graph")
    p.add_argument("spec")
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("sweep", parents=[common], help="exhaustive maximum-energy sweep")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--trees", action="store_true", help="all trees up to --max-n (default)")
    src.add_argument("--connected", action="store_true", help=f"all connected graphs up to --max-n <= {CONNECTED_GRAPH_MAX_N}")
    src.add_argument("--graph6-file", metavar="PATH", help="graphs to sweep, one graph6 per line")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--matrix", choices=["randic", "adjacency", "laplacian"], default="randic")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_sweep, trees=True)

    p = sub.add_parser("verify-formulas", parents=[common], help="closed forms vs eigensolver")
    p.add_argument("--max-p", type=int, default=10)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_verify_formulas)

    p = sub.add_parser("inertia", parents=[common], help="eigenvalue counts of a tree's normalized Laplacian around a shift")
    p.add_argument("input")
    p.add_argument("--shift", required=True, help="rational shift such as 1, 1/2 or 0.75")
    p.set_defaults(func=cmd_inertia)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    if getattr(args, "zero_tol", None) is not None and args.zero_tol <= 0:
        print("error: --zero-tol must be positive", file=sys.stderr)
        return 2
    try:
        args.func(args, out)
    except (CLIError, GraphFormatError, IsolatedVertexError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
