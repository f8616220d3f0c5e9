"""Command line front end.

Subcommands::

    power       blow a graph file up into a k-uniform hypergraph
    spath       write a loose path hypergraph
    scycle      write a loose cycle hypergraph
    oddbip      decide odd-bipartiteness of a hypergraph file
    rho         spectral radius of a hypergraph tensor (power iteration)
    bounds      row-sum bounds on the spectral radius
    subdivide   subdivide one edge of a graph file
    minrho      minimum spectral radius over connected non-bipartite graphs
    limitpoints tabulate beta_n, alpha_n against sqrt(2 + sqrt(5))
    converge    pendant odd cycles approaching sqrt(2 + sqrt(5))
    verify-nob  blow-up odd-bipartiteness versus base bipartiteness

Exit status: 0 on success, 1 when a reported check fails (or an iteration
does not converge), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .constructions import generalized_power, s_cycle, s_path, subdivide
from .experiments import (
    MATRIX_RHO,
    ExperimentReport,
    ReportCheck,
    convergence_report,
    min_rho_search,
    verify_theorem_nob,
)
from .fileio import (
    ParseError,
    parse_graph,
    parse_hypergraph,
    serialize_graph,
    serialize_hypergraph,
)
from .matrixspec import limit_point_table, tau_threshold
from .oddbip import odd_bipartition
from .tensors import (
    AdjacencyTensor,
    SignlessLaplacianTensor,
    power_iteration_rho,
    rho_bounds,
)

__all__ = ["run_cli", "main"]

_TENSORS = {"adjacency": AdjacencyTensor, "signless-laplacian": SignlessLaplacianTensor}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-10, help="bracket tolerance")
    common.add_argument("--max-iter", type=int, default=1_000_000, help="iteration cap")
    common.add_argument("--in", dest="infile", metavar="FILE", help="input file")
    common.add_argument("--out", dest="outfile", metavar="FILE", help="output file (default stdout)")
    common.add_argument("--format", choices=("csv", "text"), default="text", help="report format")
    common.add_argument("--big", action="store_true", help="allow the slow n=8 enumeration")

    parser = argparse.ArgumentParser(prog="hgspectra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("power", parents=[common], help="blow a graph up into a hypergraph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)

    for name in ("spath", "scycle"):
        p = sub.add_parser(name, parents=[common], help=f"write a loose {name[1:]}")
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--s", type=int, required=True)
        p.add_argument("--d", type=int, required=True, help="number of edges")

    sub.add_parser("oddbip", parents=[common], help="decide odd-bipartiteness")

    rho_help = {"rho": "tensor spectral radius", "bounds": "row-sum radius bounds"}
    for name in ("rho", "bounds"):
        p = sub.add_parser(name, parents=[common], help=rho_help[name])
        p.add_argument("--operator", choices=sorted(_TENSORS), required=True)

    p = sub.add_parser("subdivide", parents=[common], help="subdivide one edge")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--w", type=int, required=True)

    p = sub.add_parser("minrho", parents=[common], help="extremal non-bipartite graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--operator", choices=sorted(MATRIX_RHO), default="adjacency")

    p = sub.add_parser("limitpoints", parents=[common], help="beta_n / alpha_n table")
    p.add_argument("--n-max", type=int, required=True)

    p = sub.add_parser("converge", parents=[common], help="pendant odd cycle sequence")
    p.add_argument("--n-max", type=int, required=True)

    p = sub.add_parser("verify-nob", parents=[common], help="blow-up parity check")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k", type=int, action="append", help="edge size (repeatable; default 4 and 6)")

    return parser


def _emit(text: str, outfile: str | None) -> None:
    if outfile:
        Path(outfile).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)


def _read(infile: str | None) -> str:
    if not infile:
        raise ParseError("an --in file is required")
    return Path(infile).read_text(encoding="ascii")


def _emit_report(report: ExperimentReport, args) -> int:
    _emit(report.to_csv() if args.format == "csv" else report.to_text(), args.outfile)
    return 0 if report.passed else 1


def _cmd_power(args) -> int:
    g = parse_graph(_read(args.infile))
    h, _ = generalized_power(g, args.k, args.s)
    _emit(serialize_hypergraph(h), args.outfile)
    return 0


def _cmd_spath(args) -> int:
    _emit(serialize_hypergraph(s_path(args.k, args.s, args.d)), args.outfile)
    return 0


def _cmd_scycle(args) -> int:
    _emit(serialize_hypergraph(s_cycle(args.k, args.s, args.d)), args.outfile)
    return 0


def _cmd_oddbip(args) -> int:
    h = parse_hypergraph(_read(args.infile))
    b = odd_bipartition(h)
    if b is None:
        _emit("non-odd-bipartite\n", args.outfile)
    else:
        ones = " ".join(str(v) for v in sorted(b.part_one))
        _emit(f"odd-bipartite\npart-one: {ones}\n", args.outfile)
    return 0


def _cmd_rho(args) -> int:
    h = parse_hypergraph(_read(args.infile))
    t = _TENSORS[args.operator](h)
    result = power_iteration_rho(t, tol=args.tol, max_iter=args.max_iter)
    lines = [
        f"rho = {result.rho:.12g}",
        f"bracket = [{result.lower:.12g}, {result.upper:.12g}]",
        f"iterations = {result.iterations}",
        f"converged = {'yes' if result.converged else 'no'}",
    ]
    _emit("\n".join(lines) + "\n", args.outfile)
    return 0 if result.converged else 1


def _cmd_bounds(args) -> int:
    h = parse_hypergraph(_read(args.infile))
    lo, hi = rho_bounds(_TENSORS[args.operator](h))
    _emit(f"min_row_sum = {lo:.12g}\nmax_row_sum = {hi:.12g}\n", args.outfile)
    return 0


def _cmd_subdivide(args) -> int:
    g = parse_graph(_read(args.infile))
    _emit(serialize_graph(subdivide(g, args.u, args.w)), args.outfile)
    return 0


def _cmd_minrho(args) -> int:
    rho, graphs = min_rho_search(args.n, operator=args.operator, tol=args.tol, big=args.big)
    report = ExperimentReport(
        name="minimum spectral radius over connected non-bipartite graphs",
        params={"n": args.n, "operator": args.operator},
        columns=("n", "operator", "rho_min", "argmin_edges"),
        rows=[
            (args.n, args.operator, rho, " ".join(f"{u}-{v}" for u, v in g.edges))
            for g in graphs
        ],
        checks=[
            ReportCheck("unique minimizer", len(graphs) == 1, f"ties within {10 * args.tol:g}")
        ],
    )
    return _emit_report(report, args)


def _cmd_limitpoints(args) -> int:
    table = limit_point_table(args.n_max, tol=args.tol)
    alphas = [row[2] for row in table.rows]
    report = ExperimentReport(
        name="limit point sequence alpha_n",
        params={"n_max": args.n_max, "threshold": f"{table.threshold:.12g}"},
        columns=("n", "beta_n", "alpha_n"),
        rows=list(table.rows),
        checks=[
            ReportCheck(
                "alpha_n strictly increasing",
                all(a < b for a, b in zip(alphas, alphas[1:])),
                f"roots bisected to {args.tol:g} or machine precision",
            ),
            ReportCheck(
                "every alpha_n below sqrt(2 + sqrt(5))",
                all(a < tau_threshold() for a in alphas),
                "strict",
            ),
        ],
    )
    return _emit_report(report, args)


def _cmd_converge(args) -> int:
    return _emit_report(convergence_report(args.n_max, tol=args.tol), args)


def _cmd_verify_nob(args) -> int:
    ks = tuple(args.k) if args.k else (4, 6)
    return _emit_report(verify_theorem_nob(args.n_max, ks=ks, big=args.big), args)


_COMMANDS = {
    "power": _cmd_power,
    "spath": _cmd_spath,
    "scycle": _cmd_scycle,
    "oddbip": _cmd_oddbip,
    "rho": _cmd_rho,
    "bounds": _cmd_bounds,
    "subdivide": _cmd_subdivide,
    "minrho": _cmd_minrho,
    "limitpoints": _cmd_limitpoints,
    "converge": _cmd_converge,
    "verify-nob": _cmd_verify_nob,
}


def run_cli(argv: list[str] | None = None) -> int:
    """Parse argv and run one subcommand; returns the exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run_cli())
