"""Command-line front end.

Commands: triangle, matrix, graph, spectrum, condition, verify.  All numeric
output is exact decimal (big integers are emitted as strings in JSON) and
byte-identical across runs for identical invocations.

Exit codes: 0 success, 1 verification failures present, 2 usage or domain
error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .graphs import (
    FamilySpec,
    adjacency_matrix,
    family_graph,
    to_dot,
    vertex_names,
)
from .matrices import ExactMatrix, det_hosoya_matrix, hosoya_matrix, mod2
from .spectra import (
    char_poly,
    distinct_root_count,
    energy_integral,
    extract_integer_roots,
    integrality_witness,
    laplacian_matrix,
)
from .triangles import row
from .verify import T_MAX_DEFAULT, T_MAX_LIMIT, run_suite


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


class _UsageError(Exception):
    pass


def _cmd_triangle(args) -> int:
    if args.rows < 1:
        raise _UsageError("rows must be >= 1")
    rows = [row(args.kind, r) for r in range(1, args.rows + 1)]
    if args.mod2:
        rows = [[v % 2 for v in r] for r in rows]
    if args.format == "plain":
        sys.stdout.write("\n".join(" ".join(str(v) for v in r) for r in rows) + "\n")
    elif args.format == "csv":
        sys.stdout.write("\n".join(",".join(str(v) for v in r) for r in rows) + "\n")
    else:
        payload = {
            "kind": args.kind,
            "mod2": bool(args.mod2),
            "rows": [[str(v) for v in r] for r in rows],
        }
        sys.stdout.write(_dump_json(payload))
    return 0


def _cmd_matrix(args) -> int:
    if args.size < 1:
        raise _UsageError("size must be >= 1")
    m = det_hosoya_matrix(args.size) if args.kind == "S" else hosoya_matrix(args.size)
    rows = mod2(m).rows if args.mod2 else m.rows
    if args.format == "plain":
        sys.stdout.write("\n".join(" ".join(str(v) for v in r) for r in rows) + "\n")
    elif args.format == "csv":
        sys.stdout.write("\n".join(",".join(str(v) for v in r) for r in rows) + "\n")
    else:
        payload = {
            "kind": args.kind,
            "mod2": bool(args.mod2),
            "size": args.size,
            "rows": [[str(v) for v in r] for r in rows],
        }
        sys.stdout.write(_dump_json(payload))
    return 0


def _cmd_graph(args) -> int:
    spec = FamilySpec.parse(args.family)
    g = family_graph(spec)
    names = vertex_names(spec)
    if args.format == "dot":
        sys.stdout.write(to_dot(g, names, str(spec)))
    elif args.format == "json":
        payload = {
            "family": str(spec),
            "n": g.n,
            "vertices": names,
            "adjacency": [[(g.adj[v] >> u) & 1 for u in range(g.n)] for v in range(g.n)],
            "loops": [(g.loops >> v) & 1 for v in range(g.n)],
        }
        sys.stdout.write(_dump_json(payload))
    elif args.format == "csv":
        rows = adjacency_matrix(g).rows
        sys.stdout.write("\n".join(",".join(str(v) for v in r) for r in rows) + "\n")
    else:
        edges = " ".join(f"{names[i - 1]}-{names[j - 1]}" for i, j in g.edges())
        loops = " ".join(names[v - 1] for v in g.loop_vertices())
        lines = [
            f"vertices: {' '.join(names)}",
            f"edges: {edges}",
            f"loops: {loops}",
        ]
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_spectrum(args) -> int:
    spec = FamilySpec.parse(args.family)
    g = family_graph(spec)
    matrix = laplacian_matrix(g) if args.laplacian else adjacency_matrix(g)
    p = char_poly(matrix)
    extraction = extract_integer_roots(p)
    integral = extraction.remainder.degree == 0
    roots = sorted(extraction.integer_roots, reverse=True)
    energy = energy_integral(p) if integral else None
    distinct = distinct_root_count(p)
    if args.format == "json":
        payload = {
            "family": str(spec),
            "matrix": "laplacian" if args.laplacian else "adjacency",
            "char_poly": p.serialize(),
            "integer_roots": [str(r) for r in roots],
            "remainder": extraction.remainder.serialize(),
            "integral": integral,
            "distinct_roots": distinct,
            "energy": str(energy) if energy is not None else None,
        }
        sys.stdout.write(_dump_json(payload))
    else:
        lines = [
            f"family: {spec}",
            f"matrix: {'laplacian' if args.laplacian else 'adjacency'}",
            f"char_poly: {p}",
            f"coeffs: {','.join(p.serialize())}",
            f"integer_roots: {','.join(str(r) for r in roots)}",
            f"remainder: {extraction.remainder}",
            f"integral: {'true' if integral else 'false'}",
            f"distinct_roots: {distinct}",
        ]
        if energy is not None:
            lines.append(f"energy: {energy}")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_condition(args) -> int:
    witness = integrality_witness(args.n, args.r)
    disc = (args.n - 1) ** 2 + 8 * args.n * args.r
    square = witness is not None
    if args.format == "json":
        payload = {
            "n": args.n,
            "r": args.r,
            "witness": [witness.p, witness.q] if witness else None,
            "discriminant": str(disc),
            "perfect_square": square,
        }
        sys.stdout.write(_dump_json(payload))
    else:
        lines = [
            f"witness: {witness.p},{witness.q}" if witness else "witness: none",
            f"discriminant: {disc}",
            f"perfect_square: {'true' if square else 'false'}",
        ]
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_verify(args) -> int:
    if not 1 <= args.t_max <= T_MAX_LIMIT:
        raise _UsageError(f"--t-max must be in 1..{T_MAX_LIMIT}, got {args.t_max}")
    selection = args.checks.split(",") if args.checks else None
    report = run_suite(t_max=args.t_max, selection=selection, parallel=args.parallel)
    text = report.to_json() if args.format == "json" else report.to_csv()
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            sys.stderr.write(f"cannot write report: {exc}\n")
            return 3
    else:
        sys.stdout.write(text)
    summary = report.summary
    sys.stderr.write(
        f"checks: {summary['pass']} pass, {summary['fail']} fail, "
        f"{summary['skipped']} skipped; digest {report.digest[:16]}\n"
    )
    return 0 if summary["fail"] == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hosoya-cographs",
        description="Exact computations on Fibonacci determinant triangles and their graph families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", help="print triangle rows")
    p.add_argument("kind", choices=["det", "hosoya"])
    p.add_argument("rows", type=int)
    p.add_argument("--mod2", action="store_true")
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    p.set_defaults(func=_cmd_triangle)

    p = sub.add_parser("matrix", help="print the embedded symmetric matrix")
    p.add_argument("kind", choices=["S", "T"], help="S: determinant triangle, T: Hosoya triangle")
    p.add_argument("size", type=int)
    p.add_argument("--mod2", action="store_true")
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("graph", help="build a family graph")
    p.add_argument("family", help="e.g. noloops:7, loops:6, theta:7, theta-complement:5, complement:6, join:2,3,4")
    p.add_argument("--format", choices=["dot", "json", "plain", "csv"], default="dot")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("spectrum", help="exact spectrum of a family graph")
    p.add_argument("family")
    p.add_argument("--laplacian", action="store_true")
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("condition", help="integrality witness for the equal-clique join")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=_cmd_condition)

    p = sub.add_parser("verify", help="run the claim-check suite and write a report")
    p.add_argument("--t-max", type=int, default=T_MAX_DEFAULT)
    p.add_argument("--checks", default=None, help="comma-separated check names")
    p.add_argument("--out", default=None, help="report path (default: stdout)")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--parallel", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (_UsageError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return 3


def console_main() -> None:
    raise SystemExit(main())
