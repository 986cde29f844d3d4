"""Command line interface.

Every command prints one JSON document to stdout with the shape

    {"kind": ..., "n": ..., "format": ..., "payload": ...,
     "metadata": {...}, "checks": [...]}

and exits 0 on success, 1 when a verification check fails, and 2 on
usage or domain errors.  Exact payloads serialize as canonical fraction
strings like "-3/50"; floating payloads serialize as JSON numbers that
round-trip to the same double.

Examples:
    gearpinv gen gear-distance --n 6
    gearpinv gen tree-distance --edges "[[1,2],[2,3],[2,4]]"
    gearpinv pinv --n 5 --method oracle --format rational
    gearpinv spectrum --n 8
    gearpinv laplacian --n 7 --part h
    gearpinv verify --n 6 --tol 1e-9
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import __version__
from .edm import balaji_bapat_pinv
from .graphs import bfs_distances, build_gear, build_wheel, gear_distance_closed
from .laplacian import a_matrix, b_matrix, h_matrix, special_laplacian
from .pinv import gear_pinv_formula, rational_pinv
from .spectral import lambda_pairs, q_vector, theta
from .trees import tree_distance, unit_tree, weighted_tree
from .verify import run_checks


class DomainError(ValueError):
    """Bad argument values that argparse cannot catch."""


def fraction_str(value) -> str:
    frac = Fraction(value)
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


def serialize_matrix(matrix, fmt: str):
    if fmt == "rational":
        return [[fraction_str(x) for x in row] for row in matrix]
    return [[float(x) for x in row] for row in matrix]


def _document(kind, n, fmt, payload, parity=None, tolerance=None, checks=()):
    return {
        "kind": kind,
        "n": n,
        "format": fmt,
        "payload": payload,
        "metadata": {
            "version": __version__,
            "parity": parity,
            "tolerance": tolerance,
        },
        "checks": list(checks),
    }


def _parity(n: int) -> str:
    return "even" if n % 2 == 0 else "odd"


def _pick_format(requested, exact_payload: bool) -> str:
    if requested is None:
        return "rational" if exact_payload else "decimal"
    if requested == "rational" and not exact_payload:
        raise DomainError(
            "rational format needs an exact payload; this one is floating point"
        )
    return requested


def _parse_edges(text: str):
    try:
        raw = json.loads(text)
        items = [tuple(item) for item in raw]
    except (json.JSONDecodeError, TypeError) as exc:
        raise DomainError(f"cannot parse edge list: {exc}") from exc
    if not items:
        raise DomainError("edge list is empty")
    if all(len(e) == 2 for e in items):
        return unit_tree(items)
    if all(len(e) == 3 for e in items):
        for _, _, w in items:
            if isinstance(w, float):
                raise DomainError("weights must be ints or strings like '3/2'")
        return weighted_tree(items)
    raise DomainError("edges must all be [a, b] or all [a, b, weight]")


def cmd_gen(args) -> tuple[dict, int]:
    if args.kind == "tree-distance":
        if args.edges is None:
            raise DomainError("tree-distance needs --edges")
        tree = _parse_edges(args.edges)
        fmt = _pick_format(args.format, True)
        matrix = tree_distance(tree)
        doc = _document(
            "matrix", tree.num_vertices, fmt, serialize_matrix(matrix, fmt)
        )
        return doc, 0
    if args.n is None:
        raise DomainError(f"{args.kind} needs --n")
    fmt = _pick_format(args.format, True)
    if args.kind == "gear-distance":
        matrix = gear_distance_closed(args.n)
    else:
        matrix = bfs_distances(build_wheel(args.n))
    doc = _document(
        "matrix", args.n, fmt, serialize_matrix(matrix, fmt), parity=_parity(args.n)
    )
    return doc, 0


def cmd_pinv(args) -> tuple[dict, int]:
    if args.method == "oracle":
        matrix = rational_pinv(gear_distance_closed(args.n).astype(object))
        fmt = _pick_format(args.format, True)
    elif args.method == "k4":
        matrix = balaji_bapat_pinv(gear_distance_closed(args.n))
        fmt = _pick_format(args.format, False)
    else:
        matrix = gear_pinv_formula(args.n)
        fmt = _pick_format(args.format, False)
    doc = _document(
        "matrix", args.n, fmt, serialize_matrix(matrix, fmt), parity=_parity(args.n)
    )
    return doc, 0


def cmd_spectrum(args) -> tuple[dict, int]:
    n = args.n
    fmt = _pick_format(args.format, False)
    dist = gear_distance_closed(n).astype(float)
    residual = 0.0
    pairs = lambda_pairs(n)
    for value, vector in pairs:
        residual = max(residual, float(np.max(np.abs(dist @ vector - value * vector))))
    thetas = []
    for k in range(1, n - 1):
        value = theta(n, k)
        thetas.append(value)
        q = q_vector(n, k)
        residual = max(residual, float(np.max(np.abs(dist @ q - value * q))))
    payload = {
        "lambda": [pairs[0][0], pairs[1][0]],
        "theta": thetas,
        "null_multiplicity": n - 1,
        "max_residual": residual,
    }
    return _document("spectrum", n, fmt, payload, parity=_parity(n)), 0


def cmd_laplacian(args) -> tuple[dict, int]:
    n = args.n
    if args.part == "a":
        matrix = a_matrix(n)
        exact = True
    elif args.part == "h":
        matrix = h_matrix(n)
        exact = True
    elif args.part == "b":
        if args.k is None:
            raise DomainError("part b needs --k")
        matrix = b_matrix(n, args.k)
        exact = False
    else:
        matrix = special_laplacian(n)
        exact = False
    fmt = _pick_format(args.format, exact)
    doc = _document(
        "matrix", n, fmt, serialize_matrix(matrix, fmt), parity=_parity(n)
    )
    return doc, 0


def cmd_verify(args) -> tuple[dict, int]:
    results = run_checks(args.n, tol=args.tol)
    checks = [
        {"name": r.name, "pass": r.passed, "residual": r.residual} for r in results
    ]
    doc = _document(
        "verify-report",
        args.n,
        "decimal",
        {"checks_passed": sum(r.passed for r in results), "checks_total": len(results)},
        parity=_parity(args.n),
        tolerance=args.tol,
        checks=checks,
    )
    return doc, 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gearpinv",
        description="Gear graph distance matrices and their pseudoinverses",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, need_n=True):
        if need_n:
            p.add_argument("--n", type=int, required=True, help="wheel size, at least 4")
        p.add_argument("--format", choices=["rational", "decimal"], default=None)

    p_gen = sub.add_parser("gen", help="emit a distance matrix")
    p_gen.add_argument(
        "kind", choices=["gear-distance", "wheel-distance", "tree-distance"]
    )
    p_gen.add_argument("--n", type=int, default=None, help="wheel size, at least 4")
    p_gen.add_argument("--edges", default=None, help='JSON, e.g. "[[1,2],[2,3]]"')
    p_gen.add_argument("--format", choices=["rational", "decimal"], default=None)
    p_gen.set_defaults(func=cmd_gen)

    p_pinv = sub.add_parser("pinv", help="pseudoinverse of a gear distance matrix")
    add_common(p_pinv)
    p_pinv.add_argument(
        "--method", choices=["formula", "oracle", "k4"], default="formula"
    )
    p_pinv.set_defaults(func=cmd_pinv)

    p_spec = sub.add_parser("spectrum", help="closed-form spectrum with residuals")
    add_common(p_spec)
    p_spec.set_defaults(func=cmd_spectrum)

    p_lap = sub.add_parser("laplacian", help="assembled pseudoinverse or one part")
    add_common(p_lap)
    p_lap.add_argument("--part", choices=["a", "h", "b", "full"], default="full")
    p_lap.add_argument("--k", type=int, default=None, help="pair index for part b")
    p_lap.set_defaults(func=cmd_laplacian)

    p_verify = sub.add_parser("verify", help="run the cross-check suite")
    add_common(p_verify)
    p_verify.add_argument("--tol", type=float, default=1e-9)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        doc, code = args.func(args)
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(doc, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
