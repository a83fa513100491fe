"""Command-line front end.

Subcommands:

    gen-hk       emit the l-sender interference-channel system as JSON
    eliminate    project out the designated variables (fme or hilbert)
    compare      run both methods, print per-method CSV, check agreement
    hilbert-raw  Hilbert basis of a plain integer matrix, text in/text out
    validate     sampling cross-check of a projection against its source

Exit codes: 0 success, 1 I/O failure, 2 usage or malformed input, 3 resource
limit exceeded, 4 methods or samples disagree, 5 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .analysis import remove_redundant, systems_equivalent, validate_projection
from .exact import ParseError
from .fme import fme_eliminate_all
from .hilbert import (
    DEFAULT_MAX_FRONTIER,
    DEFAULT_MAX_NORM,
    ResourceLimitError,
    brute_force_minimal_solutions,
    eliminate_by_duality,
    format_elements,
    hilbert_basis,
    parse_matrix,
)
from .model import InequalitySystem, parse_system, serialize_system
from .ratereg import hk_system
from .report import EliminationReport


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def _emit_report(args, report: EliminationReport) -> None:
    payload = json.dumps(report.to_json(), indent=2) + "\n"
    if getattr(args, "report", None):
        _write_text(args.report, payload)
    if not args.quiet:
        sys.stderr.write(payload)


def _load_system(path: str) -> InequalitySystem:
    return parse_system(_read_text(path))


def _run_method(args, system: InequalitySystem):
    if args.method == "fme":
        order = tuple(args.order.split(",")) if args.order else None
        return fme_eliminate_all(system, order, drop_trivial=args.drop_trivial)
    projected, report, certificates = eliminate_by_duality(
        system,
        drop_trivial=args.drop_trivial,
        max_frontier=args.max_frontier,
        max_norm=args.max_norm,
    )
    return projected, report, certificates


def cmd_gen_hk(args) -> int:
    system = hk_system(args.senders)
    _write_text(args.out, serialize_system(system).decode("utf-8"))
    return 0


def cmd_eliminate(args) -> int:
    system = _load_system(args.infile)
    if not system.eliminate:
        raise ValueError("input system designates no variables to eliminate")
    projected, report, _ = _run_method(args, system)
    if args.remove_redundant:
        projected, _ = remove_redundant(projected)
        report.non_redundant_count = len(projected.rows)
    _write_text(args.out, serialize_system(projected).decode("utf-8"))
    _emit_report(args, report)
    return 0


def cmd_compare(args) -> int:
    system = _load_system(args.infile)
    if not system.eliminate:
        raise ValueError("input system designates no variables to eliminate")
    results = {}
    for name in ("fme", "hilbert"):
        start = time.perf_counter()
        if name == "fme":
            projected, report, _ = fme_eliminate_all(system)
        else:
            projected, report, _ = eliminate_by_duality(
                system, max_frontier=args.max_frontier, max_norm=args.max_norm
            )
        reduced, _ = remove_redundant(projected)
        elapsed = time.perf_counter() - start
        report.non_redundant_count = len(reduced.rows)
        results[name] = reduced
        sys.stdout.write(
            f"{name},{report.constraint_count},{report.aux_var_count},"
            f"{report.basis_element_count},{report.non_redundant_count},{elapsed:.6f}\n"
        )
    verdict = systems_equivalent(results["fme"], results["hilbert"])
    if not verdict.equivalent:
        for label, side in (("fme", verdict.forward), ("hilbert", verdict.backward)):
            for row, cert in side:
                if cert is None:
                    sys.stderr.write(f"not implied by the other method ({label} row): "
                                     f"{_describe_row(results[label], row)}\n")
        return 4
    return 0


def _describe_row(system: InequalitySystem, row) -> str:
    return json.dumps(
        {
            "coeffs": {v: str(c) for v, c in row.coeffs.items()},
            "terms": {s: str(c) for s, c in row.bound.terms.items()},
            "constant": str(row.bound.constant),
        },
        sort_keys=True,
    )


def cmd_hilbert_raw(args) -> int:
    matrix = parse_matrix(_read_text(args.infile))
    basis = hilbert_basis(
        matrix, max_frontier=args.max_frontier, max_norm=args.max_norm
    )
    _write_text(args.out, format_elements(basis))
    if args.oracle is not None:
        expected = brute_force_minimal_solutions(matrix, args.oracle)
        if set(basis) != set(expected):
            overflow = [e for e in basis if max(e) > args.oracle]
            if overflow:
                sys.stderr.write(
                    f"oracle bound {args.oracle} is below the largest basis "
                    f"coordinate {max(max(e) for e in basis)}; raise --oracle\n"
                )
            missing = sorted(set(expected) - set(basis))
            spurious = sorted(set(basis) - set(expected))
            for e in missing:
                sys.stderr.write("missing: " + " ".join(map(str, e)) + "\n")
            for e in spurious:
                sys.stderr.write("spurious: " + " ".join(map(str, e)) + "\n")
            return 5
    return 0


def cmd_validate(args) -> int:
    system = _load_system(args.infile)
    if not system.eliminate:
        raise ValueError("input system designates no variables to eliminate")
    projected, _, _ = _run_method(args, system)
    report = validate_projection(system, projected, args.trials, args.seed)
    _write_text(args.out, json.dumps(report.to_json(), indent=2) + "\n")
    return 0 if report.agreed else 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ineqelim",
        description="Exact elimination of variables from linear inequality systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, infile=True, out_default="-"):
        if infile:
            p.add_argument("--in", dest="infile", required=True,
                           help="input path, or - for stdin")
        p.add_argument("--out", default=out_default, help="output path, - for stdout")
        p.add_argument("--quiet", action="store_true",
                       help="suppress the report echo on stderr")

    def add_limits(p):
        p.add_argument("--max-frontier", type=int, default=DEFAULT_MAX_FRONTIER,
                       help="abort when the completion frontier exceeds this size")
        p.add_argument("--max-norm", type=int, default=DEFAULT_MAX_NORM,
                       help="abort when the search level exceeds this 1-norm")

    def add_method(p, *, required):
        p.add_argument("--method", choices=("fme", "hilbert"), required=required,
                       default=None if required else "hilbert",
                       help="elimination engine")
        p.add_argument("--order", default=None,
                       help="fme only: comma-separated elimination order")
        p.add_argument("--drop-trivial", action=argparse.BooleanOptionalAction,
                       default=True,
                       help="drop vacuous rows (no variables, nonnegative bound)")

    p = sub.add_parser("gen-hk", help="generate the l-sender rate system")
    p.add_argument("--senders", type=int, required=True)
    add_common(p, infile=False)
    p.set_defaults(func=cmd_gen_hk)

    p = sub.add_parser("eliminate", help="project out the designated variables")
    add_common(p)
    add_method(p, required=True)
    p.add_argument("--remove-redundant", action="store_true",
                   help="drop implied rows from the projection")
    p.add_argument("--report", default=None, help="also write the run report here")
    add_limits(p)
    p.set_defaults(func=cmd_eliminate)

    p = sub.add_parser("compare", help="run both methods and check they agree")
    add_common(p)
    add_limits(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("hilbert-raw", help="Hilbert basis of a raw integer matrix")
    add_common(p)
    p.add_argument("--oracle", type=int, default=None,
                   help="cross-check against brute force up to this bound")
    add_limits(p)
    p.set_defaults(func=cmd_hilbert_raw)

    p = sub.add_parser("validate", help="sampling cross-check of a projection")
    add_common(p)
    add_method(p, required=False)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=1)
    add_limits(p)
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ResourceLimitError as exc:
        sys.stderr.write(
            f"error: {exc} (level {exc.level}, frontier {exc.frontier}, "
            f"solutions found {exc.solutions})\n"
        )
        return 3
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
