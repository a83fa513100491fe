"""Fourier-Motzkin elimination with exact arithmetic.

Variables are eliminated one at a time.  Rows where the variable is absent
pass through; every (positive, negative) pair combines into one new row with
the variable cancelled.  Rows that carry the variable with no opposite-sign
partner are unsatisfiable bounds on an unbounded direction and are dropped.

Every output row carries a certificate: nonnegative multipliers over the rows
of the *input* system whose combination reproduces the row exactly.
"""

from __future__ import annotations

import time
from fractions import Fraction

from .model import (
    Inequality,
    InequalitySystem,
    canonical_scale,
    canonicalize_system,
    combine_rows,
    row_vector,
)
from .report import EliminationReport

# multipliers over original rows, keyed by row index
Certificate = dict[int, Fraction]

_ZERO = Fraction(0)


def _combine_certs(a: Certificate, b: Certificate, la: Fraction, lb: Fraction) -> Certificate:
    out = {i: la * m for i, m in a.items()}
    for i, m in b.items():
        out[i] = out.get(i, _ZERO) + lb * m
    return {i: m for i, m in out.items() if m != 0}


def _normalize(
    system: InequalitySystem, produced: list[tuple[Inequality, Certificate]]
) -> list[tuple[Inequality, Certificate]]:
    """Scale rows canonically, drop exact duplicates (first certificate wins), sort."""
    seen: dict[tuple, tuple[Inequality, Certificate]] = {}
    for row, cert in produced:
        scale = canonical_scale(row)
        if scale != 1:
            row = row.scaled(scale)
            cert = {i: scale * m for i, m in cert.items()}
        key = row_vector(system, row)
        if key not in seen:
            seen[key] = (row, cert)
    return sorted(seen.values(), key=lambda rc: row_vector(system, rc[0]))


def _eliminate_var(
    system: InequalitySystem,
    rows: list[tuple[Inequality, Certificate]],
    var: str,
) -> list[tuple[Inequality, Certificate]]:
    """One round: project `var` out of certified rows, canonicalize, dedup, sort."""
    passthrough: list[tuple[Inequality, Certificate]] = []
    positive: list[tuple[Inequality, Certificate]] = []
    negative: list[tuple[Inequality, Certificate]] = []
    for row, cert in rows:
        coeff = row.coeffs.get(var, _ZERO)
        if coeff > 0:
            positive.append((row, cert))
        elif coeff < 0:
            negative.append((row, cert))
        else:
            passthrough.append((row, cert))

    produced = list(passthrough)
    for prow, pcert in positive:
        for nrow, ncert in negative:
            lp = -nrow.coeffs[var]
            ln = prow.coeffs[var]
            combined = prow.scaled(lp) + nrow.scaled(ln)
            produced.append((combined, _combine_certs(pcert, ncert, lp, ln)))
    return _normalize(system, produced)


def _is_vacuous(row: Inequality) -> bool:
    """0 <= nonnegative bound: true under the nonnegative-symbols convention."""
    return (
        row.is_trivial()
        and all(c >= 0 for c in row.bound.terms.values())
        and row.bound.constant >= 0
    )


def fme_eliminate_one(system: InequalitySystem, var: str) -> InequalitySystem:
    """Project a single variable out.  Trivial rows are kept."""
    if var not in system.eliminate:
        raise ValueError(f"{var!r} is not an eliminable variable of the system")
    rows = [(row, {}) for row in system.rows]
    out = [row for row, _ in _eliminate_var(system, rows, var)]
    variables = tuple(v for v in system.variables if v != var)
    eliminate = tuple(v for v in system.eliminate if v != var)
    result = system.replace(variables=variables, eliminate=eliminate, rows=tuple(out))
    return canonicalize_system(result)


def fme_eliminate_all(
    system: InequalitySystem,
    order: tuple[str, ...] | None = None,
    *,
    drop_trivial: bool = True,
) -> tuple[InequalitySystem, EliminationReport, list[Certificate]]:
    """Eliminate every designated variable.

    Returns the projected system, a run report, and one certificate per output
    row (same order as the rows): multipliers over the input system's rows.
    Vacuous rows (no variables, nonnegative bound) are dropped at the end when
    `drop_trivial` is set and the system declares nonnegative symbols.
    """
    if order is None:
        order = system.eliminate
    if sorted(order) != sorted(system.eliminate):
        raise ValueError("order must be a permutation of the eliminate list")

    start = time.perf_counter()
    rows = _normalize(system, [(row, {i: Fraction(1)}) for i, row in enumerate(system.rows)])
    round_rows: list[int] = []
    for var in order:
        rows = _eliminate_var(system, rows, var)
        round_rows.append(len(rows))
    raw_count = len(rows)

    if drop_trivial and system.symbols_nonnegative:
        rows = [(row, cert) for row, cert in rows if not _is_vacuous(row)]

    kept = tuple(v for v in system.variables if v not in system.eliminate)
    projected = system.replace(variables=kept, eliminate=(), rows=tuple(r for r, _ in rows))
    report = EliminationReport(
        constraint_count=len(system.rows),
        aux_var_count=len(system.eliminate),
        basis_element_count=raw_count,
        non_redundant_count=None,
        elapsed=time.perf_counter() - start,
        round_rows=round_rows,
    )
    return projected, report, [cert for _, cert in rows]


def verify_fme_certificate(
    system: InequalitySystem, row: Inequality, cert: Certificate
) -> bool:
    """Check multipliers are nonnegative and rebuild the row from the input."""
    if not cert:
        return False
    if any(m < 0 for m in cert.values()):
        return False
    multipliers = [cert.get(i, _ZERO) for i in range(len(system.rows))]
    rebuilt = combine_rows(system.rows, multipliers)
    return row_vector(system, rebuilt) == row_vector(system, row)
