"""Redundancy removal, equivalence checks, and sampling validation.

All reasoning reduces to one primitive: expressing a target row as a
nonnegative combination of other rows.  Under the nonnegative-symbols
convention a combination whose bound is componentwise below the target's
bound still implies the target, so the bound side is matched with
inequalities rather than equalities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .exact import format_rational
from .model import (
    Inequality,
    InequalitySystem,
    canonicalize_system,
    combine_rows,
    fix_variables,
    row_vector,
    satisfies,
    substitute_symbols,
)
from .simplex import solve_eq_nonneg

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class ConicCertificate:
    """Nonnegative multipliers over a row list, keyed by row index."""

    multipliers: dict[int, Fraction]

    def to_json(self) -> dict:
        return {str(i): format_rational(m) for i, m in sorted(self.multipliers.items())}


def lp_feasible(system: InequalitySystem) -> dict[str, Fraction] | None:
    """Exact feasibility check for a purely numeric system.

    Returns a satisfying point (variable -> value) or None.  Rows must have
    numeric bounds; substitute symbols first.
    """
    for row in system.rows:
        if row.bound.terms:
            raise ValueError("lp_feasible requires numeric bounds; substitute symbols first")
    variables = system.variables
    n = len(variables)
    rows = system.rows
    # x is free: encode x_v = pos_v - neg_v, one slack per row
    matrix: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for k, row in enumerate(rows):
        line = [_ZERO] * (2 * n + len(rows))
        for j, v in enumerate(variables):
            c = row.coeffs.get(v, _ZERO)
            line[2 * j] = c
            line[2 * j + 1] = -c
        line[2 * n + k] = _ONE
        matrix.append(line)
        rhs.append(row.bound.constant)
    if not matrix:
        return {v: _ZERO for v in variables}
    solution = solve_eq_nonneg(matrix, rhs)
    if solution is None:
        return None
    return {v: solution[2 * j] - solution[2 * j + 1] for j, v in enumerate(variables)}


def conic_decompose(
    target: Inequality,
    rows: Sequence[Inequality],
    symbols_nonnegative: bool = True,
) -> ConicCertificate | None:
    """Write target as a nonnegative combination of rows, if possible.

    Variable coefficients must match exactly.  On the bound side the
    combination may fall below the target componentwise when symbols are
    nonnegative; otherwise symbol terms must match exactly.  The constant may
    always fall below.  Returns None when no such multipliers exist.
    """
    candidates = list(range(len(rows)))
    if symbols_nonnegative and all(
        c >= 0 for row in rows for c in row.bound.terms.values()
    ):
        # a row spending a symbol the target lacks can never carry weight
        candidates = [
            i
            for i in candidates
            if all(
                target.bound.terms.get(s, _ZERO) > 0
                for s, c in rows[i].bound.terms.items()
                if c > 0
            )
        ]

    var_support = set(target.coeffs)
    sym_support = set(target.bound.terms)
    for i in candidates:
        var_support.update(rows[i].coeffs)
        sym_support.update(rows[i].bound.terms)
    var_list = sorted(var_support)
    sym_list = sorted(sym_support)

    # columns: one multiplier per candidate, then one slack per inequality row
    eq_rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    slack_count = len(sym_list) + 1 if symbols_nonnegative else 1
    width = len(candidates) + slack_count

    def line(values: list[Fraction], slack: int | None, b: Fraction) -> None:
        row = values + [_ZERO] * slack_count
        if slack is not None:
            row[len(candidates) + slack] = _ONE
        eq_rows.append(row)
        rhs.append(b)

    for v in var_list:
        line(
            [rows[i].coeffs.get(v, _ZERO) for i in candidates],
            None,
            target.coeffs.get(v, _ZERO),
        )
    if symbols_nonnegative:
        for k, s in enumerate(sym_list):
            line(
                [rows[i].bound.terms.get(s, _ZERO) for i in candidates],
                k,
                target.bound.terms.get(s, _ZERO),
            )
    else:
        for s in sym_list:
            line(
                [rows[i].bound.terms.get(s, _ZERO) for i in candidates],
                None,
                target.bound.terms.get(s, _ZERO),
            )
    line(
        [rows[i].bound.constant for i in candidates],
        slack_count - 1,
        target.bound.constant,
    )

    assert all(len(r) == width for r in eq_rows)
    solution = solve_eq_nonneg(eq_rows, rhs)
    if solution is None:
        return None
    multipliers = {
        i: solution[k] for k, i in enumerate(candidates) if solution[k] != 0
    }
    return ConicCertificate(multipliers)


def verify_certificate(
    target: Inequality,
    rows: Sequence[Inequality],
    certificate: ConicCertificate,
    symbols_nonnegative: bool = True,
) -> bool:
    """Recompute the combination and check it implies the target."""
    if any(m < 0 for m in certificate.multipliers.values()):
        return False
    combo = Inequality()
    for i, m in certificate.multipliers.items():
        combo = combo + rows[i].scaled(m)
    if combo.coeffs != target.coeffs:
        return False
    if combo.bound.constant > target.bound.constant:
        return False
    names = set(combo.bound.terms) | set(target.bound.terms)
    for s in names:
        got = combo.bound.terms.get(s, _ZERO)
        want = target.bound.terms.get(s, _ZERO)
        if symbols_nonnegative:
            if got > want:
                return False
        elif got != want:
            return False
    return True


def remove_redundant(
    system: InequalitySystem,
) -> tuple[InequalitySystem, list[tuple[Inequality, ConicCertificate]]]:
    """Drop rows implied by the rest, canonically-latest candidates first.

    One descending sweep reaches a fixed point: a row that survives its test
    was checked against a superset of the final rows.  Certificates for the
    removed rows are then rebuilt against the surviving rows, so multiplier
    indices refer to the returned system's row tuple.
    """
    canon = canonicalize_system(system)
    survivors = list(canon.rows)
    dropped: list[Inequality] = []
    for idx in range(len(survivors) - 1, -1, -1):
        target = survivors[idx]
        rest = survivors[:idx] + survivors[idx + 1 :]
        if conic_decompose(target, rest, canon.symbols_nonnegative) is not None:
            dropped.append(target)
            del survivors[idx]
    removed: list[tuple[Inequality, ConicCertificate]] = []
    for target in dropped:
        cert = conic_decompose(target, survivors, canon.symbols_nonnegative)
        if cert is None:
            raise RuntimeError("implied row lost its certificate; this is a bug")
        removed.append((target, cert))
    return canon.replace(rows=tuple(survivors)), removed


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    # one entry per canonical row of the respective side: its certificate
    # over the *other* side's rows, or None when implication failed
    forward: list[tuple[Inequality, ConicCertificate | None]]
    backward: list[tuple[Inequality, ConicCertificate | None]]


def systems_equivalent(a: InequalitySystem, b: InequalitySystem) -> EquivalenceResult:
    """Mutual implication of two systems over the same variables and symbols."""
    if a.variables != b.variables or a.symbols != b.symbols:
        raise ValueError("systems must declare the same variables and symbols")
    if a.symbols_nonnegative != b.symbols_nonnegative:
        raise ValueError("systems disagree on the sign convention for symbols")
    flag = a.symbols_nonnegative
    forward = [
        (row, conic_decompose(row, b.rows, flag))
        for row in canonicalize_system(a).rows
    ]
    backward = [
        (row, conic_decompose(row, a.rows, flag))
        for row in canonicalize_system(b).rows
    ]
    ok = all(c is not None for _, c in forward) and all(
        c is not None for _, c in backward
    )
    return EquivalenceResult(ok, forward, backward)


class Lcg:
    """64-bit linear congruential generator (Knuth's MMIX constants).

    Draws are sixteenths: value = k / 16 with k = (state >> 32) % 65, giving
    the closed range [0, 4] in steps of 1/16.  Fixed constants keep validation
    runs reproducible across machines.
    """

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.MULTIPLIER * self.state + self.INCREMENT) & self.MASK
        return self.state

    def below(self, n: int) -> int:
        return (self.next_u64() >> 32) % n

    def rational(self) -> Fraction:
        return Fraction(self.below(65), 16)


@dataclass(frozen=True)
class Disagreement:
    trial: int
    symbol_values: dict[str, Fraction]
    point: dict[str, Fraction]
    projected_accepts: bool
    original_feasible: bool

    def to_json(self) -> dict:
        return {
            "trial": self.trial,
            "symbols": {s: format_rational(v) for s, v in self.symbol_values.items()},
            "point": {v: format_rational(x) for v, x in self.point.items()},
            "projected_accepts": self.projected_accepts,
            "original_feasible": self.original_feasible,
        }


@dataclass(frozen=True)
class ValidationReport:
    trials: int
    disagreements: list[Disagreement] = field(default_factory=list)

    @property
    def agreed(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "disagreements": [d.to_json() for d in self.disagreements],
        }


def validate_projection(
    original: InequalitySystem,
    projected: InequalitySystem,
    trials: int,
    seed: int,
) -> ValidationReport:
    """Randomized cross-check of a projection against its source system.

    Each trial draws symbol values and a point over the kept variables, then
    compares membership in the projected system against exact feasibility of
    the original with the kept variables pinned.  Draw order per trial:
    symbols in declared order, then kept variables in declared order.
    """
    if projected.variables != original.kept:
        raise ValueError("projected system must range over the original's kept variables")
    if projected.eliminate:
        raise ValueError("projected system still lists variables to eliminate")
    rng = Lcg(seed)
    kept = original.kept
    disagreements: list[Disagreement] = []
    for trial in range(trials):
        symbol_values = {s: rng.rational() for s in original.symbols}
        point = {v: rng.rational() for v in kept}
        original_numeric = substitute_symbols(original, symbol_values)
        projected_numeric = substitute_symbols(projected, symbol_values)
        accepts = all(satisfies(row, point) for row in projected_numeric.rows)
        pinned = fix_variables(original_numeric, point)
        feasible = lp_feasible(pinned) is not None
        if accepts != feasible:
            disagreements.append(
                Disagreement(trial, symbol_values, point, accepts, feasible)
            )
    return ValidationReport(trials, disagreements)
