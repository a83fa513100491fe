"""Inequality systems with symbolic right-hand sides.

A system is a finite list of rows ``sum(coeffs[v] * v) <= bound`` over a
declared, ordered set of variables.  The bound of each row is a linear
combination of named symbols plus a rational constant; symbols stand for
quantities that are by default assumed nonnegative.  A subset of the
variables is marked for elimination.

Rows have a canonical form: the concatenated vector (variable coefficients
in declared order, symbol coefficients in declared order, constant) is
scaled to coprime integers.  A canonical system additionally has its rows
deduplicated and sorted lexicographically, so set comparison between two
systems is plain equality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exact import ParseError, format_rational, parse_rational, row_to_coprime_integers

ZERO = Fraction(0)


@dataclass(frozen=True)
class LinearBound:
    """Right-hand side of a row: ``sum(terms[s] * s) + constant``."""

    terms: dict[str, Fraction] = field(default_factory=dict)
    constant: Fraction = ZERO

    def __post_init__(self):
        object.__setattr__(
            self, "terms", {s: c for s, c in self.terms.items() if c != 0}
        )

    def scaled(self, factor: Fraction) -> "LinearBound":
        return LinearBound(
            {s: c * factor for s, c in self.terms.items()}, self.constant * factor
        )

    def __add__(self, other: "LinearBound") -> "LinearBound":
        terms = dict(self.terms)
        for s, c in other.terms.items():
            terms[s] = terms.get(s, ZERO) + c
        return LinearBound(terms, self.constant + other.constant)


@dataclass(frozen=True)
class Inequality:
    """One constraint ``sum(coeffs[v] * v) <= bound``; absent coeff means 0."""

    coeffs: dict[str, Fraction] = field(default_factory=dict)
    bound: LinearBound = field(default_factory=LinearBound)

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", {v: c for v, c in self.coeffs.items() if c != 0}
        )

    def scaled(self, factor: Fraction) -> "Inequality":
        return Inequality(
            {v: c * factor for v, c in self.coeffs.items()}, self.bound.scaled(factor)
        )

    def __add__(self, other: "Inequality") -> "Inequality":
        coeffs = dict(self.coeffs)
        for v, c in other.coeffs.items():
            coeffs[v] = coeffs.get(v, ZERO) + c
        return Inequality(coeffs, self.bound + other.bound)

    def is_trivial(self) -> bool:
        """True when no variable appears with a nonzero coefficient."""
        return not self.coeffs


@dataclass(frozen=True)
class InequalitySystem:
    variables: tuple[str, ...]
    eliminate: tuple[str, ...] = ()
    symbols: tuple[str, ...] = ()
    rows: tuple[Inequality, ...] = ()
    symbols_nonnegative: bool = True

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "eliminate", tuple(self.eliminate))
        object.__setattr__(self, "symbols", tuple(self.symbols))
        object.__setattr__(self, "rows", tuple(self.rows))
        _validate(self)

    @property
    def kept(self) -> tuple[str, ...]:
        elim = set(self.eliminate)
        return tuple(v for v in self.variables if v not in elim)

    def replace(self, **changes) -> "InequalitySystem":
        state = {
            "variables": self.variables,
            "eliminate": self.eliminate,
            "symbols": self.symbols,
            "rows": self.rows,
            "symbols_nonnegative": self.symbols_nonnegative,
        }
        state.update(changes)
        return InequalitySystem(**state)


def _validate(system: InequalitySystem) -> None:
    seen: set[str] = set()
    for v in system.variables:
        if not v:
            raise ValueError("empty variable name")
        if v in seen:
            raise ValueError(f"duplicate variable {v}")
        seen.add(v)
    seen.clear()
    for s in system.symbols:
        if not s:
            raise ValueError("empty symbol name")
        if s in seen:
            raise ValueError(f"duplicate symbol {s}")
        seen.add(s)
    declared_vars = set(system.variables)
    for v in system.eliminate:
        if v not in declared_vars:
            raise ValueError(f"eliminate lists unknown variable {v}")
    if len(set(system.eliminate)) != len(system.eliminate):
        raise ValueError("duplicate variable in eliminate list")
    declared_syms = set(system.symbols)
    for row in system.rows:
        for v in row.coeffs:
            if v not in declared_vars:
                raise ValueError(f"unknown variable {v}")
        for s in row.bound.terms:
            if s not in declared_syms:
                raise ValueError(f"unknown symbol {s}")


def row_vector(system: InequalitySystem, row: Inequality) -> tuple[Fraction, ...]:
    """Concatenated coefficient vector in declared order, constant last."""
    return tuple(
        [row.coeffs.get(v, ZERO) for v in system.variables]
        + [row.bound.terms.get(s, ZERO) for s in system.symbols]
        + [row.bound.constant]
    )


def canonical_scale(row: Inequality) -> Fraction:
    """Positive factor that makes the row's coefficient vector coprime-integer.

    The factor does not depend on coefficient order, so no system context is
    needed.  All-zero rows get factor 1.
    """
    values = list(row.coeffs.values()) + list(row.bound.terms.values()) + [row.bound.constant]
    _, scale = row_to_coprime_integers(values)
    return scale


def canonicalize_row(row: Inequality) -> Inequality:
    """Scale a row to canonical form; all-zero rows are returned unchanged."""
    scale = canonical_scale(row)
    if scale == 1:
        return row
    return row.scaled(scale)


def canonicalize_system(system: InequalitySystem) -> InequalitySystem:
    """Canonicalize every row, drop exact duplicates, sort lexicographically."""
    unique: dict[tuple[Fraction, ...], Inequality] = {}
    for row in system.rows:
        canon = canonicalize_row(row)
        unique.setdefault(row_vector(system, canon), canon)
    ordered = [unique[key] for key in sorted(unique)]
    return system.replace(rows=tuple(ordered))


def combine_rows(
    rows: Sequence[Inequality], multipliers: Sequence[Fraction | int]
) -> Inequality:
    """Nonnegative combination ``sum(multipliers[i] * rows[i])``."""
    acc = Inequality()
    for row, mult in zip(rows, multipliers):
        if mult:
            acc = acc + row.scaled(Fraction(mult))
    return acc


def substitute_symbols(
    system: InequalitySystem, assignment: Mapping[str, Fraction]
) -> InequalitySystem:
    """Replace every symbol by a rational value, yielding numeric bounds."""
    missing = [s for s in system.symbols if s not in assignment]
    if missing:
        raise ValueError(f"no value for symbol {missing[0]}")
    rows = []
    for row in system.rows:
        const = row.bound.constant + sum(
            (c * assignment[s] for s, c in row.bound.terms.items()), ZERO
        )
        rows.append(Inequality(dict(row.coeffs), LinearBound({}, const)))
    return system.replace(symbols=(), rows=tuple(rows))


def fix_variables(
    system: InequalitySystem, point: Mapping[str, Fraction]
) -> InequalitySystem:
    """Pin some variables to values, moving their contribution to the bound."""
    for v in point:
        if v not in system.variables:
            raise ValueError(f"unknown variable {v}")
    remaining = tuple(v for v in system.variables if v not in point)
    rows = []
    for row in system.rows:
        shift = sum((c * point[v] for v, c in row.coeffs.items() if v in point), ZERO)
        coeffs = {v: c for v, c in row.coeffs.items() if v not in point}
        bound = LinearBound(dict(row.bound.terms), row.bound.constant - shift)
        rows.append(Inequality(coeffs, bound))
    return system.replace(
        variables=remaining,
        eliminate=tuple(v for v in system.eliminate if v not in point),
        rows=tuple(rows),
    )


def satisfies(row: Inequality, point: Mapping[str, Fraction]) -> bool:
    """Exact check of a numeric-bound row at a point (symbols must be gone)."""
    if row.bound.terms:
        raise ValueError("row still has symbolic bound terms")
    lhs = sum((c * point[v] for v, c in row.coeffs.items()), ZERO)
    return lhs <= row.bound.constant


def _format_linear(parts: list[tuple[str, Fraction]], constant: Fraction | None) -> str:
    chunks: list[tuple[str, str]] = []
    for name, coeff in parts:
        magnitude = abs(coeff)
        term = name if magnitude == 1 else f"{format_rational(magnitude)}*{name}"
        chunks.append(("-" if coeff < 0 else "+", term))
    if constant is not None and (constant != 0 or not chunks):
        chunks.append(("-" if constant < 0 else "+", format_rational(abs(constant))))
    if not chunks:
        return "0"
    sign, term = chunks[0]
    rendered = ("-" if sign == "-" else "") + term
    for sign, term in chunks[1:]:
        rendered += f" {sign} {term}"
    return rendered


def format_row(row: Inequality) -> str:
    """Human-readable rendering, names sorted: ``x - 2*y <= s1 + 3/2``."""
    left = _format_linear(sorted(row.coeffs.items()), None)
    right = _format_linear(sorted(row.bound.terms.items()), row.bound.constant)
    return f"{left} <= {right}"


# --- JSON serialization ---------------------------------------------------

def serialize_system(system: InequalitySystem) -> bytes:
    """UTF-8 JSON; keys in schema order, rows in canonical order."""
    rows = sorted(system.rows, key=lambda r: row_vector(system, r))
    doc = {
        "variables": list(system.variables),
        "eliminate": list(system.eliminate),
        "symbols": list(system.symbols),
        "rows": [_row_to_json(system, row) for row in rows],
        "symbols_nonnegative": system.symbols_nonnegative,
    }
    return (json.dumps(doc, indent=2) + "\n").encode("utf-8")


def _row_to_json(system: InequalitySystem, row: Inequality) -> dict:
    coeffs = {
        v: format_rational(row.coeffs[v]) for v in system.variables if v in row.coeffs
    }
    terms = {
        s: format_rational(row.bound.terms[s])
        for s in system.symbols
        if s in row.bound.terms
    }
    return {
        "coeffs": coeffs,
        "bound": {"terms": terms, "const": format_rational(row.bound.constant)},
    }


def parse_system(text: bytes | str) -> InequalitySystem:
    """Parse the JSON schema emitted by :func:`serialize_system`."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")

    variables = _name_list(doc, "variables")
    eliminate = _name_list(doc, "eliminate")
    symbols = _name_list(doc, "symbols")
    _check_unique(variables, "variable")
    _check_unique(symbols, "symbol")
    declared_vars = set(variables)
    declared_syms = set(symbols)
    for v in eliminate:
        if v not in declared_vars:
            raise ParseError(f"unknown variable {v}")

    raw_rows = doc.get("rows", [])
    if not isinstance(raw_rows, list):
        raise ParseError('"rows" must be a list')
    rows = []
    for raw in raw_rows:
        if not isinstance(raw, dict):
            raise ParseError("each row must be an object")
        coeffs = {}
        for v, token in _mapping(raw.get("coeffs", {}), "coeffs").items():
            if v not in declared_vars:
                raise ParseError(f"unknown variable {v}")
            coeffs[v] = parse_rational(token)
        raw_bound = raw.get("bound", {})
        if not isinstance(raw_bound, dict):
            raise ParseError('"bound" must be an object')
        terms = {}
        for s, token in _mapping(raw_bound.get("terms", {}), "terms").items():
            if s not in declared_syms:
                raise ParseError(f"unknown symbol {s}")
            terms[s] = parse_rational(token)
        const = parse_rational(raw_bound.get("const", "0"))
        rows.append(Inequality(coeffs, LinearBound(terms, const)))

    nonneg = doc.get("symbols_nonnegative", True)
    if not isinstance(nonneg, bool):
        raise ParseError('"symbols_nonnegative" must be a boolean')
    try:
        return InequalitySystem(
            tuple(variables), tuple(eliminate), tuple(symbols), tuple(rows), nonneg
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _name_list(doc: dict, key: str) -> list[str]:
    value = doc.get(key, [])
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise ParseError(f'"{key}" must be a list of strings')
    return value


def _check_unique(names: Iterable[str], kind: str) -> None:
    seen: set[str] = set()
    for name in names:
        if name in seen:
            raise ParseError(f"duplicate {kind} {name}")
        seen.add(name)


def _mapping(value, key: str) -> dict:
    if not isinstance(value, dict) or not all(isinstance(t, str) for t in value.values()):
        raise ParseError(f'"{key}" must map names to rational strings')
    return value
