"""Exact rational arithmetic helpers.

Every coefficient in this package is a ``fractions.Fraction``: an exact
rational with arbitrary-precision integer numerator and positive
denominator, kept in lowest terms by construction.  No floating point is
used anywhere.

The wire format for a rational is ``"p/q"`` when the denominator is not 1,
otherwise just ``"p"`` (decimal digits, optional leading minus).  Whitespace
inside the token is rejected.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm

Rational = Fraction

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


class ParseError(ValueError):
    """Malformed textual input (rational tokens, JSON systems, raw matrices)."""


def rat_normalize(numerator: int, denominator: int) -> Fraction:
    """Canonical rational ``numerator/denominator``.

    Raises ``ZeroDivisionError`` for a zero denominator, like the Fraction
    constructor it wraps.
    """
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(token: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a Fraction.

    Stricter than ``Fraction(str)``: no whitespace, no decimal points or
    exponents, and a zero denominator is reported as such.
    """
    if not isinstance(token, str):
        raise ParseError(f"expected a rational string, got {token!r}")
    m = _RATIONAL_RE.match(token)
    if m is None:
        raise ParseError(f"malformed rational {token!r}")
    num = int(m.group(1))
    den_text = m.group(2)
    if den_text is None:
        return Fraction(num)
    den = int(den_text)
    if den == 0:
        raise ParseError(f"zero denominator in rational {token!r}")
    return Fraction(num, den)


def row_to_coprime_integers(row: list[Fraction]) -> tuple[list[int], Fraction]:
    """Scale a rational row to coprime integers.

    Returns ``(ints, scale)`` with ``ints[k] == scale * row[k]`` for all k,
    ``scale > 0``, and gcd over the nonzero ``|ints[k]|`` equal to 1.  An
    all-zero row comes back as all zeros with scale 1.
    """
    if not row:
        raise ValueError("row must be non-empty")
    common_den = lcm(*(v.denominator for v in row))
    ints = [int(v * common_den) for v in row]
    common = gcd(*ints)
    if common == 0:
        return ints, Fraction(1)
    return [i // common for i in ints], Fraction(common_den, common)
