"""Generator for the symmetric l-pair interference-channel rate system.

Each of the l receivers decodes its own private message plus any subset of
the common messages, giving one typicality constraint per receiver i and
binary tuple alpha over the common messages.  Written in terms of the total
rates R_i and the common-part rates R_ic, receiver i's row for tuple alpha
is

    R_i - alpha_i * R_ic + sum(alpha_j * R_jc for j != i) <= I_i_alpha

with one fresh bound symbol per row.  Eliminating the R_ic (the split is an
internal coding choice) leaves the achievable region over the R_i alone.
"""

from __future__ import annotations

from fractions import Fraction

from .model import Inequality, InequalitySystem, LinearBound

ONE = Fraction(1)
MINUS_ONE = Fraction(-1)

MAX_SENDERS = 6  # row count is l * 2**l; keep desk-scale


def symbol_name(decoder: int, alpha: tuple[int, ...]) -> str:
    """Bound symbol for decoder i and tuple alpha, e.g. ``I_1_01``."""
    return f"I_{decoder}_" + "".join(str(b) for b in alpha)


def binary_tuples(length: int) -> list[tuple[int, ...]]:
    """All binary tuples in increasing order, first component most significant."""
    return [
        tuple((value >> (length - 1 - j)) & 1 for j in range(length))
        for value in range(2**length)
    ]


def hk_system(senders: int) -> InequalitySystem:
    """Build the l-sender rate-splitting system; eliminate-set is the R_ic."""
    if not 1 <= senders <= MAX_SENDERS:
        raise ValueError(f"senders must be between 1 and {MAX_SENDERS}, got {senders}")
    total = [f"R{i}" for i in range(1, senders + 1)]
    common = [f"R{i}c" for i in range(1, senders + 1)]
    tuples = binary_tuples(senders)
    symbols = []
    rows = []
    for i in range(1, senders + 1):
        for alpha in tuples:
            sym = symbol_name(i, alpha)
            symbols.append(sym)
            coeffs = {f"R{i}": ONE}
            for j, bit in enumerate(alpha, start=1):
                if not bit:
                    continue
                coeffs[f"R{j}c"] = MINUS_ONE if j == i else ONE
            rows.append(Inequality(coeffs, LinearBound({sym: ONE})))
    return InequalitySystem(
        variables=tuple(total + common),
        eliminate=tuple(common),
        symbols=tuple(symbols),
        rows=tuple(rows),
    )
