"""One-shot elimination through the Hilbert basis of a dual system.

Eliminating variables from `sum_r lam_r * row_r` requires integer multipliers
a >= 0 whose combination zeroes every eliminated column: a^T B = 0, with B the
eliminated-variable block of the (integer-scaled) rows.  The componentwise
minimal nonzero solutions of that system form its Hilbert basis; each basis
element yields one projected inequality, and together they yield the whole
projection in a single step.

The basis is computed by breadth-first completion from the unit vectors
(Contejean-Devie): a partial combination t grows by e_r only when adding row
r moves the residual value toward zero (negative inner product), and any
candidate dominated by a known solution is pruned.  Search runs level by
level in the 1-norm, so solutions are found in nondecreasing norm and every
collected solution is minimal.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .exact import ParseError, row_to_coprime_integers
from .model import (
    InequalitySystem,
    Inequality,
    canonicalize_row,
    canonicalize_system,
    combine_rows,
)
from .report import EliminationReport

HilbertElement = tuple[int, ...]

DEFAULT_MAX_FRONTIER = 5_000_000
DEFAULT_MAX_NORM = 10_000

BRUTE_FORCE_CAP = 10**8


class ResourceLimitError(RuntimeError):
    """Completion hit a configured ceiling; partial progress in the fields."""

    def __init__(self, message: str, *, level: int, frontier: int, solutions: int):
        super().__init__(message)
        self.level = level
        self.frontier = frontier
        self.solutions = solutions


@dataclass(frozen=True)
class DiophantineMatrix:
    """Integer matrix whose left null space over nonnegative integers we want.

    Row r is the eliminated-variable block of source row r after scaling by
    row_scales[r] (the factor making the full variable vector coprime
    integers).
    """

    entries: tuple[tuple[int, ...], ...]
    row_scales: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        object.__setattr__(self, "row_scales", tuple(self.row_scales))
        if not self.entries:
            raise ValueError("matrix needs at least one row")
        width = len(self.entries[0])
        if any(len(r) != width for r in self.entries):
            raise ValueError("matrix rows must have equal width")
        if len(self.row_scales) != len(self.entries):
            raise ValueError("one scale per row required")
        if any(s <= 0 for s in self.row_scales):
            raise ValueError("row scales must be positive")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "DiophantineMatrix":
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        return cls(entries, tuple(Fraction(1) for _ in entries))


def dual_matrix(system: InequalitySystem) -> DiophantineMatrix:
    """Eliminated-variable block of the rows, scaled to coprime integers."""
    if not system.eliminate:
        raise ValueError("system has no variables to eliminate")
    positions = [system.variables.index(v) for v in system.eliminate]
    entries = []
    scales = []
    for row in system.rows:
        vec = [row.coeffs.get(v, Fraction(0)) for v in system.variables]
        ints, scale = row_to_coprime_integers(vec)
        entries.append(tuple(ints[p] for p in positions))
        scales.append(scale)
    return DiophantineMatrix(tuple(entries), tuple(scales))


def _dominated(t: HilbertElement, mask: int, solutions: list[HilbertElement], masks: list[int]) -> bool:
    for s, sm in zip(solutions, masks):
        if sm & ~mask == 0 and all(a <= b for a, b in zip(s, t)):
            return True
    return False


def _support_mask(t: HilbertElement) -> int:
    mask = 0
    for i, x in enumerate(t):
        if x:
            mask |= 1 << i
    return mask


def hilbert_basis(
    matrix: DiophantineMatrix,
    *,
    max_frontier: int = DEFAULT_MAX_FRONTIER,
    max_norm: int = DEFAULT_MAX_NORM,
    engine: str = "auto",
) -> tuple[HilbertElement, ...]:
    """All minimal nonzero a >= 0 with a^T entries == 0, lexicographically sorted.

    Raises ResourceLimitError when the frontier outgrows max_frontier or the
    search level passes max_norm; the result is never silently truncated.

    `engine` picks the level-processing implementation: "pure" is the
    reference loop, "vector" batches whole levels through numpy integer
    arrays (same algorithm, same results), "auto" uses "vector" for large
    instances when numpy is importable.
    """
    if engine not in ("auto", "pure", "vector"):
        raise ValueError(f"unknown engine {engine!r}")
    if engine != "pure":
        vectorized = _vector_engine(matrix)
        if vectorized is not None:
            if engine == "vector" or len(matrix.entries) >= 32:
                return vectorized(max_frontier, max_norm)
        elif engine == "vector":
            raise ValueError("vector engine unavailable (numpy not importable)")
    return _basis_pure(matrix, max_frontier, max_norm)


def _basis_pure(
    matrix: DiophantineMatrix, max_frontier: int, max_norm: int
) -> tuple[HilbertElement, ...]:
    rows = matrix.entries
    m = len(rows)
    width = len(rows[0])
    zero_value = (0,) * width

    solutions: list[HilbertElement] = []
    masks: list[int] = []
    frontier: dict[HilbertElement, tuple[int, ...]] = {}
    for r in range(m):
        unit = tuple(1 if i == r else 0 for i in range(m))
        frontier.setdefault(unit, rows[r])

    level = 1
    while frontier:
        if level > max_norm:
            raise ResourceLimitError(
                f"search level exceeded max_norm={max_norm}",
                level=level, frontier=len(frontier), solutions=len(solutions),
            )
        if len(frontier) > max_frontier:
            raise ResourceLimitError(
                f"frontier grew past max_frontier={max_frontier}",
                level=level, frontier=len(frontier), solutions=len(solutions),
            )
        extend: list[tuple[HilbertElement, tuple[int, ...]]] = []
        for t, value in frontier.items():
            if value == zero_value:
                solutions.append(t)
                masks.append(_support_mask(t))
            else:
                extend.append((t, value))
        next_frontier: dict[HilbertElement, tuple[int, ...]] = {}
        for t, value in extend:
            for r in range(m):
                row = rows[r]
                if sum(a * b for a, b in zip(value, row)) >= 0:
                    continue
                grown = t[:r] + (t[r] + 1,) + t[r + 1 :]
                if grown in next_frontier:
                    continue
                mask = _support_mask(grown)
                if _dominated(grown, mask, solutions, masks):
                    continue
                next_frontier[grown] = tuple(a + b for a, b in zip(value, row))
        frontier = next_frontier
        level += 1
    return tuple(sorted(solutions))


def _vector_engine(matrix: DiophantineMatrix):
    """Build the numpy level engine, or None when unavailable/unsafe."""
    try:
        import numpy as np
    except ImportError:
        return None

    entries = matrix.entries
    width = len(entries[0])
    max_abs = max((abs(x) for row in entries for x in row), default=0)
    col_sum = max(
        (sum(abs(row[j]) for row in entries) for j in range(width)), default=0
    )
    # int64 products must be exact: coordinates stay below 2^16, so values
    # are bounded by 2^16 * col_sum and descent dot products by width times
    # the value bound times the largest entry.
    value_bound = (1 << 16) * col_sum
    if width * value_bound * max(max_abs, 1) >= (1 << 62):
        return None

    def run(max_frontier: int, max_norm: int) -> tuple[HilbertElement, ...]:
        return _basis_vector(np, entries, max_frontier, max_norm)

    return run


def _basis_vector(np, entries, max_frontier: int, max_norm: int):
    """Level-synchronous form of the same completion, batched through numpy.

    Per level: values come from one matrix product, the descent test from
    another, duplicates go through np.unique, and dominance pruning uses the
    fact that a child t + e_r of a live node t can only be dominated by a
    solution s with s_r = t_r + 1 (otherwise s would already dominate t), so
    only the (coordinate, value) bucket of the solution set is compared.
    """
    B = np.array(entries, dtype=np.int64)
    m = B.shape[0]
    # coordinates can briefly reach max_norm + 1 before the level cap fires
    if max_norm + 1 < (1 << 8):
        coord_type = np.uint8
    elif max_norm + 1 < (1 << 16):
        coord_type = np.uint16
    else:
        return _basis_pure(DiophantineMatrix.from_rows(entries), max_frontier, max_norm)

    frontier = np.eye(m, dtype=coord_type)
    solution_blocks = []
    solution_count = 0
    level = 1
    while len(frontier):
        if level > max_norm:
            raise ResourceLimitError(
                f"search level exceeded max_norm={max_norm}",
                level=level, frontier=len(frontier), solutions=solution_count,
            )
        if len(frontier) > max_frontier:
            raise ResourceLimitError(
                f"frontier grew past max_frontier={max_frontier}",
                level=level, frontier=len(frontier), solutions=solution_count,
            )
        values = frontier.astype(np.int64) @ B
        is_solution = ~values.any(axis=1)
        if is_solution.any():
            solution_blocks.append(frontier[is_solution].copy())
            solution_count += int(is_solution.sum())
        growable = frontier[~is_solution]
        grow_values = values[~is_solution]
        if not len(growable):
            break
        descent = grow_values @ B.T
        node_idx, grow_r = np.nonzero(descent < 0)
        children = growable[node_idx]
        children[np.arange(len(node_idx)), grow_r] += 1
        children, first = np.unique(children, axis=0, return_index=True)
        if solution_count:
            children = _prune_dominated(np, children, grow_r[first], solution_blocks)
        frontier = children
        level += 1

    if not solution_blocks:
        return ()
    stacked = np.concatenate(solution_blocks)
    order = np.lexsort(stacked.T[::-1])
    return tuple(tuple(int(x) for x in stacked[i]) for i in order)


def _prune_dominated(np, children, grow_r, solution_blocks):
    """Drop children componentwise-dominated by a known solution.

    A dominating solution s for child c = t + e_r must satisfy s_r = c_r:
    with s_r <= t_r it would dominate the live parent t outright.  So each
    child only needs comparing against the solutions that agree with it on
    its growth coordinate, which partitions the work into small
    (coordinate, value) buckets instead of one all-pairs sweep.
    """
    solutions = np.concatenate(solution_blocks)
    keep = np.ones(len(children), dtype=bool)
    coords = np.unique(grow_r)
    for r in coords:
        at_r = np.nonzero(grow_r == r)[0]
        sol_vals = solutions[:, r]
        child_vals = children[at_r, r]
        for v in np.unique(child_vals):
            bucket = solutions[sol_vals == v]
            if not len(bucket):
                continue
            targets = at_r[child_vals == v]
            for i in range(0, len(targets), 4096):
                idx = targets[i : i + 4096]
                dom = (
                    (bucket[None, :, :] <= children[idx][:, None, :])
                    .all(axis=2)
                    .any(axis=1)
                )
                keep[idx[dom]] = False
    return children[keep]


def brute_force_minimal_solutions(
    matrix: DiophantineMatrix, bound: int
) -> tuple[HilbertElement, ...]:
    """Oracle: enumerate the whole box [0, bound]^m and filter minimal solutions.

    Deliberately dumb;  guards against boxes past 10^8 points.
    """
    rows = matrix.entries
    m = len(rows)
    width = len(rows[0])
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if (bound + 1) ** m > BRUTE_FORCE_CAP:
        raise ValueError(f"box ({bound + 1})^{m} exceeds the enumeration cap {BRUTE_FORCE_CAP}")
    hits: list[HilbertElement] = []
    for t in product(range(bound + 1), repeat=m):
        if not any(t):
            continue
        if all(
            sum(t[r] * rows[r][j] for r in range(m)) == 0 for j in range(width)
        ):
            hits.append(t)
    hits.sort(key=lambda t: (sum(t), t))
    minimal: list[HilbertElement] = []
    for t in hits:
        if not any(all(a <= b for a, b in zip(s, t)) for s in minimal):
            minimal.append(t)
    return tuple(sorted(minimal))


def duality_row(
    system: InequalitySystem, matrix: DiophantineMatrix, element: HilbertElement
) -> Inequality:
    """Projected row induced by one basis element, in canonical form."""
    multipliers = [Fraction(h) * s for h, s in zip(element, matrix.row_scales)]
    row = combine_rows(system.rows, multipliers)
    eliminated = set(system.eliminate)
    if any(v in eliminated for v in row.coeffs):
        raise RuntimeError("basis element failed to cancel the eliminated block")
    return canonicalize_row(row)


def _is_vacuous(row: Inequality) -> bool:
    return (
        row.is_trivial()
        and all(c >= 0 for c in row.bound.terms.values())
        and row.bound.constant >= 0
    )


def eliminate_by_duality(
    system: InequalitySystem,
    *,
    drop_trivial: bool = True,
    max_frontier: int = DEFAULT_MAX_FRONTIER,
    max_norm: int = DEFAULT_MAX_NORM,
) -> tuple[InequalitySystem, EliminationReport, list[HilbertElement]]:
    """Eliminate all designated variables in one step via the dual basis.

    Returns the projected system, a run report, and the basis elements in
    emission order (before the vacuous-row drop), which serve as combination
    certificates for the output rows.
    """
    start = time.perf_counter()
    matrix = dual_matrix(system)
    basis = hilbert_basis(matrix, max_frontier=max_frontier, max_norm=max_norm)
    rows_out = []
    for element in basis:
        row = duality_row(system, matrix, element)
        if drop_trivial and system.symbols_nonnegative and _is_vacuous(row):
            continue
        rows_out.append(row)
    projected = canonicalize_system(
        system.replace(variables=system.kept, eliminate=(), rows=tuple(rows_out))
    )
    report = EliminationReport(
        constraint_count=len(system.rows),
        aux_var_count=len(system.eliminate),
        basis_element_count=len(basis),
        non_redundant_count=None,
        elapsed=time.perf_counter() - start,
        round_rows=[],
    )
    return projected, report, list(basis)


def parse_matrix(text: str) -> DiophantineMatrix:
    """Raw format: one row per line, whitespace-separated integers."""
    rows: list[tuple[int, ...]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            rows.append(tuple(int(tok) for tok in stripped.split()))
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers, got {stripped!r}") from None
    if not rows:
        raise ParseError("matrix text contains no rows")
    width = len(rows[0])
    for lineno, row in enumerate(rows, start=1):
        if len(row) != width:
            raise ParseError(f"row {lineno} has {len(row)} entries, expected {width}")
    return DiophantineMatrix.from_rows(rows)


def format_elements(elements: Iterable[HilbertElement]) -> str:
    return "".join(" ".join(str(x) for x in e) + "\n" for e in elements)
