"""Minimal nonnegative solutions of a raw integer matrix, cross-checked.

Feeds a small matrix through the completion solver and verifies the result
against brute-force enumeration over a bounding box.  The matrix encodes
``a1 - a2 + 2*a3 == 0`` and ``a1 + a2 - 2*a4 == 0`` over nonnegative integers.

Run:  python demos/raw_matrix_basis.py
"""

from ineqelim import brute_force_minimal_solutions, hilbert_basis
from ineqelim.hilbert import parse_matrix

MATRIX_TEXT = """
 1  1
-1  1
 2  0
 0 -2
"""


def main() -> None:
    matrix = parse_matrix(MATRIX_TEXT)
    print("matrix rows (one per unknown):")
    for row in matrix.entries:
        print("   ", " ".join(f"{x:>3}" for x in row))

    basis = hilbert_basis(matrix)
    print(f"\nminimal solutions ({len(basis)}):")
    for element in basis:
        print("   ", element)

    oracle = brute_force_minimal_solutions(matrix, bound=6)
    print(f"\nbrute force over [0,6]^4 finds {len(oracle)}; "
          f"sets match: {set(basis) == set(oracle)}")
    assert set(basis) == set(oracle)

    # Every reported element really solves the system.
    width = len(matrix.entries[0])
    for element in basis:
        for j in range(width):
            total = sum(a * row[j] for a, row in zip(element, matrix.entries))
            assert total == 0
    print("all elements re-verified against the matrix: True")


if __name__ == "__main__":
    main()
