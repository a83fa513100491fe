"""Walk through the two-sender rate-region example end to end.

Builds the 8-row system with its two auxiliary split rates, eliminates them
with both engines, shows that the results agree, and spot-checks the
projection by randomized sampling against exact feasibility of the source
system.

Run:  python demos/two_sender_walkthrough.py
"""

from ineqelim import (
    eliminate_by_duality,
    fme_eliminate_all,
    hk_system,
    remove_redundant,
    systems_equivalent,
    validate_projection,
)
from ineqelim.model import format_row


def main() -> None:
    system = hk_system(2)
    print(f"input: {len(system.rows)} rows, eliminate {', '.join(system.eliminate)}")
    for row in system.rows:
        print("   ", format_row(row))

    fme_proj, fme_report, _ = fme_eliminate_all(system)
    dual_proj, dual_report, basis = eliminate_by_duality(system)
    print(f"\nstepwise elimination: rows per round {fme_report.round_rows}")
    print(f"one-shot elimination: {dual_report.basis_element_count} basis elements")

    reduced, removed = remove_redundant(dual_proj)
    print(f"\nprojection ({len(reduced.rows)} rows, {len(removed)} redundant):")
    for row in reduced.rows:
        print("   ", format_row(row))

    equivalence = systems_equivalent(
        remove_redundant(fme_proj)[0], reduced
    )
    print(f"\nboth methods produce the same region: {equivalence.equivalent}")

    report = validate_projection(system, reduced, trials=2000, seed=11)
    print(f"sampling check: {report.trials} trials, "
          f"{len(report.disagreements)} disagreements")


if __name__ == "__main__":
    main()
