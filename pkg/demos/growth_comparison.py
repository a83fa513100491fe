"""Compare stepwise and one-shot elimination on the bundled rate-region family.

For each size, reports how many rows each stepwise round produced, the number
of one-shot basis elements, the reduced row count both methods agree on, and
wall-clock times.

Run:  python demos/growth_comparison.py [max_senders]   (default 3)
"""

import sys
import time

from ineqelim import (
    eliminate_by_duality,
    fme_eliminate_all,
    hk_system,
    remove_redundant,
)


def main() -> None:
    max_senders = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    print(f"{'size':>4} {'rows':>5} {'aux':>4} {'round rows':>18} "
          f"{'basis':>6} {'reduced':>8} {'fme s':>7} {'dual s':>7}")
    for senders in range(1, max_senders + 1):
        system = hk_system(senders)

        start = time.perf_counter()
        fme_proj, fme_report, _ = fme_eliminate_all(system)
        fme_reduced, _ = remove_redundant(fme_proj)
        fme_seconds = time.perf_counter() - start

        start = time.perf_counter()
        dual_proj, dual_report, _ = eliminate_by_duality(system)
        dual_reduced, _ = remove_redundant(dual_proj)
        dual_seconds = time.perf_counter() - start

        assert len(fme_reduced.rows) == len(dual_reduced.rows)
        rounds = ",".join(str(n) for n in fme_report.round_rows)
        print(f"{senders:>4} {len(system.rows):>5} {len(system.eliminate):>4} "
              f"{rounds:>18} {dual_report.basis_element_count:>6} "
              f"{len(dual_reduced.rows):>8} {fme_seconds:>7.2f} {dual_seconds:>7.2f}")


if __name__ == "__main__":
    main()
