"""Statistics record shared by both eliminators."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class EliminationReport:
    """Counts and timing for one elimination run.

    ``basis_element_count`` holds the number of Hilbert basis elements for
    the one-shot method, and the raw projected row count for step-by-step
    elimination.  ``non_redundant_count`` stays None until a redundancy pass
    has actually run.  ``round_rows`` lists the post-round row counts of the
    step-by-step method (empty for the one-shot method).
    """

    constraint_count: int = 0
    aux_var_count: int = 0
    basis_element_count: int = 0
    non_redundant_count: int | None = None
    elapsed: float = 0.0
    round_rows: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "constraints": self.constraint_count,
            "aux_vars": self.aux_var_count,
            "basis_elements": self.basis_element_count,
            "non_redundant": self.non_redundant_count,
            "seconds": self.elapsed,
            "round_rows": list(self.round_rows),
        }
