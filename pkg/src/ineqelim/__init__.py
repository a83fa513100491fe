"""Exact elimination of variables from linear inequality systems.

Two engines produce the same projection: step-by-step Fourier-Motzkin
elimination, and a one-shot method that reads the projected rows off the
Hilbert basis of a dual integer system.  Arithmetic is exact throughout
(`fractions.Fraction`), every emitted row carries a combination certificate,
and the analysis helpers (redundancy removal, equivalence, sampling
validation) give independent ways to cross-check results.
"""

from .analysis import (
    ConicCertificate,
    EquivalenceResult,
    Lcg,
    ValidationReport,
    conic_decompose,
    lp_feasible,
    remove_redundant,
    systems_equivalent,
    validate_projection,
    verify_certificate,
)
from .exact import ParseError, Rational, format_rational, parse_rational, rat_normalize
from .fme import fme_eliminate_all, fme_eliminate_one, verify_fme_certificate
from .hilbert import (
    DiophantineMatrix,
    ResourceLimitError,
    brute_force_minimal_solutions,
    dual_matrix,
    duality_row,
    eliminate_by_duality,
    hilbert_basis,
)
from .model import (
    Inequality,
    InequalitySystem,
    LinearBound,
    canonicalize_row,
    canonicalize_system,
    combine_rows,
    fix_variables,
    format_row,
    parse_system,
    satisfies,
    serialize_system,
    substitute_symbols,
)
from .ratereg import hk_system
from .report import EliminationReport

__all__ = [
    "ConicCertificate",
    "DiophantineMatrix",
    "EliminationReport",
    "EquivalenceResult",
    "Inequality",
    "InequalitySystem",
    "Lcg",
    "LinearBound",
    "ParseError",
    "Rational",
    "ResourceLimitError",
    "ValidationReport",
    "brute_force_minimal_solutions",
    "canonicalize_row",
    "canonicalize_system",
    "combine_rows",
    "conic_decompose",
    "dual_matrix",
    "duality_row",
    "eliminate_by_duality",
    "fix_variables",
    "fme_eliminate_all",
    "fme_eliminate_one",
    "format_rational",
    "format_row",
    "hilbert_basis",
    "hk_system",
    "lp_feasible",
    "parse_rational",
    "parse_system",
    "rat_normalize",
    "remove_redundant",
    "satisfies",
    "serialize_system",
    "substitute_symbols",
    "systems_equivalent",
    "validate_projection",
    "verify_certificate",
    "verify_fme_certificate",
]
