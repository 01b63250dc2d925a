"""k-edge induced subgraph solver, counter and test laboratory."""

from ._kedge import (
    CertificateError,
    GuardExceeded,
    InvariantViolation,
    Graph,
    SolveResult,
    Thresholds,
    count_eis,
    count_eis_nice,
    count_independent_sets,
    count_is_via_reduction,
    decompose,
    eureka,
    is_degree_extreme,
    is_scattered,
    max_triangular_le,
    solve,
    verify_witness,
)

__all__ = [
    "CertificateError",
    "GuardExceeded",
    "InvariantViolation",
    "Graph",
    "SolveResult",
    "Thresholds",
    "count_eis",
    "count_eis_nice",
    "count_independent_sets",
    "count_is_via_reduction",
    "decompose",
    "eureka",
    "is_degree_extreme",
    "is_scattered",
    "max_triangular_le",
    "solve",
    "verify_witness",
]
