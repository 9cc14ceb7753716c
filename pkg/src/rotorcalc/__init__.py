"""Exact roots-of-unity algebra, rotor-chain expressions, and closed forms
for linear recurrences, cross-validated against exact iteration."""

from .binet import (
    BinetForm,
    MForm,
    PathCheck,
    TermValue,
    VerifyReport,
    binet2,
    binet3,
    closed_term,
    component,
    m_form,
    solve_weights,
    verify,
)
from .errors import (
    ArityMismatch,
    BranchSelectionFailed,
    DegenerateRoots,
    DomainError,
    DuplicateElements,
    EvaluationError,
    InconsistentSigmas,
    InvalidOrder,
    LexError,
    NoConvergence,
    NonConvergent,
    ParseError,
    SingularSystem,
    UnsupportedDegree,
    ZeroDivisionInRatio,
    ZeroLeadingCoefficient,
    ZeroResultant,
)
from .expr import evaluate, format_expr, parse, tokenize
from .recurrence import (
    CharPoly,
    Recurrence,
    characteristic_polynomial,
    characteristic_ratio,
    from_general,
    iterate,
)
from .roots import (
    PermutationTable,
    ResolventSet,
    RootSet,
    cubic_resolvents,
    cubic_roots,
    numeric_roots,
    permutation_tables,
    quadratic_roots,
    roots_from_sigma,
    sigma_from_roots,
    vieta_residuals,
)
from .unity import (
    EIGHTH,
    HALF,
    IDENTITY,
    QUARTER,
    SIXTH,
    THIRD,
    THREE_QUARTERS,
    TWO_THIRDS,
    AxiomReport,
    Discrepancy,
    GroupTable,
    RotatedTerm,
    Rotor,
    chain_resultant,
    cyclic_closure,
    diff_reference,
    family_elements,
    multiplication_table,
    negative_nth_roots,
    nth_roots,
    pair_polar,
    roots_sum,
    rotor_mul,
    rotor_pow,
    rotor_value,
)

__version__ = "0.1.0"

__all__ = [
    "EIGHTH", "HALF", "IDENTITY", "QUARTER", "SIXTH", "THIRD",
    "THREE_QUARTERS", "TWO_THIRDS",
    "AxiomReport", "BinetForm", "CharPoly", "Discrepancy", "GroupTable",
    "MForm", "PathCheck", "PermutationTable", "Recurrence", "ResolventSet",
    "RootSet", "RotatedTerm", "Rotor", "TermValue", "VerifyReport",
    "binet2", "binet3", "chain_resultant", "characteristic_polynomial",
    "characteristic_ratio", "closed_term", "component", "cubic_resolvents",
    "cubic_roots", "cyclic_closure", "diff_reference", "evaluate",
    "family_elements", "format_expr", "from_general", "iterate", "m_form",
    "multiplication_table", "negative_nth_roots", "nth_roots", "numeric_roots",
    "pair_polar", "parse", "permutation_tables", "quadratic_roots",
    "roots_from_sigma", "roots_sum", "rotor_mul", "rotor_pow", "rotor_value",
    "sigma_from_roots", "solve_weights", "tokenize", "verify",
    "vieta_residuals",
    "ArityMismatch", "BranchSelectionFailed", "DegenerateRoots", "DomainError",
    "DuplicateElements", "EvaluationError", "InconsistentSigmas",
    "InvalidOrder", "LexError", "NoConvergence", "NonConvergent", "ParseError",
    "SingularSystem", "UnsupportedDegree", "ZeroDivisionInRatio",
    "ZeroLeadingCoefficient", "ZeroResultant",
]
