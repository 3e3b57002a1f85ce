"""Exact sepr-sequences of Hermitian matrices.

The signed enhanced principal rank characteristic sequence records, for
each order k, whether the order-k principal minors are all nonzero, some
nonzero or all zero, together with the signs that occur among them.
"""

from .exactnum import CQExt, QExt, RadicandMismatch
from .matrix import (
    HermitianError,
    HermitianMatrix,
    SingularError,
    all_principal_minors,
    determinant,
    diag,
    direct_sum,
    from_rows,
    identity,
    inverse,
    load_matrix,
    negate,
    ones,
    principal_submatrix,
    save_matrix,
    schur_complement,
    validate_hermitian,
    zeros,
)
from .rules import check_sequence, rule_catalog
from .sequence import epr_of, format_sequence, parse_sequence, pr_of, sepr_of, sequences

__version__ = "0.1.0"


def sepr(B: HermitianMatrix) -> str:
    """sepr-sequence of ``B`` as text, e.g. ``"A+NA-"``."""
    return format_sequence(sepr_of(all_principal_minors(B), B.n))


__all__ = [
    "CQExt", "QExt", "RadicandMismatch", "HermitianError", "HermitianMatrix", "SingularError",
    "all_principal_minors", "determinant", "diag", "direct_sum", "from_rows", "identity",
    "inverse", "load_matrix", "negate", "ones", "principal_submatrix", "save_matrix",
    "schur_complement", "validate_hermitian", "zeros", "check_sequence", "rule_catalog",
    "epr_of", "format_sequence", "parse_sequence", "pr_of", "sepr_of", "sequences", "sepr",
]
