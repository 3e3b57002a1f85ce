"""Witness matrices for every attainable sepr-sequence of order at most 3.

Witnesses built from other matrices (negatives, inverses, direct sums) are
stored as expressions and resolved through :mod:`sepr.matrix`, so checking
the catalog also exercises exact inversion and negation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .exactnum import CQExt, QExt
from .matrix import (
    HermitianMatrix,
    all_principal_minors,
    diag,
    direct_sum,
    from_rows,
    identity,
    inverse,
    negate,
    ones,
    to_json,
    zeros,
)
from .rules import HERMITIAN, REAL_SYMMETRIC, check_sequence
from .sequence import format_sequence, neg_symbol, parse_sequence, sepr_of

__all__ = [
    "WitnessEntry",
    "Base",
    "Neg",
    "Inv",
    "DSum",
    "BASE_MATRICES",
    "CATALOG",
    "attainable_list",
    "witness",
    "jk_family",
    "jk_predicted",
    "jk_minor_closed_form",
    "verify_catalog",
    "export_catalog",
    "non_inheritance_example",
]

_i = CQExt(0, 1)
_r3 = QExt(0, 1, 3)


def _named():
    m = {
        "J1": ones(1), "I1": identity(1), "O1": zeros(1),
        "I2": identity(2), "J2": ones(2), "O2": zeros(2),
        "2J2-I2": 2 * ones(2) - identity(2),
        "J2-I2": ones(2) - identity(2),
        "diag(1,0)": diag(1, 0), "diag(-1,0)": diag(-1, 0),
        "I3": identity(3), "J3": ones(3), "O3": zeros(3),
        "J3-2I3": ones(3) - 2 * identity(3),
        "J3-I3": ones(3) - identity(3),
        "diag(1,-1,-1)": diag(1, -1, -1), "diag(-1,1,1)": diag(-1, 1, 1),
        "diag(1,-1,0)": diag(1, -1, 0),
        "M[A*A-]": from_rows([[1, 1], [1, -1]]),
        "M[S+A-]": from_rows([[1, 1], [1, 0]]),
        "M[A*A-A+]": from_rows([[1, 2, 2], [2, 1, 2], [2, 2, -1]]),
        "M[A+A+A-]": from_rows([[1, 1, -1], [1, 2, 1], [-1, 1, 2]]),
        "M[A+A-A+]": from_rows([[1, 2, 2], [2, 1, 2], [2, 2, 1]]),
        "M[A+A-A-]": from_rows([[1, 2, -2], [2, 1, 2], [-2, 2, 1]]),
        "M[A*A-N]": from_rows([[1, 2, 0], [2, 1, _r3], [0, _r3, -1]], d=3),
        "M[A+A+N]": from_rows([[2, 1, 1], [1, 2, -1], [1, -1, 2]]),
        "M[A+A-N]": from_rows([[1, 2, 2], [2, 1, 7], [2, 7, 1]]),
        "M[A*S-A+]": from_rows([[-1, -1, 0], [-1, -1, -1], [0, -1, 1]]),
        "M[A+S*A-]": from_rows([[1, -2, -4], [-2, 4, 2], [-4, 2, 4]]),
        "M[A+S+A-]": from_rows([[1, 1, 0], [1, 1, 1], [0, 1, 1]]),
        "M[A+S-A-]": from_rows([[1, 1, 2], [1, 1, 3], [2, 3, 1]]),
        "M[A*S-N]": from_rows([[-1, 0, 0], [0, 1, 1], [0, 1, 1]]),
        "M[A+S-N]": from_rows([[1, 2, 2], [2, 1, 1], [2, 1, 1]]),
        "M[NA-N]": from_rows([[0, _i, 1], [-_i, 0, 1], [1, 1, 0]]),
        "M[NS-N]": from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 0]]),
        "M[S+A*A-]": from_rows([[2, 1, 1], [1, 2, 2], [1, 2, 0]]),
        "M[S+A-A+]": from_rows([[1, 1, 1], [1, 0, 1], [1, 1, 0]]),
        "M[S+A-A-]": from_rows([[2, 1, 1], [1, 0, 2], [1, 2, 0]]),
        "M[S*A-N]": from_rows([[1, 0, 1], [0, -1, 1], [1, 1, 0]]),
        "M[S+A-N]": from_rows([[2, 2, 1], [2, 0, 2], [1, 2, 0]]),
        "M[S*S-A+]": from_rows([[1, 0, 1], [0, -1, 0], [1, 0, 0]]),
        "M[S+S-A-]": from_rows([[1, 0, 0], [0, 0, 1], [0, 1, 0]]),
        "M[S+S+N]": from_rows([[2, 1, 0], [1, 2, 0], [0, 0, 0]]),
        "M[S+S-N]": from_rows([[1, 1, 1], [1, 0, 0], [1, 0, 0]]),
    }
    return m


BASE_MATRICES: dict = _named()


# -- expressions -------------------------------------------------------------


@dataclass(frozen=True)
class Base:
    name: str

    def resolve(self) -> HermitianMatrix:
        return BASE_MATRICES[self.name]

    def __str__(self):
        return self.name

    def atomic(self):
        return not any(ch in self.name for ch in "+-") or self.name.startswith(("M[", "diag"))


@dataclass(frozen=True)
class Neg:
    arg: object

    def resolve(self):
        return negate(self.arg.resolve())

    def __str__(self):
        inner = str(self.arg)
        return f"-{inner}" if self.arg.atomic() else f"-({inner})"

    def atomic(self):
        return False


@dataclass(frozen=True)
class Inv:
    arg: object

    def resolve(self):
        return inverse(self.arg.resolve())

    def __str__(self):
        return f"({self.arg})^-1"

    def atomic(self):
        return True


@dataclass(frozen=True)
class DSum:
    left: object
    right: object

    def resolve(self):
        return direct_sum(self.left.resolve(), self.right.resolve())

    def __str__(self):
        return f"{self.left} (+) {self.right}"

    def atomic(self):
        return False


@dataclass(frozen=True, eq=False)
class WitnessEntry:
    label: tuple
    expr: object
    source: str

    @property
    def key(self) -> str:
        return format_sequence(self.label)

    @property
    def expression(self) -> str:
        return str(self.expr)

    @cached_property
    def matrix(self) -> HermitianMatrix:
        return self.expr.resolve()


B, N_, I_, S_ = Base, Neg, Inv, DSum

_ORDER1 = "order-1 classification"
_T2 = "order-2 table"
_T3 = "order-3 table"
_EX2 = "order-2 table, worked example"
_EX3 = "order-3 table, worked example"

_ENTRIES = [
    ("A+", B("I1"), _ORDER1),
    ("A-", N_(B("I1")), _ORDER1),
    ("N", B("O1"), _ORDER1),

    ("A*A-", B("M[A*A-]"), _EX2),
    ("A+A+", B("I2"), _T2),
    ("A+A-", B("2J2-I2"), _T2),
    ("A+N", B("J2"), _T2),
    ("A-A+", N_(B("I2")), _T2),
    ("A-A-", N_(B("2J2-I2")), _T2),
    ("A-N", N_(B("J2")), _T2),
    ("NA-", B("J2-I2"), _T2),
    ("NN", B("O2"), _T2),
    ("S+A-", B("M[S+A-]"), _EX2),
    ("S+N", B("diag(1,0)"), _T2),
    ("S-A-", N_(B("M[S+A-]")), _EX2),
    ("S-N", B("diag(-1,0)"), _T2),

    ("A*A*A+", B("diag(1,-1,-1)"), _T3),
    ("A*A*A-", B("diag(-1,1,1)"), _T3),
    ("A*A-A+", B("M[A*A-A+]"), _EX3),
    ("A*A-A-", N_(B("M[A*A-A+]")), _EX3),
    ("A+A*A-", I_(N_(B("M[A*A-A+]"))), _EX3),
    ("A+A+A+", B("I3"), _T3),
    ("A+A+A-", B("M[A+A+A-]"), _EX3),
    ("A+A-A+", B("M[A+A-A+]"), _EX3),
    ("A+A-A-", B("M[A+A-A-]"), _EX3),
    ("A-A*A+", N_(I_(N_(B("M[A*A-A+]")))), _EX3),
    ("A-A+A+", N_(B("M[A+A+A-]")), _EX3),
    ("A-A+A-", N_(B("I3")), _T3),
    ("A-A-A+", N_(B("M[A+A-A-]")), _EX3),
    ("A-A-A-", N_(B("M[A+A-A+]")), _EX3),
    ("A*A-N", B("M[A*A-N]"), _EX3),
    ("A+A+N", B("M[A+A+N]"), _EX3),
    ("A+A-N", B("M[A+A-N]"), _EX3),
    ("A-A+N", N_(B("M[A+A+N]")), _EX3),
    ("A-A-N", N_(B("M[A+A-N]")), _EX3),
    ("A+NA-", N_(B("J3-2I3")), _T3),
    ("A-NA+", B("J3-2I3"), _T3),
    ("A+NN", B("J3"), _T3),
    ("A-NN", N_(B("J3")), _T3),
    ("A*S-A+", B("M[A*S-A+]"), _EX3),
    ("A*S-A-", N_(B("M[A*S-A+]")), _EX3),
    ("A+S*A-", B("M[A+S*A-]"), _EX3),
    ("A+S+A-", B("M[A+S+A-]"), _EX3),
    ("A+S-A-", B("M[A+S-A-]"), _EX3),
    ("A-S*A+", N_(B("M[A+S*A-]")), _EX3),
    ("A-S+A+", N_(B("M[A+S+A-]")), _EX3),
    ("A-S-A+", N_(B("M[A+S-A-]")), _EX3),
    ("A*S-N", B("M[A*S-N]"), _EX3),
    ("A+S+N", S_(B("J1"), B("J2")), _T3),
    ("A+S-N", B("M[A+S-N]"), _EX3),
    ("A-S+N", N_(S_(B("J1"), B("J2"))), _T3),
    ("A-S-N", N_(B("M[A+S-N]")), _EX3),
    ("NA-A+", B("J3-I3"), _T3),
    ("NA-A-", N_(B("J3-I3")), _T3),
    ("NA-N", B("M[NA-N]"), _EX3),
    ("NNN", B("O3"), _T3),
    ("NS-N", B("M[NS-N]"), _EX3),
    ("S*A-A+", I_(N_(B("M[A+S*A-]"))), _EX3),
    ("S*A-A-", N_(I_(N_(B("M[A+S*A-]")))), _EX3),
    ("S+A*A-", B("M[S+A*A-]"), _EX3),
    ("S+A-A+", B("M[S+A-A+]"), _EX3),
    ("S+A-A-", B("M[S+A-A-]"), _EX3),
    ("S-A*A+", N_(B("M[S+A*A-]")), _EX3),
    ("S-A-A+", N_(B("M[S+A-A-]")), _EX3),
    ("S-A-A-", N_(B("M[S+A-A+]")), _EX3),
    ("S*A-N", B("M[S*A-N]"), _EX3),
    ("S+A-N", B("M[S+A-N]"), _EX3),
    ("S-A-N", N_(B("M[S+A-N]")), _EX3),
    ("S+NN", S_(B("J1"), B("O2")), _T3),
    ("S-NN", N_(S_(B("J1"), B("O2"))), _T3),
    ("S*S-A+", B("M[S*S-A+]"), _EX3),
    ("S*S-A-", N_(B("M[S*S-A+]")), _EX3),
    ("S+S*A-", I_(N_(B("M[S*S-A+]"))), _EX3),
    ("S+S-A-", B("M[S+S-A-]"), _EX3),
    ("S-S*A+", N_(I_(N_(B("M[S*S-A+]")))), _EX3),
    ("S-S-A+", N_(B("M[S+S-A-]")), _EX3),
    ("S*S-N", B("diag(1,-1,0)"), _T3),
    ("S+S+N", B("M[S+S+N]"), _EX3),
    ("S+S-N", B("M[S+S-N]"), _EX3),
    ("S-S+N", N_(B("M[S+S+N]")), _EX3),
    ("S-S-N", N_(B("M[S+S-N]")), _EX3),
]

del B, N_, I_, S_

CATALOG: tuple = tuple(WitnessEntry(parse_sequence(lab), expr, src) for lab, expr, src in _ENTRIES)
_BY_LABEL = {e.label: e for e in CATALOG}


def attainable_list(n: int) -> list:
    """Sequences of order n attainable by Hermitian matrices, canonically sorted."""
    if n not in (1, 2, 3):
        raise ValueError(f"the attainable sepr-sequences are classified only for orders 1-3, not {n}")
    return sorted(e.label for e in CATALOG if len(e.label) == n)


def witness(seq) -> WitnessEntry | None:
    if isinstance(seq, str):
        seq = parse_sequence(seq)
    return _BY_LABEL.get(tuple(seq))


# -- the +/-(J_n - k I_n) family ----------------------------------------------


def _check_jk(n, k, sign):
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    if n < 4 or not 2 <= k <= n - 2:
        raise ValueError(f"need n >= 4 and 2 <= k <= n-2, got n={n}, k={k}")


def jk_predicted(n: int, k: int, sign: str) -> tuple:
    """Sequence forced for an ANA window centred at k, read off the shape statements.

    ``sign='-'`` is the constant shape (A+)..A+ N A- A-..(A-); ``sign='+'``
    is the alternating shape, starting A+NA-A+ (k odd) or A-NA+A- (k even)
    around position k and alternating away from it.
    """
    _check_jk(n, k, sign)
    if sign == "-":
        return ("A+",) * (k - 1) + ("N",) + ("A-",) * (n - k)
    t = [None] * (n + 1)
    t[k] = "N"
    t[k - 1] = "A+" if k % 2 else "A-"
    t[k + 1] = neg_symbol(t[k - 1])
    for i in range(k - 2, 0, -1):
        t[i] = neg_symbol(t[i + 1])
    for i in range(k + 2, n + 1):
        t[i] = neg_symbol(t[i - 1])
    return tuple(t[1:])


def jk_minor_closed_form(k: int, q: int, sign: str) -> int:
    """Every order-q principal minor of -(J - kI) (sign '-') or J - kI (sign '+')."""
    if sign == "-":
        return k ** (q - 1) * (k - q)
    return (-k) ** (q - 1) * (q - k)


def jk_family(n: int, k: int, sign: str):
    """Return ``(matrix, predicted sepr)`` with matrix ``-(J_n - kI_n)`` or ``J_n - kI_n``."""
    _check_jk(n, k, sign)
    M = ones(n) - k * identity(n)
    if sign == "-":
        M = negate(M)
    return M, jk_predicted(n, k, sign)


# -- verification ----------------------------------------------------------


def verify_catalog(orders=(1, 2, 3)) -> dict:
    """Recompute every witness and compare with its label.

    Returns a report; mismatches and rule failures are listed, never raised.
    """
    checked = {n: 0 for n in orders}
    mismatches = []
    rule_failures = []
    for e in CATALOG:
        n = len(e.label)
        if n not in checked:
            continue
        computed = sepr_of(all_principal_minors(e.matrix), n)
        checked[n] += 1
        if computed != e.label:
            mismatches.append({"label": e.key, "expression": e.expression,
                               "computed": format_sequence(computed)})
        modes = [HERMITIAN] + ([REAL_SYMMETRIC] if e.matrix.is_real() else [])
        for mode in modes:
            v = check_sequence(e.label, n, mode)
            if v.violations:
                rule_failures.append({"label": e.key, "mode": mode, "violations": list(v.violations)})
    return {
        "counts": {str(n): c for n, c in checked.items()},
        "total": sum(checked.values()),
        "mismatches": mismatches,
        "rule_failures": rule_failures,
        "ok": not mismatches and not rule_failures,
    }


def export_catalog() -> list:
    return [
        {
            "sequence": e.key,
            "expression": e.expression,
            "source": e.source,
            "matrix": to_json(e.matrix),
        }
        for e in CATALOG
    ]


def non_inheritance_example() -> HermitianMatrix:
    """5 x 5 matrix with sepr S*S-S*A+A+ whose 4 x 4 principal submatrices all lose the S*."""
    i = _i
    return from_rows([
        [-1, 2, i, 4, 0],
        [2, 0, 6, 1, 8],
        [-i, 6, 1, i, 1 + i],
        [4, 1, -i, -1, 1 + i],
        [0, 8, 1 - i, 1 - i, 0],
    ])
