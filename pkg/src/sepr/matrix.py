"""Hermitian matrices over Q(sqrt(d))(i) with exact minors.

Indices in the public API are 1-based, matching the usual ``B[alpha]``
notation.  A :class:`HermitianMatrix` also carries ``labels``: the original
row/column indices its rows came from, so principal submatrices and Schur
complements keep the indexing of the matrix they were cut from.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Iterable, Sequence

from . import _ring
from .exactnum import CQExt, QExt, RadicandMismatch, is_square_free

__all__ = [
    "HermitianMatrix",
    "HermitianError",
    "MinorTable",
    "MAX_MINOR_ORDER",
    "validate_hermitian",
    "principal_submatrix",
    "determinant",
    "minor",
    "all_principal_minors",
    "rank",
    "schur_complement",
    "inverse",
    "negate",
    "direct_sum",
    "matmul",
    "identity",
    "ones",
    "zeros",
    "diag",
    "from_rows",
    "to_json",
    "from_json",
    "load_matrix",
    "save_matrix",
    "cofactor_determinant",
]

MAX_MINOR_ORDER = 16


class HermitianError(ValueError):
    """Input is not a valid Hermitian matrix; ``position`` is 1-based (i, j)."""

    def __init__(self, message: str, position: tuple[int, int] | None = None):
        if position is not None:
            message = f"entry ({position[0]}, {position[1]}): {message}"
        super().__init__(message)
        self.position = position


class SingularError(ArithmeticError):
    pass


def _to_cq(x, d: int) -> CQExt:
    if isinstance(x, CQExt):
        return x
    if isinstance(x, QExt):
        return CQExt(x, QExt(0, 0, x.d))
    if isinstance(x, complex):
        raise TypeError("floating-point complex entries are not exact; use CQExt")
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return CQExt(QExt(x, 0, d), QExt(0, 0, d))
    raise TypeError(f"unsupported entry {x!r}")


def _kind_of(components: Iterable[tuple], d: int) -> str:
    has_im = has_rad = False
    for a, b, c, e in components:
        if c or e:
            has_im = True
        if b or e:
            has_rad = True
    if has_rad and d > 1:
        return _ring.CQUAD if has_im else _ring.RQUAD
    return _ring.GAUSS if has_im else _ring.INT


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """Immutable exact Hermitian matrix stored as ``rows / den``.

    ``rows`` holds ring elements in the encoding named by ``kind`` (see
    :mod:`sepr._ring`).  Build instances with :func:`validate_hermitian`,
    :func:`from_rows` or the constructors below rather than directly.
    """

    d: int
    kind: str
    den: int
    rows: tuple
    labels: tuple

    @property
    def n(self) -> int:
        return len(self.rows)

    @cached_property
    def K(self):
        return _ring.kernel(self.kind, self.d)

    @cached_property
    def entries(self) -> tuple:
        K, D, d = self.K, self.den, self.d
        out = []
        for row in self.rows:
            cur = []
            for x in row:
                a, b, c, e = K.decode(x)
                cur.append(CQExt(QExt._raw(Fraction(a, D), Fraction(b, D) if d > 1 else Fraction(0), d),
                                 QExt._raw(Fraction(c, D), Fraction(e, D) if d > 1 else Fraction(0), d)))
            out.append(tuple(cur))
        return tuple(out)

    def __getitem__(self, ij) -> CQExt:
        i, j = ij
        return self.entries[i - 1][j - 1]

    def is_real(self) -> bool:
        return self.kind in (_ring.INT, _ring.RQUAD)

    def __eq__(self, other):
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __neg__(self):
        return negate(self)

    def __add__(self, other):
        return _combine(self, other, 1)

    def __sub__(self, other):
        return _combine(self, other, -1)

    def __mul__(self, scalar):
        s = Fraction(scalar)
        K = self.K
        rows = tuple(tuple(K.scale(x, s.numerator) for x in row) for row in self.rows)
        return _build(self.d, self.kind, rows, self.den * s.denominator, self.labels)

    __rmul__ = __mul__

    def __repr__(self):
        body = "; ".join(", ".join(str(z) for z in row) for row in self.entries)
        extra = f", d={self.d}" if self.d > 1 else ""
        return f"HermitianMatrix([{body}]{extra})"

    def tolist(self) -> list:
        return [list(row) for row in self.entries]


# -- construction -----------------------------------------------------------


def _build(d, kind, rows, den, labels, tighten=False) -> HermitianMatrix:
    K = _ring.kernel(kind, d)
    if den < 0:
        rows = tuple(tuple(K.neg(x) for x in row) for row in rows)
        den = -den
    g = _ring.content(K, rows, den)
    if g > 1:
        rows = tuple(tuple(K.divint(x, g) for x in row) for row in rows)
        den //= g
    if tighten:
        new_kind = _kind_of((K.decode(x) for row in rows for x in row), d)
        if new_kind != kind:
            K2 = _ring.kernel(new_kind, d)
            rows = tuple(tuple(K2.encode(*K.decode(x)) for x in row) for row in rows)
            kind = new_kind
    return HermitianMatrix(d, kind, den, tuple(tuple(r) for r in rows), tuple(labels))


def validate_hermitian(raw: Sequence[Sequence], d: int = 0) -> HermitianMatrix:
    """Check and convert an n x n array of exact entries.

    Entries may be :class:`CQExt`, :class:`QExt`, ``int`` or ``Fraction``.
    Raises :class:`HermitianError` naming the first offending (i, j).
    """
    if not isinstance(d, int) or not is_square_free(d):
        raise HermitianError(f"radicand must be a nonnegative square-free integer, got {d!r}")
    n = len(raw)
    if n == 0:
        raise HermitianError("matrix must have order at least 1")
    cq = []
    for i, row in enumerate(raw):
        if len(row) != n:
            raise HermitianError(f"row {i + 1} has {len(row)} entries, expected {n}")
        cur = []
        for j, x in enumerate(row):
            try:
                z = _to_cq(x, d)
            except (TypeError, ValueError) as exc:
                raise HermitianError(str(exc), (i + 1, j + 1)) from None
            for part in (z.re, z.im):
                if part.b != 0 and part.d != d:
                    raise HermitianError(f"radicand {part.d} does not match matrix radicand {d}",
                                         (i + 1, j + 1))
            cur.append(z)
        cq.append(cur)
    for i in range(n):
        for j in range(i + 1):
            if i == j:
                if cq[i][i].im:
                    raise HermitianError(f"diagonal entry {cq[i][i]} is not real", (i + 1, i + 1))
            elif cq[i][j] != cq[j][i].conj():
                raise HermitianError(
                    f"{cq[i][j]} is not the conjugate of entry ({j + 1}, {i + 1}) = {cq[j][i]}",
                    (i + 1, j + 1))
    comps = [[(z.re.a, z.re.b if d > 1 else 0, z.im.a, z.im.b if d > 1 else 0) for z in row]
             for row in cq]
    den = 1
    for row in comps:
        for comp in row:
            for v in comp:
                den = lcm(den, Fraction(v).denominator)
    kind = _kind_of(((int(a * den), int(b * den), int(c * den), int(e * den))
                     for row in comps for a, b, c, e in row), d)
    K = _ring.kernel(kind, d)
    rows = tuple(tuple(K.encode(*(int(Fraction(v) * den) for v in comp)) for comp in row)
                 for row in comps)
    return _build(d, kind, rows, den, range(1, n + 1))


def from_rows(rows: Sequence[Sequence], d: int = 0) -> HermitianMatrix:
    """Alias of :func:`validate_hermitian` for literal matrices."""
    return validate_hermitian(rows, d)


def identity(n: int, d: int = 0) -> HermitianMatrix:
    return validate_hermitian([[int(i == j) for j in range(n)] for i in range(n)], d)


def ones(n: int, d: int = 0) -> HermitianMatrix:
    return validate_hermitian([[1] * n for _ in range(n)], d)


def zeros(n: int, d: int = 0) -> HermitianMatrix:
    return validate_hermitian([[0] * n for _ in range(n)], d)


def diag(*values, d: int = 0) -> HermitianMatrix:
    n = len(values)
    return validate_hermitian([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], d)


def _lift(B: HermitianMatrix, kind: str):
    K = B.K
    if kind == B.kind:
        return B.rows
    K2 = _ring.kernel(kind, B.d)
    return tuple(tuple(K2.encode(*K.decode(x)) for x in row) for row in B.rows)


def _common(B: HermitianMatrix, C: HermitianMatrix):
    if B.d != C.d:
        # a radicand only matters when some entry uses it
        if B.kind in (_ring.INT, _ring.GAUSS):
            B = _build(C.d, B.kind, B.rows, B.den, B.labels)
        elif C.kind in (_ring.INT, _ring.GAUSS):
            C = _build(B.d, C.kind, C.rows, C.den, C.labels)
        else:
            raise RadicandMismatch(f"radicands differ: {B.d} vs {C.d}")
    kind = _ring.join(B.kind, C.kind)
    return B.d, kind, _lift(B, kind), _lift(C, kind)


def _combine(B: HermitianMatrix, C: HermitianMatrix, sign: int) -> HermitianMatrix:
    if not isinstance(C, HermitianMatrix):
        return NotImplemented
    if B.n != C.n:
        raise ValueError("orders differ")
    d, kind, R1, R2 = _common(B, C)
    K = _ring.kernel(kind, d)
    den = lcm(B.den, C.den)
    f1, f2 = den // B.den, (den // C.den) * sign
    rows = tuple(tuple(K.add(K.scale(x, f1), K.scale(y, f2)) for x, y in zip(r1, r2))
                 for r1, r2 in zip(R1, R2))
    return _build(d, kind, rows, den, B.labels, tighten=True)


# -- index sets -------------------------------------------------------------


def _index_set(B: HermitianMatrix, alpha: Iterable[int], allow_empty=False) -> tuple:
    idx = tuple(alpha)
    for i in idx:
        if not isinstance(i, int) or isinstance(i, bool):
            raise ValueError(f"index {i!r} is not an integer")
        if not 1 <= i <= B.n:
            raise IndexError(f"index {i} out of range 1..{B.n}")
    s = tuple(sorted(set(idx)))
    if len(s) != len(idx):
        raise ValueError(f"repeated index in {idx}")
    if not s and not allow_empty:
        raise ValueError("index set must be nonempty")
    return s


def _sub(rows, ri, ci):
    return [[rows[i][j] for j in ci] for i in ri]


def principal_submatrix(B: HermitianMatrix, alpha: Iterable[int]) -> HermitianMatrix:
    s = _index_set(B, alpha)
    z = [i - 1 for i in s]
    rows = tuple(tuple(B.rows[i][j] for j in z) for i in z)
    return _build(B.d, B.kind, rows, B.den, (B.labels[i] for i in z))


# -- determinants -----------------------------------------------------------


def _real_value(B: HermitianMatrix, x, k: int) -> QExt:
    a, b, c, e = B.K.decode(x)
    if c or e:
        raise ArithmeticError(f"nonreal principal minor {x!r}: arithmetic inconsistency")
    D = B.den ** k
    d = B.d
    return QExt._raw(Fraction(a, D), Fraction(b, D) if d > 1 else Fraction(0), d)


def determinant(B: HermitianMatrix) -> QExt:
    return _real_value(B, _ring.det(B.K, B.rows), B.n)


def minor(B: HermitianMatrix, rows_idx: Iterable[int], cols_idx: Iterable[int]) -> CQExt:
    """``det B[beta | gamma]`` for index sets of equal size (not necessarily principal)."""
    r = _index_set(B, rows_idx, allow_empty=True)
    c = _index_set(B, cols_idx, allow_empty=True)
    if len(r) != len(c):
        raise ValueError("row and column index sets must have equal size")
    x = _ring.det(B.K, _sub(B.rows, [i - 1 for i in r], [j - 1 for j in c]))
    a, b, cc, e = B.K.decode(x)
    D = B.den ** len(r)
    return CQExt(QExt(Fraction(a, D), Fraction(b, D), B.d), QExt(Fraction(cc, D), Fraction(e, D), B.d))


class MinorTable(dict):
    """Mapping from 1-based index tuples to principal minors; ``()`` maps to 1."""

    def __init__(self, n: int, *args):
        super().__init__(*args)
        self.n = n

    def of_order(self, k: int) -> list:
        return [v for key, v in self.items() if len(key) == k]


def all_principal_minors(B: HermitianMatrix, max_order: int = MAX_MINOR_ORDER) -> MinorTable:
    n = B.n
    if n > max_order:
        raise ValueError(f"order {n} exceeds the principal-minor cap {max_order}")
    K, rows, det = B.K, B.rows, _ring.det
    table = MinorTable(n)
    d = B.d
    table[()] = QExt._raw(Fraction(1), Fraction(0), d)
    for k in range(1, n + 1):
        for combo in itertools.combinations(range(n), k):
            x = det(K, [[rows[i][j] for j in combo] for i in combo])
            table[tuple(i + 1 for i in combo)] = _real_value(B, x, k)
    return table


def rank(B: HermitianMatrix) -> int:
    """Rank by exact row reduction (independent of principal minors)."""
    return _ring.rank(B.K, B.rows)


def cofactor_determinant(entries) -> CQExt:
    """Laplace expansion along the first row over plain :class:`CQExt` values.

    Exponential time; used as an independent check on small orders.
    """
    m = [list(r) for r in entries]
    n = len(m)
    if n == 0:
        return CQExt(1)
    if n == 1:
        return m[0][0]
    total = CQExt(0, 0, m[0][0].d)
    for j in range(n):
        if not m[0][j]:
            continue
        rest = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * cofactor_determinant(rest)
        total = total + term if j % 2 == 0 else total - term
    return total


# -- inverse and Schur complement --------------------------------------------


def _adjugate(K, A):
    n = len(A)
    if n == 1:
        return [[K.one]]
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [[A[r][c] for c in range(n) if c != i] for r in range(n) if r != j]
            x = _ring.det(K, sub)
            adj[i][j] = x if (i + j) % 2 == 0 else K.neg(x)
    return adj


def _ring_matmul(K, X, Y):
    inner = len(Y)
    cols = len(Y[0]) if Y else 0
    out = []
    for row in X:
        cur = []
        for j in range(cols):
            acc = K.zero
            for t in range(inner):
                acc = K.add(acc, K.mul(row[t], Y[t][j]))
            cur.append(acc)
        out.append(cur)
    return out


def inverse(B: HermitianMatrix) -> HermitianMatrix:
    K = B.K
    delta = _ring.det(K, B.rows)
    if K.iszero(delta):
        raise SingularError("matrix is singular")
    u, N = K.real_inverse_factor(delta)
    adj = _adjugate(K, B.rows)
    rows = tuple(tuple(K.scale(K.mul(u, x), B.den) for x in row) for row in adj)
    out = _build(B.d, B.kind, rows, N, B.labels, tighten=True)
    _assert_hermitian(out)
    return out


def schur_complement(B: HermitianMatrix, alpha: Iterable[int]) -> HermitianMatrix:
    """``B / B[alpha]`` with labels inherited from ``B``.

    Requires ``B[alpha]`` nonsingular.  If ``alpha`` is all of ``1..n`` the
    result would be empty, which is rejected.
    """
    s = _index_set(B, alpha)
    if len(s) == B.n:
        raise ValueError("alpha must be a proper subset")
    K = B.K
    a = [i - 1 for i in s]
    c = [i for i in range(B.n) if i + 1 not in s]
    A = _sub(B.rows, a, a)
    delta = _ring.det(K, A)
    if K.iszero(delta):
        raise SingularError(f"principal submatrix on {s} is singular")
    adj = _adjugate(K, A)
    X = _sub(B.rows, c, a)
    Y = _sub(B.rows, a, c)
    Z = _sub(B.rows, c, c)
    XAY = _ring_matmul(K, _ring_matmul(K, X, adj), Y)
    u, N = K.real_inverse_factor(delta)
    rows = tuple(tuple(K.mul(u, K.sub(K.mul(delta, z), w)) for z, w in zip(zr, wr))
                 for zr, wr in zip(Z, XAY))
    out = _build(B.d, B.kind, rows, N * B.den, (B.labels[i] for i in c), tighten=True)
    _assert_hermitian(out)
    return out


def _assert_hermitian(B: HermitianMatrix):
    K = B.K
    for i, row in enumerate(B.rows):
        for j in range(i + 1):
            if B.rows[j][i] != K.conj(row[j]):
                raise ArithmeticError(f"result lost Hermitian symmetry at ({i + 1}, {j + 1})")


def negate(B: HermitianMatrix) -> HermitianMatrix:
    K = B.K
    return HermitianMatrix(B.d, B.kind, B.den, tuple(tuple(K.neg(x) for x in row) for row in B.rows),
                           B.labels)


def direct_sum(B: HermitianMatrix, C: HermitianMatrix) -> HermitianMatrix:
    d, kind, R1, R2 = _common(B, C)
    K = _ring.kernel(kind, d)
    den = lcm(B.den, C.den)
    f1, f2 = den // B.den, den // C.den
    n1, n2 = B.n, C.n
    rows = [tuple(K.scale(x, f1) for x in r) + (K.zero,) * n2 for r in R1]
    rows += [(K.zero,) * n1 + tuple(K.scale(x, f2) for x in r) for r in R2]
    return _build(d, kind, tuple(rows), den, range(1, n1 + n2 + 1))


def matmul(B: HermitianMatrix, C: HermitianMatrix) -> list:
    """General product ``B C`` as a list of rows of :class:`CQExt` (not Hermitian in general)."""
    d, kind, R1, R2 = _common(B, C)
    K = _ring.kernel(kind, d)
    P = _ring_matmul(K, R1, R2)
    D = B.den * C.den
    out = []
    for row in P:
        cur = []
        for x in row:
            a, b, c, e = K.decode(x)
            cur.append(CQExt(QExt(Fraction(a, D), Fraction(b, D), d), QExt(Fraction(c, D), Fraction(e, D), d)))
        out.append(cur)
    return out


# -- file format ------------------------------------------------------------


def to_json(B: HermitianMatrix) -> dict:
    return {
        "n": B.n,
        "radicand": B.d,
        "entries": [[z.to_json() for z in row] for row in B.entries],
    }


def from_json(obj) -> HermitianMatrix:
    if not isinstance(obj, dict):
        raise HermitianError("matrix document must be a JSON object")
    unknown = set(obj) - {"n", "radicand", "entries"}
    if unknown:
        raise HermitianError(f"unknown keys {sorted(unknown)}")
    for key in ("n", "entries"):
        if key not in obj:
            raise HermitianError(f"missing key {key!r}")
    n = obj["n"]
    d = obj.get("radicand", 0)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise HermitianError(f"'n' must be a positive integer, got {n!r}")
    if not isinstance(d, int) or isinstance(d, bool) or not is_square_free(d):
        raise HermitianError(f"'radicand' must be a nonnegative square-free integer, got {d!r}")
    rows = obj["entries"]
    if not isinstance(rows, list) or len(rows) != n:
        raise HermitianError(f"'entries' must be a list of {n} rows")
    raw = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise HermitianError(f"row {i + 1} must be a list of {n} entries")
        cur = []
        for j, entry in enumerate(row):
            try:
                cur.append(CQExt.from_json(entry, d))
            except ValueError as exc:
                raise HermitianError(str(exc), (i + 1, j + 1)) from None
        raw.append(cur)
    return validate_hermitian(raw, d)


def load_matrix(path) -> HermitianMatrix:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise HermitianError(f"invalid JSON: {exc}") from None
    return from_json(obj)


def save_matrix(B: HermitianMatrix, path) -> None:
    with open(path, "w") as fh:
        json.dump(to_json(B), fh, indent=1)
        fh.write("\n")
