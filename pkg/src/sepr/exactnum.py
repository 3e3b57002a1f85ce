"""Exact arithmetic in Q(sqrt(d)) and its complexification Q(sqrt(d))(i).

Rational components are :class:`fractions.Fraction`.  A radicand ``d`` is a
nonnegative square-free integer; ``d = 0`` means plain (Gaussian) rationals.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

__all__ = [
    "QExt",
    "CQExt",
    "RadicandMismatch",
    "parse_rational",
    "format_rational",
    "is_square_free",
    "qx_arith",
    "qx_sign",
    "cqx_conj",
]


class RadicandMismatch(ValueError):
    """Two operands live in different quadratic fields."""


_RATIONAL_RE = re.compile(r"^(-?)(0|[1-9][0-9]*)(?:/([1-9][0-9]*))?$")


def parse_rational(text: str) -> Fraction:
    """Parse the canonical textual form ``"p/q"`` (or ``"p"`` when q = 1).

    Canonical means lowest terms, positive denominator, no sign on zero, no
    leading zeros, no whitespace, and no ``/1`` suffix, i.e. exactly the
    string :func:`format_rational` would produce.
    """
    if not isinstance(text, str):
        raise ValueError(f"rational must be a string, got {type(text).__name__}: {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    sign, num, den = m.groups()
    value = Fraction(int(sign + num), int(den) if den else 1)
    if format_rational(value) != text:
        raise ValueError(
            f"non-canonical rational {text!r} (canonical form is {format_rational(value)!r})"
        )
    return value


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


@lru_cache(maxsize=None)
def is_square_free(d: int) -> bool:
    if d < 0:
        return False
    if d in (0, 1):
        return True
    p = 2
    while p * p <= d:
        if d % (p * p) == 0:
            return False
        p += 1
    return True


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {x!r} as an exact rational")


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


class QExt:
    """The real number ``a + b*sqrt(d)`` with rational ``a``, ``b``.

    Instances are immutable and canonical: when ``d`` is 0 or 1 the
    irrational part is folded into ``a`` so that equality is structural.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 0):
        if not isinstance(d, int) or not is_square_free(d):
            raise ValueError(f"radicand must be a nonnegative square-free integer, got {d!r}")
        a = _as_fraction(a)
        b = _as_fraction(b)
        if d == 1:
            a, b = a + b, Fraction(0)
        elif d == 0:
            b = Fraction(0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QExt is immutable")

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, d: int) -> "QExt":
        # a, b already Fractions and already canonical for d
        self = object.__new__(cls)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)
        return self

    def _coerce(self, other) -> "QExt | None":
        if isinstance(other, QExt):
            if other.d != self.d:
                # a purely rational value is unambiguous in any field
                if other.b == 0:
                    return QExt._raw(other.a, Fraction(0), self.d)
                if self.b == 0:
                    return None
                raise RadicandMismatch(f"radicands differ: {self.d} vs {other.d}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QExt._raw(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    def _promote(self, other):
        """Return (x, y) sharing one radicand, or NotImplemented."""
        y = self._coerce(other)
        if y is NotImplemented:
            return NotImplemented
        if y is None:
            # self is rational, other carries the radicand
            return QExt._raw(self.a, Fraction(0), other.d), other
        return self, y

    def __add__(self, other):
        p = self._promote(other)
        if p is NotImplemented:
            return p
        x, y = p
        return QExt._raw(x.a + y.a, x.b + y.b, x.d)

    __radd__ = __add__

    def __neg__(self):
        return QExt._raw(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        p = self._promote(other)
        if p is NotImplemented:
            return p
        x, y = p
        return QExt._raw(x.a - y.a, x.b - y.b, x.d)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        p = self._promote(other)
        if p is NotImplemented:
            return p
        x, y = p
        return QExt._raw(x.a * y.a + x.d * x.b * y.b, x.a * y.b + x.b * y.a, x.d)

    __rmul__ = __mul__

    def conjugate_radical(self) -> "QExt":
        """The Galois conjugate ``a - b*sqrt(d)``."""
        return QExt._raw(self.a, -self.b, self.d)

    def field_norm(self) -> Fraction:
        """``(a + b sqrt d)(a - b sqrt d) = a^2 - d b^2``."""
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "QExt":
        n = self.field_norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(%d))" % self.d)
        return QExt._raw(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        p = self._promote(other)
        if p is NotImplemented:
            return p
        x, y = p
        return x * y.inverse()

    def __rtruediv__(self, other):
        return self.inverse().__mul__(other)

    def __eq__(self, other):
        if isinstance(other, QExt):
            if self.d != other.d:
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def sign(self) -> int:
        """Exact sign of ``a + b*sqrt(d)`` in {-1, 0, 1}."""
        sa, sb = _sgn(self.a), _sgn(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs, d > 1 square-free so a^2 == d b^2 is impossible
        return sa if self.a * self.a > self.d * self.b * self.b else sb

    def is_rational(self) -> bool:
        return self.b == 0

    def to_json(self) -> list:
        return [format_rational(self.a), format_rational(self.b)]

    @classmethod
    def from_json(cls, pair, d: int) -> "QExt":
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ValueError(f"expected a pair [\"p/q\", \"r/s\"], got {pair!r}")
        a, b = (parse_rational(t) for t in pair)
        if b != 0 and d in (0, 1):
            raise ValueError(f"nonzero sqrt part {pair[1]!r} with radicand {d}")
        return cls(a, b, d)

    def __float__(self):
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self):
        if self.b == 0:
            return f"QExt({format_rational(self.a)})"
        return f"QExt({format_rational(self.a)} + {format_rational(self.b)}*sqrt({self.d}))"

    def __str__(self):
        if self.b == 0:
            return format_rational(self.a)
        s = f"sqrt({self.d})" if self.b == 1 else f"{format_rational(self.b)}*sqrt({self.d})"
        if self.b == -1:
            s = f"-sqrt({self.d})"
        if self.a == 0:
            return s
        return f"{format_rational(self.a)}{'' if s.startswith('-') else '+'}{s}"


def _as_qext(x, d: int) -> QExt:
    if isinstance(x, QExt):
        return x
    return QExt(x, 0, d)


class CQExt:
    """Complex number ``re + im*i`` with ``re``, ``im`` in Q(sqrt(d))."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0, d: int | None = None):
        if d is None:
            d = re.d if isinstance(re, QExt) else im.d if isinstance(im, QExt) else 0
        re = _as_qext(re, d)
        im = _as_qext(im, d)
        if re.d != im.d:
            if re.b == 0:
                re = QExt._raw(re.a, Fraction(0), im.d)
            elif im.b == 0:
                im = QExt._raw(im.a, Fraction(0), re.d)
            else:
                raise RadicandMismatch(f"radicands differ: {re.d} vs {im.d}")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("CQExt is immutable")

    @property
    def d(self) -> int:
        return self.re.d

    @classmethod
    def _wrap(cls, other, d):
        if isinstance(other, CQExt):
            return other
        if isinstance(other, QExt):
            return CQExt(other, QExt._raw(Fraction(0), Fraction(0), other.d))
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CQExt(QExt(other, 0, d), QExt(0, 0, d))
        return NotImplemented

    def __add__(self, other):
        o = CQExt._wrap(other, self.d)
        if o is NotImplemented:
            return o
        return CQExt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return CQExt(-self.re, -self.im)

    def __sub__(self, other):
        o = CQExt._wrap(other, self.d)
        if o is NotImplemented:
            return o
        return CQExt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = CQExt._wrap(other, self.d)
        if o is NotImplemented:
            return o
        return CQExt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self) -> "CQExt":
        return CQExt(self.re, -self.im)

    def abs2(self) -> QExt:
        """``z * conj(z)`` as a real element of Q(sqrt(d))."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "CQExt":
        n = self.abs2()
        if not n:
            raise ZeroDivisionError("division by zero")
        return CQExt(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = CQExt._wrap(other, self.d)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse().__mul__(other)

    def __eq__(self, other):
        o = CQExt._wrap(other, self.d)
        if o is NotImplemented:
            return o
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def to_json(self) -> dict:
        out = {"re": self.re.to_json()}
        if self.im:
            out["im"] = self.im.to_json()
        return out

    @classmethod
    def from_json(cls, obj, d: int) -> "CQExt":
        if not isinstance(obj, dict):
            raise ValueError(f"entry must be an object with 're' (and optional 'im'), got {obj!r}")
        unknown = set(obj) - {"re", "im"}
        if unknown:
            raise ValueError(f"unknown entry keys {sorted(unknown)}")
        if "re" not in obj:
            raise ValueError("entry is missing 're'")
        re_ = QExt.from_json(obj["re"], d)
        im_ = QExt.from_json(obj["im"], d) if "im" in obj else QExt(0, 0, d)
        return cls(re_, im_)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"CQExt({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = str(self.im)
        im = "i" if im == "1" else "-i" if im == "-1" else f"({im})i"
        if not self.re:
            return im
        return f"{self.re}{'' if im.startswith('-') else '+'}{im}"


def qx_arith(op: str, x: QExt, y: QExt) -> QExt:
    """Apply ``op`` in {add, sub, mul, div} to two elements of the same field."""
    if x.d != y.d:
        raise RadicandMismatch(f"radicands differ: {x.d} vs {y.d}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def qx_sign(x: QExt) -> int:
    return x.sign()


def cqx_conj(z: CQExt) -> CQExt:
    return z.conj()
