"""Denominator-cleared integer kernels behind the matrix module.

A matrix over Q(sqrt(d))(i) is stored as ``R / D`` where ``D`` is a positive
integer and every entry of ``R`` lies in the ring Z[sqrt(d)][i].  Four
encodings keep the common cases cheap:

    int    a                      (real rational entries)
    gauss  (a, c)        a + c i  (Gaussian rationals)
    rquad  (a, b)        a + b sqrt(d)
    cquad  (a, b, c, e)  (a + b sqrt(d)) + (c + e sqrt(d)) i

All division performed here is exact division inside the ring.
"""

from __future__ import annotations

from math import gcd

INT, GAUSS, RQUAD, CQUAD = "int", "gauss", "rquad", "cquad"

_JOIN = {
    (INT, INT): INT, (INT, GAUSS): GAUSS, (INT, RQUAD): RQUAD, (INT, CQUAD): CQUAD,
    (GAUSS, GAUSS): GAUSS, (GAUSS, RQUAD): CQUAD, (GAUSS, CQUAD): CQUAD,
    (RQUAD, RQUAD): RQUAD, (RQUAD, CQUAD): CQUAD, (CQUAD, CQUAD): CQUAD,
}


def join(k1: str, k2: str) -> str:
    return _JOIN.get((k1, k2)) or _JOIN[(k2, k1)]


class IntKernel:
    kind = INT
    zero = 0
    one = 1

    def __init__(self, d: int = 0):
        self.d = d

    @staticmethod
    def add(x, y):
        return x + y

    @staticmethod
    def sub(x, y):
        return x - y

    @staticmethod
    def mul(x, y):
        return x * y

    @staticmethod
    def neg(x):
        return -x

    @staticmethod
    def conj(x):
        return x

    @staticmethod
    def iszero(x):
        return x == 0

    @staticmethod
    def exdiv(x, y):
        return x // y

    @staticmethod
    def encode(a, b, c, e):
        return a

    @staticmethod
    def decode(x):
        return x, 0, 0, 0

    @staticmethod
    def ints(x):
        return (x,)

    @staticmethod
    def scale(x, k):
        return x * k

    @staticmethod
    def divint(x, k):
        return x // k

    def det2(self, a, b, c, e):
        return a * e - b * c

    def det3(self, m):
        (a, b, c), (p, q, r), (u, v, w) = m
        return a * (q * w - r * v) - b * (p * w - r * u) + c * (p * v - q * u)

    def real_inverse_factor(self, x):
        """Return (u, N) with u*x == N a nonzero integer; x must be real."""
        return 1, x


class GaussKernel(IntKernel):
    kind = GAUSS
    zero = (0, 0)
    one = (1, 0)

    @staticmethod
    def add(x, y):
        return (x[0] + y[0], x[1] + y[1])

    @staticmethod
    def sub(x, y):
        return (x[0] - y[0], x[1] - y[1])

    @staticmethod
    def mul(x, y):
        a, c = x
        p, q = y
        return (a * p - c * q, a * q + c * p)

    @staticmethod
    def neg(x):
        return (-x[0], -x[1])

    @staticmethod
    def conj(x):
        return (x[0], -x[1])

    @staticmethod
    def iszero(x):
        return x[0] == 0 and x[1] == 0

    @staticmethod
    def exdiv(x, y):
        a, c = x
        p, q = y
        n = p * p + q * q
        return ((a * p + c * q) // n, (c * p - a * q) // n)

    @staticmethod
    def encode(a, b, c, e):
        return (a, c)

    @staticmethod
    def decode(x):
        return x[0], 0, x[1], 0

    @staticmethod
    def ints(x):
        return x

    @staticmethod
    def scale(x, k):
        return (x[0] * k, x[1] * k)

    @staticmethod
    def divint(x, k):
        return (x[0] // k, x[1] // k)

    def det2(self, a, b, c, e):
        return self.sub(self.mul(a, e), self.mul(b, c))

    def det3(self, m):
        mul, sub, add = self.mul, self.sub, self.add
        (a, b, c), (p, q, r), (u, v, w) = m
        return add(sub(mul(a, sub(mul(q, w), mul(r, v))), mul(b, sub(mul(p, w), mul(r, u)))),
                   mul(c, sub(mul(p, v), mul(q, u))))

    def real_inverse_factor(self, x):
        if x[1] != 0:
            raise ArithmeticError("expected a real ring element")
        return self.one, x[0]


class RQuadKernel(GaussKernel):
    kind = RQUAD

    def mul(self, x, y):
        a, b = x
        p, q = y
        return (a * p + self.d * b * q, a * q + b * p)

    @staticmethod
    def conj(x):
        return x

    def exdiv(self, x, y):
        a, b = x
        p, q = y
        n = p * p - self.d * q * q
        return ((a * p - self.d * b * q) // n, (b * p - a * q) // n)

    @staticmethod
    def encode(a, b, c, e):
        return (a, b)

    @staticmethod
    def decode(x):
        return x[0], x[1], 0, 0

    def real_inverse_factor(self, x):
        a, b = x
        return (a, -b), a * a - self.d * b * b


class CQuadKernel(GaussKernel):
    kind = CQUAD
    zero = (0, 0, 0, 0)
    one = (1, 0, 0, 0)

    @staticmethod
    def add(x, y):
        return (x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3])

    @staticmethod
    def sub(x, y):
        return (x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3])

    def mul(self, x, y):
        a, b, c, e = x
        p, q, r, s = y
        d = self.d
        # (a + b t)(p + q t) with t^2 = d, for the four real products
        re = (a * p + d * b * q) - (c * r + d * e * s)
        re_t = (a * q + b * p) - (c * s + e * r)
        im = (a * r + d * b * s) + (c * p + d * e * q)
        im_t = (a * s + b * r) + (c * q + e * p)
        return (re, re_t, im, im_t)

    @staticmethod
    def neg(x):
        return (-x[0], -x[1], -x[2], -x[3])

    @staticmethod
    def conj(x):
        return (x[0], x[1], -x[2], -x[3])

    @staticmethod
    def iszero(x):
        return x[0] == 0 and x[1] == 0 and x[2] == 0 and x[3] == 0

    def exdiv(self, x, y):
        d = self.d
        num = self.mul(x, self.conj(y))
        # |y|^2 = P^2 + Q^2 in Z[sqrt d], then clear the radical
        p, q, r, s = y
        n0 = p * p + d * q * q + r * r + d * s * s
        n1 = 2 * (p * q + r * s)
        num = self.mul(num, (n0, -n1, 0, 0))
        n = n0 * n0 - d * n1 * n1
        return (num[0] // n, num[1] // n, num[2] // n, num[3] // n)

    @staticmethod
    def encode(a, b, c, e):
        return (a, b, c, e)

    @staticmethod
    def decode(x):
        return x

    @staticmethod
    def scale(x, k):
        return (x[0] * k, x[1] * k, x[2] * k, x[3] * k)

    @staticmethod
    def divint(x, k):
        return (x[0] // k, x[1] // k, x[2] // k, x[3] // k)

    def real_inverse_factor(self, x):
        a, b, c, e = x
        if c != 0 or e != 0:
            raise ArithmeticError("expected a real ring element")
        return (a, -b, 0, 0), a * a - self.d * b * b


_KERNELS = {INT: IntKernel, GAUSS: GaussKernel, RQUAD: RQuadKernel, CQUAD: CQuadKernel}


def kernel(kind: str, d: int):
    return _KERNELS[kind](d)


def convert(K_from, K_to, x):
    if K_from.kind == K_to.kind:
        return x
    return K_to.encode(*K_from.decode(x))


def det(K, m) -> object:
    """Determinant of a square matrix (list of row sequences) over kernel ``K``.

    Orders up to 3 use cofactor formulas; larger orders use fraction-free
    Bareiss elimination with row pivoting.
    """
    n = len(m)
    if n == 0:
        return K.one
    if n == 1:
        return m[0][0]
    if n == 2:
        return K.det2(m[0][0], m[0][1], m[1][0], m[1][1])
    if n == 3:
        return K.det3(m)
    return bareiss(K, m)


def bareiss(K, m):
    a = [list(row) for row in m]
    n = len(a)
    mul, sub, exdiv, iszero = K.mul, K.sub, K.exdiv, K.iszero
    negate = False
    prev = None
    for k in range(n - 1):
        if iszero(a[k][k]):
            for r in range(k + 1, n):
                if not iszero(a[r][k]):
                    a[k], a[r] = a[r], a[k]
                    negate = not negate
                    break
            else:
                return K.zero
        p = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            if prev is None:
                for j in range(k + 1, n):
                    ri[j] = sub(mul(ri[j], p), mul(f, rk[j]))
            else:
                for j in range(k + 1, n):
                    ri[j] = exdiv(sub(mul(ri[j], p), mul(f, rk[j])), prev)
        prev = p
    out = a[n - 1][n - 1]
    return K.neg(out) if negate else out


def rank(K, m) -> int:
    """Rank by fraction-free row echelon reduction."""
    a = [list(row) for row in m]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    mul, sub, iszero = K.mul, K.sub, K.iszero
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if not iszero(a[i][c])), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, rows):
            f = a[i][c]
            if iszero(f):
                continue
            a[i] = [sub(mul(a[i][j], p), mul(f, a[r][j])) for j in range(cols)]
            reduce_row_content(K, a[i])
        r += 1
        if r == rows:
            break
    return r


def reduce_row_content(K, row):
    g = 0
    for x in row:
        for v in K.ints(x):
            g = gcd(g, v)
    if g > 1:
        row[:] = [K.divint(x, g) for x in row]


def content(K, rows, g: int = 0) -> int:
    for row in rows:
        for x in row:
            for v in K.ints(x):
                g = gcd(g, v)
                if g == 1:
                    return 1
    return g
