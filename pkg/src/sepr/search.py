"""Random and exhaustive matrix generation, identity fuzzing, enumeration, witness search.

Every generator is driven by a :class:`GenSpec`.  Trial ``t`` of a spec
draws from its own ``random.Random(f"{seed}:{t}")`` stream, so a batch run
split across workers reproduces the serial result exactly.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .exactnum import CQExt, QExt
from .matrix import (
    HermitianMatrix,
    SingularError,
    all_principal_minors,
    identity,
    inverse,
    matmul,
    minor,
    negate,
    principal_submatrix,
    determinant,
    rank,
    schur_complement,
    validate_hermitian,
)
from .rules import HERMITIAN, MODES, REAL_SYMMETRIC, check_sequence
from .sequence import (
    SYMBOLS,
    TERMINAL,
    classify_signs,
    epr_of,
    format_sequence,
    inverse_sepr_predict,
    negative_sepr,
    parse_sequence,
    sepr_of,
)

__all__ = [
    "GenSpec",
    "DOMAINS",
    "random_hermitian",
    "stream",
    "IdentityReport",
    "check_identities",
    "identity_suite",
    "submatrix_seprs",
    "check_inheritance",
    "EnumerationReport",
    "enumerate_candidates",
    "search_witness",
    "lattice_size",
]

DOMAINS = ("integer", "gaussian", "rational")
CLASSES = (REAL_SYMMETRIC, HERMITIAN)


@dataclass(frozen=True)
class GenSpec:
    """Recipe for a reproducible stream of random matrices.

    ``domain`` picks the entry components: integers in ``-bound..bound``,
    Gaussian integers ``a + bi`` with ``a^2 + b^2 <= bound``, or fractions
    ``p/q`` with ``|p| <= bound`` and ``1 <= q <= bound``.  With ``d > 1``
    each real component gains an independent ``sqrt(d)`` coefficient from
    the same component range.  ``structure="lowrank"`` builds
    ``sum_t s_t v_t v_t^*`` from ``rank`` random vectors, which makes the
    singular (N-heavy) region reachable.
    """

    n: int
    domain: str = "integer"
    bound: int = 1
    symmetry: str = HERMITIAN
    d: int = 0
    seed: int = 0
    structure: str | None = None
    rank: int | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"order must be positive, got {self.n}")
        if self.domain not in DOMAINS:
            raise ValueError(f"domain must be one of {DOMAINS}, got {self.domain!r}")
        if self.symmetry not in CLASSES:
            raise ValueError(f"symmetry must be one of {CLASSES}, got {self.symmetry!r}")
        if self.bound < 0 or (self.domain == "rational" and self.bound < 1):
            raise ValueError(f"empty entry domain (bound={self.bound})")
        if self.structure not in (None, "lowrank"):
            raise ValueError(f"unknown structure {self.structure!r}")

    def with_seed(self, seed: int) -> "GenSpec":
        return GenSpec(**{**asdict(self), "seed": seed})


# -- component sampling -------------------------------------------------------


def _real_values(spec: GenSpec) -> list:
    """Possible real components (rationals), sorted; used by both modes."""
    m = spec.bound
    if spec.domain == "integer":
        return list(range(-m, m + 1))
    if spec.domain == "gaussian":
        r = int(m ** 0.5)
        while (r + 1) ** 2 <= m:
            r += 1
        return list(range(-r, r + 1))
    vals = {Fraction(p, q) for p in range(-m, m + 1) for q in range(1, m + 1)}
    return sorted(vals)


def _entry_values(spec: GenSpec, diagonal: bool) -> list:
    """All admissible entries (as CQExt) for one matrix position."""
    d = spec.d if spec.d > 1 else 0
    reals = _real_values(spec)
    if d:
        reals_q = [QExt(a, b, d) for a in reals for b in reals]
    else:
        reals_q = [QExt(a, 0, 0) for a in reals]
    if diagonal or spec.symmetry == REAL_SYMMETRIC:
        return [CQExt(x, 0, d or None) for x in reals_q]
    if spec.domain == "gaussian" and not d:
        m = spec.bound
        return [CQExt(a, b) for a in reals for b in reals if a * a + b * b <= m]
    return [CQExt(x, y) for x in reals_q for y in reals_q]


def _sample_component(rng: random.Random, spec: GenSpec):
    m = spec.bound
    if spec.domain == "rational":
        return Fraction(rng.randint(-m, m), rng.randint(1, m))
    if spec.domain == "gaussian":
        r = int(m ** 0.5)
        while (r + 1) ** 2 <= m:
            r += 1
        return rng.randint(-r, r)
    return rng.randint(-m, m)


def _sample_real(rng, spec) -> QExt:
    if spec.d > 1:
        return QExt(_sample_component(rng, spec), _sample_component(rng, spec), spec.d)
    return QExt(_sample_component(rng, spec), 0, 0)


def _sample_entry(rng, spec: GenSpec, diagonal: bool) -> CQExt:
    if diagonal or spec.symmetry == REAL_SYMMETRIC:
        return CQExt(_sample_real(rng, spec), 0, spec.d if spec.d > 1 else None)
    if spec.domain == "gaussian" and spec.d <= 1:
        m = spec.bound
        r = int(m ** 0.5)
        while (r + 1) ** 2 <= m:
            r += 1
        while True:
            a, b = rng.randint(-r, r), rng.randint(-r, r)
            if a * a + b * b <= m:
                return CQExt(a, b)
    return CQExt(_sample_real(rng, spec), _sample_real(rng, spec))


def _from_upper(n: int, upper: dict, d: int) -> HermitianMatrix:
    rows = [[None] * n for _ in range(n)]
    for (i, j), z in upper.items():
        rows[i][j] = z
        rows[j][i] = z.conj()
    return validate_hermitian(rows, d)


def _lowrank(rng, spec: GenSpec) -> HermitianMatrix:
    n = spec.n
    r = spec.rank if spec.rank is not None else rng.randint(0, max(n - 1, 0))
    d = spec.d if spec.d > 1 else 0
    zero = CQExt(QExt(0, 0, d), 0)
    acc = [[zero] * n for _ in range(n)]
    for _ in range(r):
        v = [_sample_entry(rng, spec, diagonal=False) for _ in range(n)]
        s = rng.choice((1, -1))
        for i in range(n):
            for j in range(n):
                acc[i][j] = acc[i][j] + v[i] * v[j].conj() * s
    return validate_hermitian(acc, d)


def random_hermitian(spec: GenSpec, trial: int = 0) -> HermitianMatrix:
    """Matrix number ``trial`` of the stream defined by ``spec``."""
    rng = random.Random(f"{spec.seed}:{trial}")
    if spec.structure == "lowrank":
        return _lowrank(rng, spec)
    upper = {(i, j): _sample_entry(rng, spec, diagonal=i == j)
             for i in range(spec.n) for j in range(i, spec.n)}
    return _from_upper(spec.n, upper, spec.d if spec.d > 1 else 0)


def stream(spec: GenSpec, count: int, start: int = 0):
    for t in range(start, start + count):
        yield random_hermitian(spec, t)


# -- identity checks -----------------------------------------------------------


@dataclass
class IdentityReport:
    """Per-identity counts of checked instances and the first failing tuple."""

    checked: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)

    def _tick(self, name, ok, where):
        self.checked[name] = self.checked.get(name, 0) + 1
        if not ok:
            self.failures.setdefault(name, []).append(where)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "IdentityReport") -> "IdentityReport":
        for k, v in other.checked.items():
            self.checked[k] = self.checked.get(k, 0) + v
        for k, v in other.failures.items():
            self.failures.setdefault(k, []).extend(v)
        return self

    def to_json(self) -> dict:
        names = sorted(set(self.checked) | set(self.failures))
        return {
            "ok": self.ok,
            "identities": {
                k: {"checked": self.checked.get(k, 0),
                    "failed": len(self.failures.get(k, [])),
                    "first_failure": _jsonable(self.failures[k][0]) if k in self.failures else None}
                for k in names
            },
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (int, str)) or x is None:
        return x
    return str(x)


def _subsets(universe, k):
    return itertools.combinations(universe, k)


def _union(*parts):
    return tuple(sorted(set().union(*parts)))


def check_identities(B: HermitianMatrix, which=("muir", "schur", "jacobi", "negation", "schur-epr")
                     ) -> IdentityReport:
    """Verify the determinantal identities on ``B`` with exact equality.

    ``muir``       B_I B_{I+ij} = B_{I+i} B_{I+j} - |det B[I+i | I+j]|^2
    ``schur``      det(B/B[a])[g] = B_{g+a} / B_a, and rank drops by |a|
    ``jacobi``     det(B^-1)[a] = B_(complement a) / det B, B B^-1 = I,
                   and sepr(B^-1) follows the inverse transform
    ``negation``   (-B)_a = (-1)^|a| B_a and sepr(-B) follows the negation transform
    ``schur-epr``  epr(B/B[a]) agrees with epr(B) shifted by |a| wherever the latter is A or N
    """
    rep = IdentityReport()
    n = B.n
    T = all_principal_minors(B)
    idx = tuple(range(1, n + 1))
    seq = sepr_of(T, n)

    if "muir" in which:
        for i, j in itertools.combinations(idx, 2):
            rest = [x for x in idx if x not in (i, j)]
            for k in range(len(rest) + 1):
                for I in _subsets(rest, k):
                    Ii, Ij, Iij = _union(I, {i}), _union(I, {j}), _union(I, {i, j})
                    off = minor(B, Ii, Ij)
                    lhs = T[I] * T[Iij]
                    rhs = T[Ii] * T[Ij] - off.abs2()
                    rep._tick("muir", lhs == rhs, {"I": I, "i": i, "j": j})

    rB = rank(B) if ("schur" in which or "schur-epr" in which) else None
    if "schur" in which or "schur-epr" in which:
        epr_B = epr_of(T, n)
        for k in range(1, n):
            for alpha in _subsets(idx, k):
                if not T[alpha]:
                    continue
                C = schur_complement(B, alpha)
                TC = all_principal_minors(C)
                if "schur" in which:
                    ok = True
                    bad = None
                    for key, val in TC.items():
                        orig = tuple(C.labels[p - 1] for p in key)
                        if val * T[alpha] != T[_union(orig, alpha)]:
                            ok, bad = False, orig
                            break
                    rep._tick("schur-quotient", ok, {"alpha": alpha, "gamma": bad})
                    rep._tick("schur-rank", rank(C) == rB - k, {"alpha": alpha})
                if "schur-epr" in which:
                    epr_C = epr_of(TC, C.n)
                    ok = all(epr_C[j] == epr_B[j + k] for j in range(n - k) if epr_B[j + k] in "AN")
                    rep._tick("schur-epr", ok, {"alpha": alpha, "epr": "".join(epr_C)})

    if "jacobi" in which and T[idx]:
        Binv = inverse(B)
        TI = all_principal_minors(Binv)
        dB = T[idx]
        for k in range(1, n + 1):
            for alpha in _subsets(idx, k):
                comp = tuple(x for x in idx if x not in alpha)
                rep._tick("jacobi", TI[alpha] * dB == T[comp], {"alpha": alpha})
        prod = matmul(B, Binv)
        eye = identity(n).entries
        rep._tick("inverse-product", [tuple(r) for r in prod] == list(eye), {})
        predicted = inverse_sepr_predict(seq)
        got = sepr_of(TI, n)
        rep._tick("inverse-sepr", got == predicted,
                  {"sepr": format_sequence(seq), "inverse": format_sequence(got)})

    if "negation" in which:
        TN = all_principal_minors(negate(B))
        ok = True
        bad = None
        for key, val in T.items():
            if TN[key] != (val if len(key) % 2 == 0 else -val):
                ok, bad = False, key
                break
        rep._tick("negation-minors", ok, {"alpha": bad})
        got = sepr_of(TN, n)
        rep._tick("negation-sepr", got == negative_sepr(seq),
                  {"sepr": format_sequence(seq), "negated": format_sequence(got)})
    return rep


def identity_suite(specs, trials: int, which=None) -> IdentityReport:
    """Run :func:`check_identities` on ``trials`` matrices drawn round-robin from ``specs``."""
    specs = list(specs)
    total = IdentityReport()
    kw = {} if which is None else {"which": which}
    for t in range(trials):
        spec = specs[t % len(specs)]
        total.merge(check_identities(random_hermitian(spec, t), **kw))
    return total


# -- inheritance ---------------------------------------------------------------


def submatrix_seprs(B: HermitianMatrix, m: int, minors=None) -> dict:
    """sepr-sequence of every m x m principal submatrix, keyed by index set."""
    T = minors if minors is not None else all_principal_minors(B)
    signs = {k: v.sign() for k, v in T.items()}
    out = {}
    for alpha in _subsets(range(1, B.n + 1), m):
        out[alpha] = tuple(classify_signs(signs[beta] for beta in _subsets(alpha, i))
                           for i in range(1, m + 1))
    return out


_EXISTS_AT_M = {
    "A*": ({"A+"}, {"A-"}),
    "S+": ({"A+"}, {"N"}),
    "S-": ({"A-"}, {"N"}),
    "S*": ({"A+"}, {"A-"}, {"N"}),
}
_STATEMENT_AT_M = {"A*": 4, "S+": 5, "S-": 6, "S*": 7}
_EXISTS_BELOW_M = {
    "A*": [(8, {"A*"})],
    "S+": [(9, {"S+"})],
    "S-": [(10, {"S-"})],
    "S*": [(11, {"S*", "S+", "S-"}), (12, {"A*", "S*", "S+"}), (13, {"A*", "S*", "S-"})],
}
_FORALL = {"N": 1, "A+": 2, "A-": 3}


def check_inheritance(B: HermitianMatrix) -> dict:
    """Scan all principal submatrices and test each applicable inheritance statement.

    Statements 4 and 5 are checked in their sepr form (the order-m symbol of
    the submatrix is A+ / A- / N).
    """
    n = B.n
    T = all_principal_minors(B)
    seq = sepr_of(T, n)
    checked = 0
    bad = []
    for m in range(1, n + 1):
        subs = submatrix_seprs(B, m, T)
        for i in range(1, m + 1):
            t = seq[i - 1]
            at_i = [s[i - 1] for s in subs.values()]
            if t in _FORALL:
                checked += 1
                if any(x != t for x in at_i):
                    bad.append({"statement": _FORALL[t], "i": i, "m": m})
            if i == m and t in _EXISTS_AT_M:
                checked += 1
                if not all(any(x in need for x in at_i) for need in _EXISTS_AT_M[t]):
                    bad.append({"statement": _STATEMENT_AT_M[t], "i": i, "m": m})
            if i < m:
                for stmt, need in _EXISTS_BELOW_M.get(t, ()):
                    checked += 1
                    if not any(x in need for x in at_i):
                        bad.append({"statement": stmt, "i": i, "m": m})
    return {"sepr": format_sequence(seq), "checked": checked, "violations": bad, "ok": not bad}


# -- enumeration -----------------------------------------------------------------


@dataclass
class EnumerationReport:
    n: int
    mode: str
    universe: int
    attainable_witnessed: list
    unattainable: dict
    rule_clean_unwitnessed: list

    def counts(self) -> dict:
        return {
            "universe": self.universe,
            "attainable-witnessed": len(self.attainable_witnessed),
            "unattainable": len(self.unattainable),
            "rule-clean-unwitnessed": len(self.rule_clean_unwitnessed),
        }

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "counts": self.counts(),
            "attainable-witnessed": [format_sequence(s) for s in self.attainable_witnessed],
            "rule-clean-unwitnessed": [format_sequence(s) for s in self.rule_clean_unwitnessed],
            "unattainable": {format_sequence(s): list(v) for s, v in self.unattainable.items()},
        }


ENUMERATION_CAP = 6


def enumerate_candidates(n: int, mode: str = HERMITIAN, cap: int = ENUMERATION_CAP) -> EnumerationReport:
    """Partition every length-n sequence with a valid last symbol by verdict."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if not 1 <= n <= cap:
        raise ValueError(f"order {n} outside enumeration cap 1..{cap}")
    witnessed, clean, bad = [], [], {}
    universe = 0
    for head in itertools.product(SYMBOLS, repeat=n - 1):
        for last in TERMINAL:
            seq = head + (last,)
            universe += 1
            v = check_sequence(seq, n, mode, lookup_witness=n <= 3)
            if v.violations:
                bad[seq] = v.violations
            elif v.witness_ref is not None:
                witnessed.append(seq)
            else:
                clean.append(seq)
    return EnumerationReport(n, mode, universe, sorted(witnessed), dict(sorted(bad.items())), sorted(clean))


# -- witness search ------------------------------------------------------------------


def lattice_size(spec: GenSpec) -> int:
    n = spec.n
    return len(_entry_values(spec, True)) ** n * len(_entry_values(spec, False)) ** (n * (n - 1) // 2)


def _fast_sepr_matches(B: HermitianMatrix, target: tuple) -> bool:
    """Compare with ``target`` order by order, stopping at the first mismatch."""
    n = B.n
    for k in range(1, n + 1):
        signs = [determinant(principal_submatrix(B, a)).sign() for a in _subsets(range(1, n + 1), k)]
        if classify_signs(signs) != target[k - 1]:
            return False
    return True


def search_witness(target, spec: GenSpec, budget: int, exhaustive: bool = False):
    """First generated matrix whose sepr-sequence is ``target``, or ``None``.

    ``None`` only means nothing was found within ``budget`` trials.  In
    exhaustive mode the full entry lattice (upper triangle) is scanned when
    it has at most ``budget`` points; otherwise random trials are used.
    """
    if isinstance(target, str):
        target = parse_sequence(target)
    target = tuple(target)
    if len(target) != spec.n:
        raise ValueError(f"target has length {len(target)} but spec order is {spec.n}")
    n = spec.n
    if exhaustive and lattice_size(spec) <= budget:
        diag_vals = _entry_values(spec, True)
        off_vals = _entry_values(spec, False)
        positions = [(i, j) for i in range(n) for j in range(i, n)]
        pools = [diag_vals if i == j else off_vals for i, j in positions]
        d = spec.d if spec.d > 1 else 0
        for combo in itertools.product(*pools):
            B = _from_upper(n, dict(zip(positions, combo)), d)
            if _fast_sepr_matches(B, target):
                return B
        return None
    for t in range(budget):
        B = random_hermitian(spec, t)
        if _fast_sepr_matches(B, target):
            return B
    return None
