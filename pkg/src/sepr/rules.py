"""Prohibition rules for sepr-sequences of Hermitian and real symmetric matrices.

Every rule is a pure predicate that *fires* on sequences it proves
unattainable.  Forcing statements ("if the epr is SNA then the sepr is
S+NA- or S-NA+") are encoded as prohibitions of their complements.

Pattern conventions used in the ``pattern`` strings:

* ``prefix``     -- the named symbols occupy positions 1, 2, ...
* ``window``     -- the symbols occur consecutively somewhere
* ``... X ...``  -- a further symbol occurs at some strictly later position
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable

from .sequence import SYMBOLS, TERMINAL, neg_symbol, parse_sequence, underlying_epr

__all__ = [
    "Rule",
    "Verdict",
    "HERMITIAN",
    "REAL_SYMMETRIC",
    "SCOPES",
    "MODES",
    "RULES",
    "rule_catalog",
    "get_rule",
    "check_sequence",
    "violations",
    "explain",
    "ORDER3_EPR_HERMITIAN",
]

HERMITIAN = "hermitian"
REAL_SYMMETRIC = "real-symmetric"
MODES = (HERMITIAN, REAL_SYMMETRIC)

SCOPE_HERMITIAN = "hermitian"
SCOPE_REAL = "real-symmetric-only"
SCOPE_ORDER3 = "order-3-only"
SCOPES = (SCOPE_HERMITIAN, SCOPE_REAL, SCOPE_ORDER3)

UNATTAINABLE = "unattainable"
RULE_CLEAN = "rule-clean"
WITNESSED = "attainable-witnessed"

_A = frozenset({"A*", "A+", "A-"})
_S = frozenset({"S*", "S+", "S-"})
_SIGNED_A = frozenset({"A+", "A-"})


@dataclass(frozen=True)
class Rule:
    id: str
    name: str
    scope: str
    pattern: str
    citation: str
    statement: str
    matcher: Callable[[tuple], bool] = field(repr=False, compare=False)

    def fires(self, seq: tuple) -> bool:
        return self.matcher(seq)

    def applies(self, n: int, mode: str) -> bool:
        if self.scope == SCOPE_REAL:
            return mode == REAL_SYMMETRIC
        if self.scope == SCOPE_ORDER3:
            return n == 3
        return True

    def describe(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "scope": self.scope,
            "pattern": self.pattern,
            "citation": self.citation,
            "statement": self.statement,
        }


@dataclass(frozen=True)
class Verdict:
    sequence: tuple
    status: str
    violations: tuple = ()
    witness_ref: str | None = None

    def to_json(self) -> dict:
        out = {"sequence": "".join(self.sequence), "status": self.status,
               "violations": list(self.violations)}
        if self.witness_ref is not None:
            out["witness"] = self.witness_ref
        return out


def _windows(seq, size):
    for i in range(len(seq) - size + 1):
        yield i, tuple(seq[i:i + size])


def _any_window(seq, size, bad) -> bool:
    return any(w in bad for _, w in _windows(seq, size))


def _later(seq, start, allowed) -> bool:
    return any(s in allowed for s in seq[start:])


# -- Hermitian rules -------------------------------------------------------


def _r1(seq):
    return seq[-1] not in TERMINAL


def _r2(seq):
    n = len(seq)
    for k, t in enumerate(seq, start=1):
        c = comb(n, k)
        if t == "S*" and c < 3:
            return True
        if t in ("A*", "S+", "S-") and c < 2:
            return True
    return False


_BASIC = frozenset(tuple(p) for p in (
    ("A*", "A+"), ("A*", "S+"), ("A*", "N"), ("S*", "A+"), ("S*", "S+"), ("S*", "N"),
    ("S+", "A+"), ("S-", "A+"), ("N", "A*"), ("N", "A+"), ("N", "S*"), ("N", "S+"),
))


def _r3(seq):
    return tuple(seq[:2]) in _BASIC


def _r4(seq):
    for k in range(len(seq) - 1):
        if seq[k] == "N" and seq[k + 1] == "N":
            return any(s != "N" for s in seq[k + 2:])
    return False


def _r5(seq):
    return _any_window(seq, 3, {("A*", "N", "N"), ("S*", "N", "N")})


def _r6(seq):
    return _any_window(seq, 2, {("A*", "N"), ("N", "A*")})


def _r6b(seq):
    r = len(seq) - 1
    while r >= 0 and seq[r] == "N":
        r -= 1
    return 0 <= r < len(seq) - 1 and seq[r] in ("A*", "S*")


def _r7(seq):
    return any(w[0] == w[2] and w[0] in _SIGNED_A and w[1] not in _SIGNED_A
               for _, w in _windows(seq, 3))


def _r8(seq):
    return tuple(seq[:2]) in {("S+", "S+"), ("S-", "S+")} and _later(seq, 2, _A)


_SSA = frozenset({("S+", "S*", "A+"), ("S-", "S*", "A-"), ("S+", "S+", "A+"),
                  ("S-", "S-", "A-"), ("S+", "S-", "A+"), ("S-", "S+", "A-")})


def _r9(seq):
    return _any_window(seq, 3, _SSA)


_ASTAR_SANDWICH = frozenset({("A+", "A*", "S+"), ("A-", "A*", "S-"), ("S+", "A*", "A+"),
                             ("S-", "A*", "A-"), ("S+", "A*", "S+"), ("S-", "A*", "S-")})


def _r10(seq):
    return _any_window(seq, 3, _ASTAR_SANDWICH)


def _forcing(epr_window, allowed):
    def matcher(seq):
        epr = underlying_epr(seq)
        for i, w in _windows(seq, 3):
            if epr[i:i + 3] == epr_window and w not in allowed:
                return True
        return False
    return matcher


_r11 = _forcing(("S", "N", "A"), {("S+", "N", "A-"), ("S-", "N", "A+")})
_r14 = _forcing(("A", "N", "S"), {("A+", "N", "S-"), ("A-", "N", "S+")})
_r16 = _forcing(("S", "N", "S"), {("S*", "N", "S*"), ("S+", "N", "S-"), ("S-", "N", "S+")})


def _r12(seq):
    return any((w[0], w[2]) in {("S+", "A+"), ("S-", "A-")} and w[1] not in _SIGNED_A
               for _, w in _windows(seq, 3))


def _r13(seq):
    for i, w in _windows(seq, 3):
        if ((w[0] == "A+" and w[2] == "S+") or (w[0] == "A-" and w[2] == "S-")) and w[1] in _S:
            if _later(seq, i + 3, _A):
                return True
    return False


def _r15(seq):
    for i, w in _windows(seq, 3):
        if (w[0], w[2]) in {("A+", "S+"), ("A-", "S-")} and w[1] not in _SIGNED_A:
            if _later(seq, i + 3, _A):
                return True
    return False


def _r17(seq):
    if len(seq) != 3:
        return False
    return tuple(seq[:2]) in {("S*", "S*"), ("S*", "A*"), ("A*", "S*")} or tuple(seq[1:]) == ("S*", "N")


def _r18(seq):
    epr = underlying_epr(seq)
    if epr[:2] == ("S", "N") and "A" in epr[2:]:
        return True
    for i, w in _windows(epr, 3):
        if w == ("N", "S", "A"):
            return True
        if w == ("A", "S", "N") and "A" in epr[i + 3:]:
            return True
    return False


# epr-sequences of order 3 attainable by real symmetric matrices, plus NAN,
# which only a non-real Hermitian matrix attains.
ORDER3_EPR_REAL = frozenset(tuple(s) for s in (
    "AAA", "AAN", "ANA", "ANN", "ASA", "ASN", "NAA", "NNN", "NSN", "SAA", "SAN", "SNN", "SSA", "SSN"))
ORDER3_EPR_HERMITIAN = ORDER3_EPR_REAL | {tuple("NAN")}


def _r24(seq):
    return len(seq) == 3 and underlying_epr(seq) not in ORDER3_EPR_HERMITIAN


def _r25(seq):
    return len(seq) == 3 and underlying_epr(seq) == tuple("NAN")


# -- real symmetric rules ---------------------------------------------------


def _r19(seq):
    return any(w[0] == "N" and w[2] == "S*" and w[3] == "N" for _, w in _windows(seq, 4))


def _r20(seq):
    if len(seq) < 3 or underlying_epr(seq)[:3] != ("A", "N", "A"):
        return False
    head = tuple(seq[:3])
    if head == ("A+", "N", "A-"):
        return any(t != "A-" for t in seq[3:])
    if head == ("A-", "N", "A+"):
        # 1-based position i = index + 1
        return any(t != ("A+" if (idx + 1) % 2 else "A-") for idx, t in enumerate(seq) if idx >= 3)
    return True


def _r21(seq):
    return _any_window(seq, 4, {("A-", "N", "A+", "A+")})


def _r22(seq):
    for start, w in _windows(seq, 4):
        k = start + 2  # 1-based position of the N
        if w == ("A+", "N", "A-", "A+") and k % 2 == 0:
            return True
        if w == ("A-", "N", "A+", "A-") and k % 2 == 1:
            return True
    return False


def _ana_interior_ok(seq, k) -> bool:
    """Attainable shapes for an ANA epr-window centred at 1-based position k."""
    n = len(seq)
    t = (None,) + tuple(seq)  # 1-based
    if all(t[i] == "A+" for i in range(1, k)) and t[k] == "N" and \
            all(t[i] == "A-" for i in range(k + 1, n + 1)):
        return True
    alpha = [i for i in range(1, n) if i not in (k - 1, k)]
    alternates = all(t[i] in _SIGNED_A and t[i + 1] == neg_symbol(t[i]) for i in alpha)
    if k % 2 == 1 and t[k - 1:k + 3] == ("A+", "N", "A-", "A+") and alternates:
        return True
    if k % 2 == 0 and t[k - 1:k + 3] == ("A-", "N", "A+", "A-") and alternates:
        return True
    return False


def _r23(seq):
    n = len(seq)
    epr = underlying_epr(seq)
    for k in range(2, n - 1):
        if epr[k - 2:k + 1] == ("A", "N", "A") and not _ana_interior_ok(seq, k):
            return True
    return False


RULES: tuple = (
    Rule("R1", "terminal", SCOPE_HERMITIAN, "last symbol in {A+, A-, N}",
         "Observation on terminal symbols",
         "the top-order symbol is the sign class of det B, a single minor", _r1),
    Rule("R2", "cardinality", SCOPE_HERMITIAN,
         "t_k = S* needs C(n,k) >= 3; t_k in {A*, S+, S-} needs C(n,k) >= 2",
         "Order-2 counting argument, generalized by pigeonhole",
         "a mixed symbol needs as many order-k minors as it has distinct sign classes", _r2),
    Rule("R3", "basic-prefix", SCOPE_HERMITIAN,
         "prefix in {A*A+, A*S+, A*N, S*A+, S*S+, S*N, S+A+, S-A+, NA*, NA+, NS*, NS+}",
         "Basic Proposition",
         "these twelve two-symbol starts contradict the 2x2 minors b_ii b_jj - |b_ij|^2", _r3),
    Rule("R4", "NN-tail", SCOPE_HERMITIAN, "window NN forces N at every later position",
         "NN Theorem", "two consecutive N symbols mean every higher order is N too", _r4),
    Rule("R5", "star-before-rank", SCOPE_HERMITIAN, "window A*NN or S*NN",
         "Corollary A*NN / S*NN", "A* or S* cannot sit directly before NN", _r5),
    Rule("R6", "A*N-NA*", SCOPE_HERMITIAN, "window A*N or NA*",
         "Theorem A*N / NA*", "A* is never adjacent to N", _r6),
    Rule("R6b", "star-at-rank", SCOPE_HERMITIAN,
         "the last non-N symbol, when followed by N ... N, is not A* or S*",
         "Same-sign Lemma with the NN Theorem",
         "at order rank(B) the nonzero principal minors share one sign", _r6b),
    Rule("R7", "AXA", SCOPE_HERMITIAN, "window A+XA+ or A-XA- with X not in {A+, A-}",
         "Theorem AXA", "between two equal signed A symbols only A+ or A- can appear", _r7),
    Rule("R8", "S-start-singular", SCOPE_HERMITIAN,
         "prefix S+S+ or S-S+ ... X ... with X in {A*, A+, A-}",
         "Proposition S+S+...X... / S-S+...X...",
         "after a start of S+S+ or S-S+ no later order is full (A*, A+ or A-)", _r8),
    Rule("R9", "SSA", SCOPE_HERMITIAN,
         "window in {S+S*A+, S-S*A-, S+S+A+, S-S-A-, S+S-A+, S-S+A-}",
         "Corollary SSA", "six SSA windows are excluded everywhere in the sequence", _r9),
    Rule("R10", "A*-sandwich", SCOPE_HERMITIAN,
         "window in {A+A*S+, A-A*S-, S+A*A+, S-A*A-, S+A*S+, S-A*S-}",
         "Proposition X+A*Y+ / X-A*Y-",
         "A* flanked by two symbols carrying the same sign is excluded", _r10),
    Rule("R11", "SNA-forcing", SCOPE_HERMITIAN, "epr window SNA must be S+NA- or S-NA+",
         "Proposition SNA", "an SNA window has opposite signs on its outer symbols", _r11),
    Rule("R12", "SXA", SCOPE_HERMITIAN, "window S+XA+ or S-XA- with X not in {A+, A-}",
         "Theorem SXA", "the middle of S+XA+ or S-XA- is A+ or A-", _r12),
    Rule("R13", "ASS-then-A", SCOPE_HERMITIAN,
         "window A+YS+ (or A-YS-) with Y in {S*, S+, S-}, then ... X ... with X in {A*, A+, A-}",
         "Proposition ...ASS...A...",
         "once A+SS+ or A-SS- occurs no later order is full", _r13),
    Rule("R14", "ANS-forcing", SCOPE_HERMITIAN, "epr window ANS must be A+NS- or A-NS+",
         "Proposition ANS", "an ANS window has opposite signs on its outer symbols", _r14),
    Rule("R15", "AXS-then-A", SCOPE_HERMITIAN,
         "window A+XS+ (or A-XS-) with X not in {A+, A-}, then ... Y ... with Y in {A*, A+, A-}",
         "Theorem AXS...A...",
         "if a full order follows A+XS+ or A-XS-, then X is A+ or A-", _r15),
    Rule("R16", "SNS-forcing", SCOPE_HERMITIAN, "epr window SNS must be S*NS*, S+NS- or S-NS+",
         "Proposition SNS", "an SNS window is S*NS* or has opposite outer signs", _r16),
    Rule("R17", "order-3", SCOPE_ORDER3, "n = 3: S*S*X, S*A*X, A*S*X, XS*N",
         "Order-3 Proposition", "four shapes that no 3x3 Hermitian matrix realizes", _r17),
    Rule("R18", "epr-level", SCOPE_HERMITIAN,
         "epr prefix SN ... A ..., epr window NSA, or epr ... ASN ... A ...",
         "Proposition SN...A... and the NSA Theorem",
         "forbidden epr shapes carry over to every refining sepr-sequence", _r18),
    Rule("R19", "NXS*N", SCOPE_REAL, "window NXS*N for any X",
         "Proposition NXS*N", "for real symmetric B the window NXS*N never occurs", _r19),
    Rule("R20", "ANA-start", SCOPE_REAL,
         "epr prefix ANA: A+NA- then A- ever after; A-NA+ then A+ at odd and A- at even positions",
         "Proposition on ANA at the start",
         "a real symmetric start of ANA fixes the entire sequence", _r20),
    Rule("R21", "A-NA+A+", SCOPE_REAL, "window A-NA+A+",
         "Corollary A-NA+A+", "for real symmetric B the window A-NA+A+ never occurs", _r21),
    Rule("R22", "ANA-parity", SCOPE_REAL,
         "A+NA-A+ at positions k-1..k+2 needs k odd; A-NA+A- needs k even",
         "Corollary on A+NA-A+ / A-NA+A-",
         "the position of the N in these windows has a fixed parity", _r22),
    Rule("R23", "ANA-interior", SCOPE_REAL,
         "epr window ANA centred at 2 <= k <= n-2 forces (A+)..A+NA-A-..(A-) or the "
         "alternating J_n - kI_n shapes",
         "Theorem characterizing non-terminal ANA",
         "an interior ANA determines the whole sequence up to the three +/-(J_n - kI_n) shapes",
         _r23),
    Rule("R24", "order-3-epr", SCOPE_ORDER3,
         "n = 3: underlying epr in {AAA, AAN, ANA, ANN, ASA, ASN, NAA, NNN, NSN, SAA, SAN, SNN, "
         "SSA, SSN, NAN}",
         "Order-3 epr classification",
         "only these fifteen epr-sequences occur for 3x3 Hermitian matrices", _r24),
    Rule("R25", "order-3-NAN-real", SCOPE_REAL, "n = 3: underlying epr NAN",
         "Order-3 epr classification, real case",
         "NAN needs a non-real entry, so real symmetric 3x3 matrices avoid it", _r25),
)

_BY_ID = {r.id: r for r in RULES}


def rule_catalog() -> list:
    return list(RULES)


def get_rule(rule_id: str) -> Rule:
    try:
        return _BY_ID[rule_id]
    except KeyError:
        raise KeyError(f"unknown rule {rule_id!r}; known: {', '.join(_BY_ID)}") from None


def explain(rule_id: str) -> str:
    r = get_rule(rule_id)
    return (f"{r.id} ({r.name})\n  pattern:  {r.pattern}\n  scope:    {r.scope}\n"
            f"  citation: {r.citation}\n  states:   {r.statement}")


def _normalize(seq) -> tuple:
    if isinstance(seq, str):
        seq = parse_sequence(seq)
    seq = tuple(seq)
    for i, s in enumerate(seq):
        if s not in SYMBOLS:
            raise ValueError(f"malformed symbol {s!r} at position {i + 1}")
    if not seq:
        raise ValueError("empty sequence")
    return seq


def violations(seq, mode: str = HERMITIAN, rules: Iterable[Rule] = RULES) -> tuple:
    n = len(seq)
    return tuple(r.id for r in rules if r.applies(n, mode) and r.fires(seq))


def check_sequence(seq, n: int | None = None, mode: str = HERMITIAN,
                   lookup_witness: bool = False) -> Verdict:
    """Judge a candidate sepr-sequence against every applicable rule.

    All firing rules are reported.  With ``lookup_witness`` a rule-clean
    sequence of order <= 3 is upgraded to attainable-witnessed when the
    catalog holds a witness of the requested class.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    seq = _normalize(seq)
    if n is not None and len(seq) != n:
        raise ValueError(f"sequence has length {len(seq)}, expected order {n}")
    found = violations(seq, mode)
    if found:
        return Verdict(seq, UNATTAINABLE, found)
    if lookup_witness and len(seq) <= 3:
        from .catalog import witness
        entry = witness(seq)
        if entry is not None and (mode == HERMITIAN or entry.matrix.is_real()):
            return Verdict(seq, WITNESSED, (), entry.key)
    return Verdict(seq, RULE_CLEAN)
