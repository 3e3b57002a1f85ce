"""pr-, epr- and sepr-sequences and the transforms between them.

An sepr-sequence is a tuple of symbol strings drawn from :data:`SYMBOLS`,
e.g. ``("A+", "N", "A-")``.  Text form concatenates the tokens:
``"A+NA-"``.
"""

from __future__ import annotations

import re
from math import comb
from typing import NamedTuple, Sequence

from .matrix import HermitianMatrix, MinorTable, all_principal_minors

__all__ = [
    "SYMBOLS",
    "TERMINAL",
    "PrSequence",
    "parse_sequence",
    "format_sequence",
    "parse_epr",
    "classify_signs",
    "sepr_of",
    "epr_of",
    "pr_of",
    "sequences",
    "underlying_epr",
    "neg_symbol",
    "neg_sequence",
    "negative_sepr",
    "inverse_sepr_predict",
    "SequenceError",
]

# canonical order: A* < A+ < A- < N < S* < S+ < S-  (plain string order)
SYMBOLS = ("A*", "A+", "A-", "N", "S*", "S+", "S-")
TERMINAL = ("A+", "A-", "N")
_NEG = {"A+": "A-", "A-": "A+", "S+": "S-", "S-": "S+", "A*": "A*", "S*": "S*", "N": "N"}


class SequenceError(ValueError):
    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} at offset {offset}"
        super().__init__(message)
        self.offset = offset


_TOKEN = re.compile(r"[AS][*+\-]|N")
_SEP = re.compile(r"[\s,]+")
# the typographic minus is accepted on input
_MINUS = str.maketrans({"−": "-"})


def parse_sequence(text: str) -> tuple:
    """Parse ``"A+NA-"`` (whitespace and commas allowed between tokens)."""
    if not isinstance(text, str):
        raise SequenceError(f"expected text, got {type(text).__name__}")
    text = text.translate(_MINUS)
    out = []
    pos = 0
    while pos < len(text):
        m = _SEP.match(text, pos)
        if m:
            pos = m.end()
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos] in "AS":
                bad = text[pos + 1:pos + 2] or "end of input"
                raise SequenceError(f"expected superscript *, + or - after {text[pos]!r}, got {bad!r}",
                                    pos + 1)
            raise SequenceError(f"unknown token {text[pos]!r}", pos)
        out.append(m.group())
        pos = m.end()
    if not out:
        raise SequenceError("empty sequence")
    return tuple(out)


def format_sequence(seq: Sequence[str]) -> str:
    return "".join(seq)


def parse_epr(text: str) -> tuple:
    text = _SEP.sub("", text)
    if not text:
        raise SequenceError("empty sequence")
    for i, ch in enumerate(text):
        if ch not in "ASN":
            raise SequenceError(f"unknown epr symbol {ch!r}", i)
    return tuple(text)


class PrSequence(NamedTuple):
    r0: int
    ranks: tuple

    def __str__(self):
        return f"{self.r0}]" + "".join(str(r) for r in self.ranks)


def classify_signs(signs) -> str:
    """sepr symbol for a collection of minor signs in {-1, 0, 1}."""
    pos = neg = zero = False
    for s in signs:
        if s > 0:
            pos = True
        elif s < 0:
            neg = True
        else:
            zero = True
    if zero:
        if pos and neg:
            return "S*"
        if pos:
            return "S+"
        if neg:
            return "S-"
        return "N"
    if pos and neg:
        return "A*"
    if pos:
        return "A+"
    if neg:
        return "A-"
    raise SequenceError("no minors of this order")


def _signs_by_order(minors: MinorTable, n: int) -> list:
    by_order = [[] for _ in range(n + 1)]
    for key, value in minors.items():
        k = len(key)
        if k:
            if k > n or key[-1] > n:
                raise SequenceError(f"index set {key} exceeds order {n}")
            by_order[k].append(value.sign())
    for k in range(1, n + 1):
        if len(by_order[k]) != comb(n, k):
            raise SequenceError(f"incomplete minor table: {len(by_order[k])} of {comb(n, k)} "
                                f"order-{k} minors")
    return by_order


def sepr_of(minors: MinorTable, n: int | None = None) -> tuple:
    n = minors.n if n is None else n
    by_order = _signs_by_order(minors, n)
    return tuple(classify_signs(by_order[k]) for k in range(1, n + 1))


def epr_of(minors: MinorTable, n: int | None = None) -> tuple:
    n = minors.n if n is None else n
    by_order = _signs_by_order(minors, n)
    out = []
    for k in range(1, n + 1):
        nz = sum(1 for s in by_order[k] if s)
        out.append("A" if nz == len(by_order[k]) else "N" if nz == 0 else "S")
    return tuple(out)


def pr_of(minors: MinorTable, n: int | None = None, diag=None) -> PrSequence:
    """pr-sequence; ``diag`` optionally overrides the diagonal entries used for r0."""
    n = minors.n if n is None else n
    by_order = _signs_by_order(minors, n)
    if diag is None:
        r0 = int(any(s == 0 for s in by_order[1]))
    else:
        r0 = int(any(not x for x in diag))
    return PrSequence(r0, tuple(int(any(by_order[k])) for k in range(1, n + 1)))


def sequences(B: HermitianMatrix) -> dict:
    """All three sequences of ``B`` in text form (the JSON report shape)."""
    t = all_principal_minors(B)
    return {
        "pr": str(pr_of(t, B.n)),
        "epr": "".join(epr_of(t, B.n)),
        "sepr": format_sequence(sepr_of(t, B.n)),
    }


def underlying_epr(seq: Sequence[str]) -> tuple:
    return tuple(s[0] for s in seq)


def neg_symbol(sym: str) -> str:
    return _NEG[sym]


def neg_sequence(seq: Sequence[str]) -> tuple:
    """Swap every + and - superscript."""
    return tuple(_NEG[s] for s in seq)


def negative_sepr(seq: Sequence[str]) -> tuple:
    """sepr(-B) from sepr(B): odd positions negated, even positions kept."""
    return tuple(_NEG[s] if i % 2 == 0 else s for i, s in enumerate(seq))


def inverse_sepr_predict(seq: Sequence[str]) -> tuple:
    """sepr(B^-1) from sepr(B) for nonsingular B."""
    seq = tuple(seq)
    last = seq[-1]
    head = seq[-2::-1]
    if last == "A+":
        return head + ("A+",)
    if last == "A-":
        return neg_sequence(head) + ("A-",)
    raise SequenceError(f"sequence ends in {last}: matrix is singular, no inverse")
