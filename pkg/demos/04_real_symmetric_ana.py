"""
The +/-(J_n - kI_n) family and real symmetric rules
====================================================

An interior A N A in the underlying sequence of a real symmetric matrix
pins the whole sequence down.  The matrices J_n - kI_n and their negatives
show every allowed shape; a rule-clean check shows that their neighbours
are prohibited.
"""

from itertools import combinations

from sepr.catalog import jk_family, jk_minor_closed_form
from sepr.matrix import all_principal_minors
from sepr.rules import REAL_SYMMETRIC, check_sequence
from sepr.sequence import format_sequence, sepr_of

for n, k in ((5, 2), (5, 3), (6, 3), (7, 4)):
    for sign in "-+":
        M, predicted = jk_family(n, k, sign)
        t = all_principal_minors(M)
        got = sepr_of(t)
        name = f"{'-' if sign == '-' else ' '}(J{n} - {k}I{n})"
        print(f"{name}: {format_sequence(got):16s} predicted {format_sequence(predicted):16s}",
              "ok" if got == predicted else "MISMATCH")
        if sign == "-":
            q = 3
            values = {t[a] for a in combinations(range(1, n + 1), q)}
            print(f"   every order-{q} minor equals", values, "closed form", jk_minor_closed_form(k, q, sign))

print()
for text in ("A+NA-A-A-", "A+NA-A+A-", "A-NA+A+", "A+A+NA-A+"):
    v = check_sequence(text, None, REAL_SYMMETRIC)
    print(f"{text:10s} {v.status:12s} {', '.join(v.violations)}")
