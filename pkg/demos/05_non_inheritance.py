"""
An S* that is not passed down (and one that is)
================================================

A 5x5 Hermitian matrix with sepr-sequence S*S-S*A+A+ is offered in the
literature as one where no 4x4 principal submatrix keeps the S* in
position 3.  Computing all five submatrices exactly shows that the one on
rows {1,3,4,5} does keep it.  Flipping the sign of the (1,1) entry gives a
matrix that does have the advertised property.
"""

from sepr import CQExt, from_rows, sepr
from sepr.catalog import non_inheritance_example
from sepr.matrix import all_principal_minors
from sepr.search import check_inheritance, submatrix_seprs
from sepr.sequence import format_sequence

B = non_inheritance_example()
print("sepr(B) =", sepr(B))
for alpha, seq in submatrix_seprs(B, 4).items():
    mark = "  <- keeps S* at position 3" if seq[2] == "S*" else ""
    print(f"  B[{alpha}]: {format_sequence(seq)}{mark}")

t = all_principal_minors(B)
print("order-3 minors inside {1,3,4,5}:", {a: str(t[a]) for a in ((1, 3, 4), (1, 3, 5), (1, 4, 5), (3, 4, 5))})
print("every inheritance statement still holds:", check_inheritance(B)["ok"])

rows = [list(r) for r in B.entries]
rows[0][0] = CQExt(1)
B2 = from_rows(rows)
print("\nwith b11 = +1: sepr =", sepr(B2))
for alpha, seq in submatrix_seprs(B2, 4).items():
    print(f"  B[{alpha}]: {format_sequence(seq)}")
