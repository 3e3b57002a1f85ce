"""
Reading the three sequences off a matrix
=========================================

Every principal minor is computed exactly, so a zero minor is really zero
and a sign is really a sign.  Run with ``python demos/01_sequences_of_a_matrix.py``.
"""

from sepr import CQExt, QExt, all_principal_minors, from_rows, sequences

# A 2x2 matrix with one positive and one negative diagonal entry.
B = from_rows([[1, 1], [1, -1]])
print("B =", B)
for key, value in sorted(all_principal_minors(B).items(), key=lambda kv: (len(kv[0]), kv[0])):
    if key:
        print(f"  minor {key}: {value}")
print("  ", sequences(B))

# Entries may live in Q(sqrt d)(i).  Here d = 3 and the determinant
# cancels to exactly zero, which floating point could only guess at.
r3 = QExt(0, 1, 3)
M = from_rows([[1, 2, 0], [2, 1, r3], [0, r3, -1]], d=3)
print("\nM =", M)
print("  ", sequences(M))

# A complex Hermitian matrix whose sequence no real symmetric matrix has.
i = CQExt(0, 1)
H = from_rows([[0, i, 1], [-i, 0, 1], [1, 1, 0]])
print("\nH =", H)
print("  ", sequences(H))
