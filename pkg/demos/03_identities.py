"""
Watching the determinant identities hold exactly
=================================================

Schur complements, Jacobi's identity for the inverse and the negation rule
each predict minors or whole sequences of a derived matrix from those of
the original.  Here they are on one small matrix, then on a random batch.
"""

from sepr import from_rows, identity, inverse, negate, ones, schur_complement, sepr
from sepr.matrix import all_principal_minors, determinant
from sepr.search import GenSpec, identity_suite
from sepr.sequence import inverse_sepr_predict, negative_sepr, parse_sequence

B = ones(3) - 2 * identity(3)
print("B =", B, " sepr", sepr(B))

C = schur_complement(B, [1])
print("Schur complement on {1}:", C, "labels", C.labels)
print("  det C =", determinant(C), "= det B / B_1 =", determinant(B) / all_principal_minors(B)[(1,)])

Bi = inverse(B)
print("inverse:", Bi, " sepr", sepr(Bi))
print("  predicted from sepr(B):", "".join(inverse_sepr_predict(parse_sequence(sepr(B)))))
print("negation: sepr(-B) =", sepr(negate(B)),
      " predicted", "".join(negative_sepr(parse_sequence(sepr(B)))))

# A random batch with sqrt(2) in the entries.
specs = [GenSpec(n, "gaussian", 2, "hermitian", d=2, seed=7) for n in (3, 4)]
rep = identity_suite(specs, 50)
print("\n50 random matrices:", "all identities hold" if rep.ok else "FAILURES")
for name, count in sorted(rep.checked.items()):
    print(f"  {name:16s} {count} instances")

M = from_rows([[2, 1], [1, 2]])
print("\nfor comparison a positive definite matrix:", sepr(M), "and its inverse", sepr(inverse(M)))
