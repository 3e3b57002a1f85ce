"""
Replaying the order-3 classification
=====================================

Start from every length-3 string over the seven symbols that ends in A+,
A- or N, knock out everything some rule prohibits, and check that each
survivor has a witness matrix that really computes to it.
"""

from collections import Counter

from sepr.catalog import witness
from sepr.rules import REAL_SYMMETRIC
from sepr.search import enumerate_candidates
from sepr.sequence import format_sequence

rep = enumerate_candidates(3)
print("candidates:", rep.universe)
print("prohibited:", len(rep.unattainable))

# Which rules do the pruning?  A sequence often violates several at once.
by_rule = Counter(rule for ids in rep.unattainable.values() for rule in ids)
for rule, count in sorted(by_rule.items(), key=lambda kv: (-kv[1], kv[0])):
    print(f"  {rule:4s} fires on {count:3d} candidates")

print("\nsurvivors with a verified witness:", len(rep.attainable_witnessed))
for seq in rep.attainable_witnessed[:12]:
    print(f"  {format_sequence(seq):8s} {witness(seq).expression}")
print("  ...")
print("survivors without a witness:", rep.rule_clean_unwitnessed)

real = enumerate_candidates(3, REAL_SYMMETRIC)
lost = sorted(set(rep.attainable_witnessed) - set(real.attainable_witnessed))
print("\nreal symmetric survivors:", len(real.attainable_witnessed), "- missing", [format_sequence(s) for s in lost])
