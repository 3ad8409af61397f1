"""Show the block elimination at work: the full lattice matrix of a
class next to the small reduced matrix with the same invariants.

Run with:  python3 demos/reduction_pipeline.py
"""

from spintori import (
    SignedCycleType,
    invariant_factors,
    reduced_form_identity,
    reduced_torus_matrix,
    torus_matrix,
)

ct = SignedCycleType.parse("2,-2,-1")
q = 3

big = torus_matrix(ct, q)
print(f"class {ct.literal()} at q={q}: full {len(big)}x{len(big)} matrix")
for row in big:
    print("   ", row)

print(f"coupling identity holds: {reduced_form_identity(ct, q)}")

small = reduced_torus_matrix(ct, q)
print(f"reduced {len(small)}x{len(small)} matrix:")
for row in small:
    print("   ", row)

print("nontrivial invariant factors:")
print("  full   ", [x for x in invariant_factors(big) if x > 1])
print("  reduced", [x for x in invariant_factors(small) if x > 1])
