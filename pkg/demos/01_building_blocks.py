"""
Groups, subgroups, and the basic invariants
===========================================

A quick tour of the core objects: building groups from tables,
permutations and presets, then computing subgroups, commutators,
quotients and abelian invariants.
"""

from subdirect import (
    abelianization,
    center,
    commutator_subgroup,
    cyclic,
    dihedral,
    from_cayley_table,
    from_permutation_generators,
    is_isomorphic,
    quotient_group,
    subgroup_generated,
    sylow_subgroup,
    symmetric,
)

# A group is a validated multiplication table over indices 0..n-1,
# with 0 always the identity.  Here is C2 written by hand:
C2 = from_cayley_table([[0, 1], [1, 0]])
print("C2:", C2, "exponent", C2.exponent())

# Permutation generators are closed off automatically; a 3-cycle and a
# transposition generate all of S3.
S3 = from_permutation_generators(3, [[1, 2, 0], [1, 0, 2]], label="S3")
print("S3 from generators:", S3)
print("same as the preset:", is_isomorphic(S3, symmetric(3)))

# Subgroups are index sets; generation takes any seed.
r3 = next(g for g in range(S3.order) if S3.element_order(g) == 3)
A3 = subgroup_generated(S3, [r3])
print("subgroup from a 3-cycle:", A3, "order", A3.order)

# The commutator subgroup of S3 is exactly that A3.
print("derived subgroup:", commutator_subgroup(S3) == A3)

# Quotients come with their projection map.
Q, proj = quotient_group(S3, A3)
flip = next(g for g in range(S3.order) if S3.element_order(g) == 2)
print("S3/A3 has order", Q.order, "and proj(transposition) =", proj(flip))

# Dihedral and cyclic presets, centers and Sylow subgroups.
D8 = dihedral(8)
print("center of D8:", center(D8).elements)
print("Sylow 2 of S3 has order", sylow_subgroup(S3, 2).order)
print("Sylow 3 of S3 has order", sylow_subgroup(S3, 3).order)

# Abelianization: divisor chain of G/G' plus the projection.
for G in (S3, D8, cyclic(12)):
    inv, _ = abelianization(G)
    print(f"{G.label} abelianized:", inv.describe())
