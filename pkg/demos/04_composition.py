"""
Composing subgroups over a shared middle factor
===============================================

U <= F x G and V <= G x H compose to U * V <= F x H by matching middle
coordinates.  Twisted diagonals compose like their automorphisms, and
for diagonal-containing inputs the kernels transport through the twist.
Extensibility is NOT preserved in general: this script ends with the
smallest failure the library knows.
"""

from subdirect import (
    automorphisms,
    commutator_subgroup,
    cyclic,
    diagonal,
    dihedral,
    direct_product,
    is_extensible,
    star_kernel_quotient_orders,
    star_preservation_condition,
    star_product,
    subgroup_generated,
    symmetric,
    twisted_diagonal,
)
from subdirect.products import projections_kernels

S3 = symmetric(3)

# Twisted diagonals are graphs of automorphisms; composition of the
# subgroups is composition of the twists.
phi, psi = automorphisms(S3)[1], automorphisms(S3)[2]
W = star_product(twisted_diagonal(S3, phi), twisted_diagonal(S3, psi))
print("graph(phi) * graph(psi) == graph(psi after phi):",
      W == twisted_diagonal(S3, psi.compose(phi)))

# Full products absorb everything.
full = direct_product(S3, S3).group.full()
print("full * full is full:", star_product(full, full).is_whole)

# For extensible inputs containing the plain diagonal, the composite
# stays extensible exactly when, on both sides, the composite kernel
# meets the derived subgroup no deeper than the two input kernels did.
D = diagonal(S3)
print("diagonal pair: condition",
      star_preservation_condition(D, D, 1),
      "and composite extensible:", is_extensible(star_product(D, D)))

# Matched kernel sections across a composition have equal orders.
orders = star_kernel_quotient_orders(D, D)
print("kernel section orders:", orders)

# The failure witness.  In G = D8 x C2 take the central kernels
# K = <(r^2, x)> and L = <(1, x)>.  Each misses G' = <(r^2, 1)>, so
# both inputs are extensible; together they generate a kernel that
# contains (r^2, 1), and the composite is obstructed at p = 2.
G = direct_product(dihedral(8), cyclic(2)).group
info = direct_product(G, G)
diag = [info.encode(g, g) for g in range(G.order)]
U = subgroup_generated(info.group, diag + [info.encode(5, 0)])
V = subgroup_generated(info.group, diag + [info.encode(1, 0)])
print("G':", commutator_subgroup(G).elements)
print("U extensible:", is_extensible(U), "| V extensible:",
      is_extensible(V))
W = star_product(U, V)
print("composite kernel:", projections_kernels(W).k1.elements)
print("composite extensible:", is_extensible(W))
print("condition on side 1:", star_preservation_condition(U, V, 1),
      "| side 2:", star_preservation_condition(U, V, 2))
