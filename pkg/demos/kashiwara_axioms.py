"""
The triple index and its characterizing properties
==================================================

The index of a triple of Lagrangians is the signature of one explicit
quadratic form on the direct sum.  It is antisymmetric in its slots,
invariant under the symplectic group, satisfies the cocycle identity,
and is normalized by the elementary positively oriented triple.
"""

import numpy as np

from symindex import (
    SymplecticSpace,
    hormander_index,
    kashiwara_form,
    kashiwara_index,
    kashiwara_transversal,
    lagrangian_frame,
    maslov_index,
    random_lagrangian,
    transversal_triple,
    unitary_geodesic,
)

space = SymplecticSpace.standard(1)


def line(c, s):
    return lagrangian_frame(space, np.array([[float(c)], [float(s)]]))


# normalization: horizontal, first diagonal, vertical
h, d, v = line(1, 0), line(1, 1), line(0, 1)
print("tau(H, D, V) =", kashiwara_index(space, h, d, v), " (the oriented triple)")
print("form matrix:")
print(kashiwara_form(space, h, d, v))

# antisymmetry and the cocycle identity on random planes
sp2 = SymplecticSpace.standard(2)
l1, l2, l3, l4 = (random_lagrangian(2, seed) for seed in (4, 5, 6, 7))
t123 = kashiwara_index(sp2, l1, l2, l3)
print()
print("tau(1,2,3) = %d   tau(2,1,3) = %d   tau(2,3,1) = %d"
      % (t123, kashiwara_index(sp2, l2, l1, l3), kashiwara_index(sp2, l2, l3, l1)))
cocycle = (t123 - kashiwara_index(sp2, l1, l2, l4)
           + kashiwara_index(sp2, l1, l3, l4) - kashiwara_index(sp2, l2, l3, l4))
print("cocycle sum (must vanish):", cocycle)

# for the triple (horizontal, graph of A, vertical) the index is just
# the signature of the symmetric matrix A
print()
for d in ([2.0, 3.0], [2.0, -3.0]):
    a = np.diag(d)
    spc, f1, f2, f3 = transversal_triple(a)
    print("A = diag%s: closed form %+d, from frames %+d"
          % (tuple(d), kashiwara_transversal(a), kashiwara_index(spc, f1, f2, f3)))

# the four-slot index is the path-independent change of the path index
# when the reference Lagrangian moves
start, end = random_lagrangian(2, 11), random_lagrangian(2, 12)
ref0, ref1 = random_lagrangian(2, 13), random_lagrangian(2, 14)
path = unitary_geodesic(start, end, 0)
diff = maslov_index(path, ref1) - maslov_index(path, ref0)
print()
print("index difference along a connecting path:", diff)
print("four-slot index of the two pairs:        ",
      hormander_index(sp2, ref0, ref1, start, end))
