"""
Symplectic reduction of Lagrangians and of the triple index
===========================================================

An isotropic subspace K induces the quotient K-perp / K, again a
symplectic space.  Lagrangians project, project-then-lift recovers a
Lagrangian through K, and the triple index is unchanged whenever K sits
inside two of the three subspaces.
"""

import numpy as np

from symindex import (
    SymplecticSpace,
    horizontal_lagrangian,
    kashiwara_index,
    kashiwara_reduced,
    lagrangian_frame,
    random_lagrangian,
    vertical_lagrangian,
)
from symindex.symplectic import SymplecticReduction, random_lagrangian_of

# reduce R^4 by the isotropic line K = span(1, 0, 1, 0)
space = SymplecticSpace.standard(2)
k = np.array([[1.0], [0.0], [1.0], [0.0]])
red = SymplecticReduction(space, k)
print("ambient dim %d -> reduced dim %d" % (space.dim, red.space.dim))

# coordinate Lagrangians project to lines of the reduced plane
for name, l in (("horizontal", horizontal_lagrangian(2)),
                ("vertical", vertical_lagrangian(2))):
    p = red.project(l)
    lifted = red.lift(p)
    print("%-10s -> reduced frame %s -> lifted span:" % (name, p.frame.ravel().round(6)))
    print(lifted.frame.round(6))

# the reduced space is a bona fide symplectic space: random Lagrangians
# of it lift to ambient Lagrangians through K
l_red = random_lagrangian_of(red.space, seed=7)
print("lift of a random reduced Lagrangian has columns:", red.lift(l_red).n)

# invariance of the triple index: K inside two of the three subspaces
k1 = np.zeros((4, 1))
k1[0, 0] = 1.0
l1 = horizontal_lagrangian(2)
f2 = np.zeros((4, 2))
f2[0, 0] = 1.0
f2[3, 1] = 1.0
l2 = lagrangian_frame(space, f2)
l3 = random_lagrangian(2, 40)
print()
print("tau ambient:", kashiwara_index(space, l1, l2, l3))
print("tau reduced:", kashiwara_reduced(space, k1, l1, l2, l3))
