"""
A rotating plane, scanned and in closed form
============================================

The simplest autonomous system is a single plane rotating with constant
angular velocity alpha.  Its two path indices have closed forms, and the
crossing scans must reproduce them exactly, including the half-integer
endpoint contributions.
"""

import numpy as np

from symindex import (
    conley_zehnder,
    crossing_form,
    find_crossings,
    maslov_index_symplectic,
    orbit_path,
    plane_block_generator,
    vertical_lagrangian,
)
from symindex.maslov import rotation_graph_index, rotation_orbit_index

# a spread of speeds: negative, slower than pi, full turns, fast
speeds = [-7.0, -2.0, 0.5, 2.0, 2 * np.pi, 5.0, 3 * np.pi, 8.0]

print("speed      orbit  (closed)   graph  (closed)")
for alpha in speeds:
    h = plane_block_generator([("elliptic", alpha)])
    mu = maslov_index_symplectic(h)
    cz = conley_zehnder(h)
    print("%8.4f   %5s  %8s   %5s  %8s"
          % (alpha, mu, rotation_orbit_index(alpha), cz, rotation_graph_index(alpha)))

# where do the crossings sit for alpha = 5?  One at the start (counted
# with weight 1/2) and one interior at t = pi/alpha (full weight).
h = plane_block_generator([("elliptic", 5.0)])
scan = find_crossings(orbit_path(h), vertical_lagrangian(1))
print()
print("alpha = 5 crossings:")
for c in scan.crossings:
    print("  t = %.6f  dim %d  inertia %s  endpoint %s"
          % (c.time, c.dim, c.inertia, c.at_endpoint))
print("index =", scan.index)

# the crossing form at t = 0 is the rotation speed itself: the form in
# the single intersection direction v is omega(v, H v)
_, gamma = crossing_form(orbit_path(h), vertical_lagrangian(1), 0.0)
print("crossing form at t=0:", gamma.ravel(), "(the speed)")
