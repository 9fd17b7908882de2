"""
Certified clique-tensor spectral radii
======================================

Every radius below comes with a two-sided interval from the running
Collatz-Wielandt ratios, so the printed value is not just an estimate.
"""

import math

from cliquespectra import (
    complete_multipartite,
    cycle_graph,
    multistart_spectral_radius,
    petersen_graph,
    spectral_radius,
)
from cliquespectra.graphs import Graph

# at t = 2 the clique tensor is the adjacency matrix, so these are the
# classical spectral radii
for name, g, expect in [
    ("C_5", cycle_graph(5), 2.0),
    ("Petersen", petersen_graph(), 3.0),
    ("K_{3,3}", complete_multipartite([3, 3]), 3.0),
]:
    res = spectral_radius(g, 2)
    print(f"{name:10s} rho_2 = {res.rho:.12f}   expected {expect}")
    print(f"{'':10s} enclosure [{res.lower:.12e}, {res.upper:.12e}], "
          f"{res.iterations} iterations")

print()

# the diamond (two triangles sharing an edge) has a nice closed form at
# both orders: (1 + sqrt(17))/2 for the adjacency, 2^(2/3) for triangles
diamond = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
r2 = spectral_radius(diamond, 2)
r3 = spectral_radius(diamond, 3)
print(f"diamond    rho_2 = {r2.rho:.12f}   closed form {(1 + math.sqrt(17)) / 2:.12f}")
print(f"diamond    rho_3 = {r3.rho:.12f}   closed form {2 ** (2 / 3):.12f}")

# the eigenvector of the triangle tensor concentrates on the shared edge
print(f"diamond    t=3 eigenvector {[round(float(v), 6) for v in r3.vector]}")

print()

# complete multipartite graphs with t = number of parts have radius
# (product of part sizes)^((t-1)/t); the octahedron K_{2,2,2} gives 4 at
# both t = 2 and t = 3, a graph where the two spectra meet
octa = complete_multipartite([2, 2, 2])
print(f"K_2,2,2    rho_2 = {spectral_radius(octa, 2).rho:.12f}")
print(f"K_2,2,2    rho_3 = {spectral_radius(octa, 3).rho:.12f}   (8^(2/3) = 4)")

print()

# an independent check: seeded multistart iteration climbs to the radius
# from below, without sharing any state with the certified run
est = multistart_spectral_radius(octa, 3, restarts=4, seed=1)
print(f"multistart lower estimate for K_2,2,2 at t=3: {est:.12f}")

# a graph with no t-clique has radius exactly zero -- the Petersen graph
# is triangle-free
print(f"Petersen   rho_3 = {spectral_radius(petersen_graph(), 3).rho}")
