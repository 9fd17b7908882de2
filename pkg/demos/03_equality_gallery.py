"""
A gallery of equality cases
===========================

When is a bound an equation?  The structural answer is always a complete
multipartite clique core, but which cores qualify differs between the
bounds.  This walks one example of each kind.
"""

import numpy as np

from cliquespectra import evaluate_bounds
from cliquespectra.bounds import (
    equality_case_predicate,
    weighted_clique_sum_check,
    witness_vector,
)
from cliquespectra.cliques import build_catalog
from cliquespectra.graphs import Graph, complete_multipartite


def tight_rows(g, t):
    suite = evaluate_bounds(g, t)
    return [r.name for r in suite.reports if r.applicable and r.equality_numeric]


# ---- kind 1: regular multipartite, spanning --------------------------------
# equal part sizes and every vertex covered: every bound in the family is
# tight at once
octa = complete_multipartite([2, 2, 2])
case = equality_case_predicate(octa, 3)
print("octahedron:", case.kind, "parts", case.parts)
print("  tight:", ", ".join(tight_rows(octa, 3)))
print()

# ---- kind 2: unequal parts with clique number equal to t -------------------
# the diamond K_{1,1,2}: the clique-localized radius bounds stay tight, the
# vertex-localized and count bounds go strict
diamond = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
case = equality_case_predicate(diamond, 3)
print("diamond:", case.kind, "parts", case.parts)
print("  tight:", ", ".join(tight_rows(diamond, 3)))
print()

# ---- kind 1 again, but not spanning ----------------------------------------
# a triangle with a spare vertex: the radius bounds ignore the extra vertex
# (the tensor does not see it) but the count bounds scale with n and lose
g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2)])
case = equality_case_predicate(g, 3)
print("K_3 + spare vertex:", case.kind, "uncovered", case.uncovered)
print("  tight:", ", ".join(tight_rows(g, 3)))
print()

# ---- no structure ----------------------------------------------------------
# two triangles sharing a vertex: the core is the whole graph and it is not
# complete multipartite, so no radius bound can be tight.  (the order
# uniformity comparison still is -- its own criterion only asks that every
# vertex sit in a largest clique of the same order, and here all see a K_3)
bowtie = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
case = equality_case_predicate(bowtie, 3)
print("bowtie:", case.kind)
print("  tight:", ", ".join(tight_rows(bowtie, 3)) or "(none)")
print()

# ---- the witness vector ----------------------------------------------------
# mass 1/omega per part, spread uniformly inside it: exactly the vector that
# turns the weighted unit-sum inequality into an equation
x = witness_vector(diamond, 3)
print("diamond witness:", x)
rep = weighted_clique_sum_check(diamond, build_catalog(diamond, 3), x)
print(f"weighted clique sum at the witness: {rep.lhs:.15f} (bound {rep.rhs})")

# any unit-mass perturbation breaks it
y = np.array([0.30, 0.36, 1 / 6, 1 / 6])
y /= y.sum()
rep = weighted_clique_sum_check(diamond, build_catalog(diamond, 3), y)
print(f"perturbed:                          {rep.lhs:.15f} (strictly below)")
