"""
Immunizing vertices of a tree
=============================

Immunizing a vertex sets its threshold to infinity: it can only be in the
infected set if it is seeded.  With budget ``b`` we choose the ``b``
vertices that make the smallest dynamic monopoly as large as possible.
"""

import numpy as np

from dynmono import immunize, reconstruct_X, solve_vacc1, vacc1_bruteforce
from dynmono.generate import random_instance
from dynmono.vacc1 import certify_X, dyn_tree

rng = np.random.default_rng(7)
tree = random_instance(10, "choice:1,2,inf", rng)
print("edges:", tree.edges)
print("tau:  ", tree.tau)

# The exact tree solver against exhaustive search, for every budget.
for b in range(tree.n + 2):
    print(f"b={b:2d}  tree DP {solve_vacc1(tree, b)!s:>4}  brute force {vacc1_bruteforce(tree, b)[0]!s:>4}")

# A witness for b = 3, checked by re-solving with those vertices immunized.
X = reconstruct_X(tree, 3)
print("immunize", sorted(X), "-> dyn", dyn_tree(tree.with_tau(immunize(tree.tau, X))))
print("certified:", certify_X(tree, X, solve_vacc1(tree, 3)))

# The solver scales to large trees.
big = random_instance(2000, "choice:0,1,2,3,inf", rng)
print("n=2000, b=25:", solve_vacc1(big, 25), "vs dyn", dyn_tree(big))
