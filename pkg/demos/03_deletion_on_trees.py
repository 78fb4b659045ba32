"""
Deleting vertices of a tree
===========================

Deleted vertices drop out of the graph together with their edges.  Unlike
immunization, a bigger deletion budget can lower the optimum.
"""

from dynmono import Instance, delete_vertices, reconstruct_Y, solve_vacc2, vacc2_bruteforce
from dynmono.vacc2 import forest_dyn

# Star with center 0 and four leaves, every threshold 1.
star = Instance(5, tuple((0, i) for i in range(1, 5)), (1,) * 5)

for b in range(star.n + 1):
    Y = reconstruct_Y(star, b)
    print(f"b={b}  value {solve_vacc2(star, b)}  oracle {vacc2_bruteforce(star, b)[0]}  delete {sorted(Y)}")

# Removing the center leaves four isolated vertices, each of which must be
# seeded.  With two deletions one of them has to be a leaf.
pieces = delete_vertices(star, {0})
print("components after deleting the center:", [c.labels for c in pieces])
print("their dyn sum:", forest_dyn(star, {0}))
