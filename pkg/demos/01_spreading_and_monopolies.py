"""
Threshold spreading and dynamic monopolies
==========================================

A vertex joins the infected set once at least ``tau(u)`` of its neighbors
are infected.  A seed set whose closure is everything is a dynamic
monopoly; we look for the smallest one.
"""

from dynmono import POS_INF, Instance, dyn_bruteforce, hull, is_dynamic_monopoly, mandatory_vertices

# A path on five vertices where everybody needs two infected neighbors.
path = Instance(5, ((0, 1), (1, 2), (2, 3), (3, 4)), (2, 2, 2, 2, 2))
adj = path.adjacency()

# Seeding the two ends is not enough: the inner vertices each see one.
print("hull of {0, 4}:", sorted(hull(adj, path.tau, {0, 4})))

# Seeding every other vertex works.
print("hull of {0, 2, 4}:", sorted(hull(adj, path.tau, {0, 2, 4})))
print("monopoly?", is_dynamic_monopoly(adj, path.tau, {0, 2, 4}))

# Leaves can never collect two infected neighbors, so they are mandatory.
print("mandatory:", sorted(mandatory_vertices(adj, path.tau)))

# Exhaustive search gives the minimum and a canonical witness.
size, witness = dyn_bruteforce(adj, path.tau)
print("dyn =", size, "witness", sorted(witness))

# A threshold of 0 means the vertex infects itself; infinity means it never
# catches the infection and must be seeded.
mixed = path.with_tau((1, 0, POS_INF, 1, 1))
print("hull of nothing:", sorted(hull(adj, mixed.tau, set())))
print("dyn with an immune middle =", dyn_bruteforce(adj, mixed.tau)[0])
