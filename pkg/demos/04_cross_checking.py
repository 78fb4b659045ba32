"""
Cross-checking against brute force
==================================

The ``check`` harness draws seeded random trees, runs both tree solvers
and both exhaustive oracles, and certifies every witness.
"""

import time

import numpy as np

from dynmono.cli import run_check
from dynmono.generate import random_instance
from dynmono import solve_vacc1, solve_vacc2

status = run_check(count=200, min_n=1, max_n=9, profile="choice:0,1,2,3,inf", seed=2026, out=None)
print("exit status", status)

# Runtime as the budget grows at fixed size.
tree = random_instance(1000, "choice:0,1,2,3,inf", np.random.default_rng(0))
for b in (5, 10, 20, 40):
    start = time.perf_counter()
    solve_vacc1(tree, b)
    t1 = time.perf_counter() - start
    start = time.perf_counter()
    solve_vacc2(tree, b)
    t2 = time.perf_counter() - start
    print(f"b={b:3d}  immunize {t1:.3f}s  delete {t2:.3f}s")
