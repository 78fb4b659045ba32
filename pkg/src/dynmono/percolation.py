"""Threshold spreading on arbitrary graphs and exhaustive reference solvers.

``adj`` is any sequence of neighbor sequences (``adj[u]`` lists the
neighbors of ``u``), e.g. :meth:`Instance.adjacency`.  The brute-force
solvers are exponential and guarded by a vertex cap.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Sequence

from .model import NEG_INF, Instance, immunize

DYN_MAX_N = 20
VACC_MAX_N = 12


class InstanceTooLarge(ValueError):
    """Raised when a brute-force solver is called above its size cap."""


def hull(adj: Sequence[Sequence[int]], tau: Sequence, D: Iterable[int]) -> frozenset:
    """Closure of ``D`` under "join once ``tau(u)`` neighbors are active".

    Vertices with ``tau(u) <= 0`` join unconditionally.
    """
    n = len(adj)
    active = [False] * n
    count = [0] * n
    queue = deque()
    for u in D:
        if not active[u]:
            active[u] = True
            queue.append(u)
    for u in range(n):
        if not active[u] and tau[u] <= 0:
            active[u] = True
            queue.append(u)
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if active[v]:
                continue
            count[v] += 1
            if count[v] >= tau[v]:
                active[v] = True
                queue.append(v)
    return frozenset(u for u in range(n) if active[u])


def is_dynamic_monopoly(adj, tau, D) -> bool:
    return len(hull(adj, tau, D)) == len(adj)


def mandatory_vertices(adj, tau) -> frozenset:
    """Vertices every dynamic monopoly must contain: ``tau(u) > deg(u)``."""
    return frozenset(u for u in range(len(adj)) if tau[u] > len(adj[u]))


# --- bitmask machinery for the oracles -------------------------------------

def _masks(adj) -> list[int]:
    return [sum(1 << v for v in nb) for nb in adj]


def _closure(nbr: list[int], tau: Sequence, seed: int, universe: int) -> int:
    h = seed
    changed = True
    while changed:
        changed = False
        rest = universe & ~h
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            if (nbr[u] & h).bit_count() >= tau[u]:
                h |= low
                changed = True
    return h


def _min_monopoly(nbr: list[int], tau: Sequence, universe: int) -> int:
    """Lexicographically first minimum dynamic monopoly inside ``universe``.

    ``nbr`` must already be restricted to ``universe``.
    """
    verts = [u for u in range(len(nbr)) if universe >> u & 1]
    forced = 0
    free = []
    for u in verts:
        if tau[u] > nbr[u].bit_count():
            forced |= 1 << u
        elif tau[u] > 0:  # tau <= 0 vertices never belong to a minimum monopoly
            free.append(u)
    for size in range(len(free) + 1):
        for combo in combinations(free, size):
            seed = forced
            for u in combo:
                seed |= 1 << u
            if _closure(nbr, tau, seed, universe) == universe:
                return seed
    raise AssertionError("the full vertex set is always a monopoly")


def _bits(mask: int) -> frozenset:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def dyn_bruteforce(adj, tau, max_n: int = DYN_MAX_N) -> tuple[int, frozenset]:
    """Minimum dynamic monopoly by enumeration (size first, then lexicographic)."""
    n = len(adj)
    if n > max_n:
        raise InstanceTooLarge(f"dyn_bruteforce: n={n} exceeds cap {max_n}")
    best = _min_monopoly(_masks(adj), tau, (1 << n) - 1)
    witness = _bits(best)
    return len(witness), witness


def _forest_dyn(nbr_all: list[int], tau, universe: int) -> int:
    """Sum of per-component minimum monopoly sizes of the induced forest."""
    nbr = [m & universe for m in nbr_all]
    total = 0
    rest = universe
    while rest:
        start = rest & -rest
        comp = start
        frontier = start
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = nbr[low.bit_length() - 1] & ~comp
            comp |= new
            frontier |= new
        rest &= ~comp
        total += _min_monopoly(nbr, tau, comp).bit_count()
    return total


def vacc1_bruteforce(instance: Instance, b: int, max_n: int = VACC_MAX_N):
    """Best immunization set by enumerating all ``b``-subsets."""
    n = instance.n
    if n > max_n:
        raise InstanceTooLarge(f"vacc1_bruteforce: n={n} exceeds cap {max_n}")
    if b > n:
        return NEG_INF, None
    nbr = _masks(instance.adjacency())
    full = (1 << n) - 1
    best, arg = NEG_INF, None
    for X in combinations(range(n), b):
        value = _forest_dyn(nbr, immunize(instance.tau, X), full)
        if value > best:
            best, arg = value, frozenset(X)
    return best, arg


def vacc2_bruteforce(instance: Instance, b: int, max_n: int = VACC_MAX_N):
    """Best deletion set by enumerating all ``b``-subsets."""
    n = instance.n
    if n > max_n:
        raise InstanceTooLarge(f"vacc2_bruteforce: n={n} exceeds cap {max_n}")
    if b > n:
        return NEG_INF, None
    nbr = _masks(instance.adjacency())
    full = (1 << n) - 1
    best, arg = NEG_INF, None
    for Y in combinations(range(n), b):
        removed = 0
        for y in Y:
            removed |= 1 << y
        value = _forest_dyn(nbr, instance.tau, full & ~removed)
        if value > best:
            best, arg = value, frozenset(Y)
    return best, arg
