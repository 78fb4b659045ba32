"""Maximum dyn after immunizing ``b`` vertices of a tree.

For each vertex ``u`` and budget ``b'`` the sweep keeps

* ``x0[u][b']``: the best value on the subtree of ``u``;
* ``x1[u][b']``: the same with ``u``'s threshold lowered by one (the parent
  is already infected).

Rows are float arrays of length ``min(bmax, n(T_u)) + 1``; larger budgets
are infeasible (``-inf``).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import knapsack
from .knapsack import NEG
from .model import NEG_INF, InfeasibleBudget, Instance, RootedTree, ext_value, immunize, root_at


@dataclass
class V1Table:
    tree: RootedTree
    tau: tuple
    bmax: int
    x0: list
    x1: list

    def cell(self, which: int, u: int, b: int):
        row = (self.x0, self.x1)[which][u]
        return ext_value(row[b]) if b < len(row) else NEG_INF


def leaf_table_v1(u: int, tau, bmax: int) -> tuple[np.ndarray, np.ndarray]:
    """Rows for a leaf: seeded unless its threshold is already met, one immunization max."""
    width = min(bmax, 1) + 1
    rows = []
    for j in (0, 1):
        row = np.ones(width)
        row[0] = 0.0 if tau[u] <= j else 1.0
        rows.append(row)
    return rows[0], rows[1]


def _child_knapsack(child_rows, tau_u, bmax):
    x1s = [x1 for _, x1 in child_rows]
    eqs = [x0 == x1 for x0, x1 in child_rows]
    cap = knapsack.count_cap(tau_u, len(child_rows))
    return knapsack.counted_knapsack(x1s, eqs, bmax, cap)


def combine_children_v1(u: int, child_rows, tau_u, bmax: int, layers=None):
    """Rows of ``u`` from its children's ``(x0, x1)`` rows."""
    k = len(child_rows)
    width = min(bmax, 1 + sum(len(r[0]) - 1 for r in child_rows)) + 1
    if layers is None:
        layers = _child_knapsack(child_rows, tau_u, bmax)
    M = layers[-1]

    # u immunized: u is seeded and every child gets help from it
    z = np.full(width, NEG)
    S = M.max(axis=0)
    span = min(len(S), width - 1)
    z[1:1 + span] = S[:span] + 1

    out = []
    for j in (0, 1):
        t = knapsack.effective_threshold(tau_u, j, k)
        zj = np.full(width, NEG)
        free = knapsack.seeded_or_free(M, t)
        zj[:min(len(free), width)] = free[:width]
        out.append(np.maximum(z, zj))
    return out[0], out[1]


def solve_table_v1(instance: Instance, bmax: int, root: int = 0) -> V1Table:
    tree = root_at(instance, root)
    tau = instance.tau
    bmax = min(bmax, instance.n)
    x0: list = [None] * instance.n
    x1: list = [None] * instance.n
    for u in tree.post_order:
        kids = tree.children[u]
        if not kids:
            x0[u], x1[u] = leaf_table_v1(u, tau, bmax)
        else:
            x0[u], x1[u] = combine_children_v1(u, [(x0[v], x1[v]) for v in kids], tau[u], bmax)
    return V1Table(tree, tau, bmax, x0, x1)


def solve_vacc1(instance: Instance, b: int | None = None, root: int = 0):
    """Largest minimum dynamic monopoly reachable by immunizing ``b`` vertices.

    ``NEG_INF`` when ``b > n``.
    """
    b = instance.budget if b is None else b
    if b is None or b < 0:
        raise ValueError("a non-negative budget is required")
    if b > instance.n:
        return NEG_INF
    table = solve_table_v1(instance, b, root)
    return table.cell(0, table.tree.root, b)


def dyn_tree(instance: Instance, root: int = 0) -> int:
    """Minimum dynamic monopoly size of a tree (zero budget)."""
    return solve_vacc1(instance, 0, root)


def _split_budget(layers, child_rows, c: int, b: int) -> list[int]:
    """Walk the knapsack layers back from cell ``(c, b)`` and return the child budgets."""
    k = len(child_rows)
    cap = layers[0].shape[0] - 1
    budgets = [0] * k
    for p in range(k, 0, -1):
        prev, target = layers[p - 1], layers[p][c, b]
        x0v, x1v = child_rows[p - 1]
        for bp in range(min(len(x1v) - 1, b) + 1):
            rest = b - bp
            if rest >= prev.shape[1] or x1v[bp] == NEG:
                continue
            if x0v[bp] == x1v[bp]:
                options = [c - 1] + ([c] if c == cap else [])
            else:
                options = [c]
            hit = next((pc for pc in options if pc >= 0 and prev[pc, rest] + x1v[bp] == target), None)
            if hit is not None:
                budgets[p - 1] = bp
                c, b = hit, rest
                break
        else:
            raise AssertionError("knapsack backtrack failed")
    return budgets


def reconstruct_X(instance: Instance, b: int | None = None, root: int = 0, table: V1Table | None = None) -> frozenset:
    """An optimal immunization set of size ``b``.

    Descends from the root, recomputing each visited vertex's child
    knapsack; the first maximizer wins (immunize ``u`` before not, lower
    counts first, lower child budgets first).  Every partial set realizes
    both ``x0`` and ``x1`` of its vertex, which is what the parent relies on.
    """
    b = instance.budget if b is None else b
    if b > instance.n:
        raise InfeasibleBudget(f"budget {b} exceeds n={instance.n}")
    if table is None:
        table = solve_table_v1(instance, b, root)
    tree, tau = table.tree, table.tau
    X = set()
    stack = [(tree.root, b)]
    while stack:
        u, bu = stack.pop()
        if bu == 0:
            continue
        kids = tree.children[u]
        child_rows = [(table.x0[v], table.x1[v]) for v in kids]
        layers = _child_knapsack(child_rows, tau[u], table.bmax)
        M = layers[-1]
        target = table.x0[u][bu]
        S = M.max(axis=0)
        if bu - 1 < len(S) and S[bu - 1] + 1 == target:
            X.add(u)
            c = int(np.argmax(M[:, bu - 1]))
            budgets = _split_budget(layers, child_rows, c, bu - 1)
        else:
            # a set realizing x1 also realizes x0 when they are equal, not conversely
            j = 1 if table.x1[u][bu] == target else 0
            target = (table.x0, table.x1)[j][u][bu]
            t = knapsack.effective_threshold(tau[u], j, len(kids))
            c = next(
                c for c in range(M.shape[0])
                if (M[c, bu] + (1 if c < t else 0)) == target
            )
            budgets = _split_budget(layers, child_rows, c, bu)
        stack.extend(zip(kids, budgets))
    return frozenset(X)


def certify_X(instance: Instance, X, value) -> bool:
    """Re-solve with ``X`` immunized and zero budget; compare with ``value``."""
    return dyn_tree(instance.with_tau(immunize(instance.tau, X))) == value
