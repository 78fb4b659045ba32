"""Maximum dyn after deleting ``b`` vertices of a tree.

Per vertex ``u`` and budget ``b'``:

* ``y_in[u][b']``: best value on the subtree when ``u`` itself is deleted;
* ``y0[u][b']``: best value when ``u`` is kept;
* ``y1[u][b']``: as ``y0`` with ``u``'s threshold lowered by one.

All three rows have length ``min(bmax, n(T_u)) + 1``.  ``y_in`` is
infeasible at budget 0 and ``y0``/``y1`` at budget ``n(T_u)``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import knapsack
from .knapsack import NEG
from .model import NEG_INF, InfeasibleBudget, Instance, RootedTree, delete_vertices, ext_value, root_at
from .vacc1 import dyn_tree


@dataclass
class V2Table:
    tree: RootedTree
    tau: tuple
    bmax: int
    y_in: list
    y0: list
    y1: list

    def cell(self, which: str, u: int, b: int):
        row = getattr(self, which)[u]
        return ext_value(row[b]) if b < len(row) else NEG_INF


def leaf_table_v2(u: int, tau, bmax: int):
    width = min(bmax, 1) + 1
    y_in = np.full(width, NEG)
    if width > 1:
        y_in[1] = 0.0
    rows = []
    for j in (0, 1):
        row = np.full(width, NEG)
        row[0] = 0.0 if tau[u] <= j else 1.0
        rows.append(row)
    return y_in, rows[0], rows[1]


def _deleted_profile(child_rows):
    return [np.maximum(y_in, y0) for y_in, y0, _ in child_rows]


def combine_y_in(u: int, child_rows, bmax: int, layers=None) -> np.ndarray:
    """``y_in`` row of ``u``: one unit deletes ``u``, the rest is split among the now separate child subtrees."""
    width = min(bmax, 1 + sum(len(r[0]) - 1 for r in child_rows)) + 1
    if layers is None:
        layers = knapsack.maxplus_knapsack(_deleted_profile(child_rows), bmax)
    S = layers[-1]
    row = np.full(width, NEG)
    span = min(len(S), width - 1)
    row[1:1 + span] = S[:span]
    return row


def deletion_knapsack(child_rows, bmax: int, cap: int | None = None) -> list[np.ndarray]:
    """Layers ``M_p[d, c, b]``: ``d`` children deleted, ``c`` kept children with ``y0 == y1``.

    With ``cap``, count index ``cap`` collects every ``c >= cap``.
    """
    k = len(child_rows)
    cap = k if cap is None else min(cap, k)
    M = np.full((1, cap + 1, 1), NEG)
    M[0, 0, 0] = 0.0
    layers = [M]
    for y_in, y0, y1 in child_rows:
        width = min(bmax, M.shape[2] - 1 + len(y_in) - 1) + 1
        new = np.full((M.shape[0] + 1, cap + 1, width), NEG)
        for bp in range(len(y_in)):
            span = min(M.shape[2], width - bp)
            if span <= 0:
                break
            if y_in[bp] != NEG:
                dst = new[1:, :, bp:bp + span]
                np.maximum(dst, M[:, :, :span] + y_in[bp], out=dst)
            if y1[bp] != NEG:
                cand = M[:, :, :span] + y1[bp]
                dst = new[:-1, :, bp:bp + span]
                if y0[bp] == y1[bp]:
                    np.maximum(dst[:, 1:], cand[:, :-1], out=dst[:, 1:])
                    np.maximum(dst[:, -1], cand[:, -1], out=dst[:, -1])
                else:
                    np.maximum(dst, cand, out=dst)
        M = new
        layers.append(M)
    return layers


def combine_children_v2(u: int, child_rows, tau_u, bmax: int, layers=None):
    """``(y0, y1)`` rows of ``u`` (kept) from the children's ``(y_in, y0, y1)`` rows."""
    k = len(child_rows)
    width = min(bmax, 1 + sum(len(r[0]) - 1 for r in child_rows)) + 1
    if layers is None:
        layers = deletion_knapsack(child_rows, bmax, knapsack.count_cap(tau_u, k))
    M = layers[-1].max(axis=0)
    out = []
    for j in (0, 1):
        row = np.full(width, NEG)
        free = knapsack.seeded_or_free(M, knapsack.effective_threshold(tau_u, j, k))
        # free covers budgets up to n(T_u) - 1 only: u itself is kept
        row[:len(free)] = free
        out.append(row)
    return out[0], out[1]


def solve_table_v2(instance: Instance, bmax: int, root: int = 0) -> V2Table:
    tree = root_at(instance, root)
    tau = instance.tau
    bmax = min(bmax, instance.n)
    n = instance.n
    y_in: list = [None] * n
    y0: list = [None] * n
    y1: list = [None] * n
    for u in tree.post_order:
        kids = tree.children[u]
        if not kids:
            y_in[u], y0[u], y1[u] = leaf_table_v2(u, tau, bmax)
        else:
            rows = [(y_in[v], y0[v], y1[v]) for v in kids]
            y_in[u] = combine_y_in(u, rows, bmax)
            y0[u], y1[u] = combine_children_v2(u, rows, tau[u], bmax)
    return V2Table(tree, tau, bmax, y_in, y0, y1)


def solve_vacc2(instance: Instance, b: int | None = None, root: int = 0):
    """Largest minimum dynamic monopoly reachable by deleting ``b`` vertices.

    ``NEG_INF`` when ``b > n``.
    """
    b = instance.budget if b is None else b
    if b is None or b < 0:
        raise ValueError("a non-negative budget is required")
    if b > instance.n:
        return NEG_INF
    table = solve_table_v2(instance, b, root)
    r = table.tree.root
    return max(table.cell("y_in", r, b), table.cell("y0", r, b))


def _split_1d(layers, rows, b: int) -> list[int]:
    budgets = [0] * len(rows)
    for p in range(len(rows), 0, -1):
        prev, target, row = layers[p - 1], layers[p][b], rows[p - 1]
        for bp in range(min(len(row) - 1, b) + 1):
            rest = b - bp
            if rest < len(prev) and row[bp] != NEG and prev[rest] + row[bp] == target:
                budgets[p - 1] = bp
                b = rest
                break
        else:
            raise AssertionError("knapsack backtrack failed")
    return budgets


def _split_deletion(layers, child_rows, d: int, c: int, b: int):
    """Backtrack ``M_k[d, c, b]``; returns per-child ``(budget, deleted)``."""
    k = len(child_rows)
    cap = layers[0].shape[1] - 1
    choice = [(0, False)] * k
    for p in range(k, 0, -1):
        prev, target = layers[p - 1], layers[p][d, c, b]
        y_in, y0, y1 = child_rows[p - 1]
        found = None
        for bp in range(min(len(y_in) - 1, b) + 1):
            rest = b - bp
            if rest >= prev.shape[2]:
                continue
            if y1[bp] != NEG and d < prev.shape[0]:
                if y0[bp] == y1[bp]:
                    options = [c - 1] + ([c] if c == cap else [])
                else:
                    options = [c]
                pc = next((pc for pc in options if pc >= 0 and prev[d, pc, rest] + y1[bp] == target), None)
                if pc is not None:
                    found = (bp, False, d, pc)
                    break
            if y_in[bp] != NEG and d >= 1 and prev[d - 1, c, rest] + y_in[bp] == target:
                found = (bp, True, d - 1, c)
                break
        if found is None:
            raise AssertionError("knapsack backtrack failed")
        bp, deleted, d, c = found
        choice[p - 1] = (bp, deleted)
        b -= bp
    return choice


def reconstruct_Y(instance: Instance, b: int | None = None, root: int = 0, table: V2Table | None = None) -> frozenset:
    """An optimal deletion set of size ``b``.

    Same first-maximizer descent as the immunization witness, with a
    deleted/kept state per visited vertex.
    """
    b = instance.budget if b is None else b
    if b > instance.n:
        raise InfeasibleBudget(f"budget {b} exceeds n={instance.n}")
    if table is None:
        table = solve_table_v2(instance, b, root)
    tree, tau = table.tree, table.tau
    r = tree.root
    Y = set()
    start = "y_in" if table.y_in[r][b] > table.y0[r][b] else "y0"
    stack = [(r, b, start)]
    while stack:
        u, bu, state = stack.pop()
        kids = tree.children[u]
        rows = [(table.y_in[v], table.y0[v], table.y1[v]) for v in kids]
        if state == "y_in":
            Y.add(u)
            profile = _deleted_profile(rows)
            budgets = _split_1d(knapsack.maxplus_knapsack(profile, table.bmax), profile, bu - 1)
            for v, bv, (yi, y0, _) in zip(kids, budgets, rows):
                stack.append((v, bv, "y_in" if yi[bv] > y0[bv] else "y0"))
            continue
        if bu == 0:
            continue
        layers = deletion_knapsack(rows, table.bmax, knapsack.count_cap(tau[u], len(kids)))
        M = layers[-1]
        j = 1 if table.y1[u][bu] == table.y0[u][bu] else 0
        target = (table.y0, table.y1)[j][u][bu]
        t = knapsack.effective_threshold(tau[u], j, len(kids))
        d, c = next(
            (d, c)
            for d in range(M.shape[0])
            for c in range(M.shape[1])
            if M[d, c, bu] + (1 if c < t else 0) == target
        )
        for v, (bv, deleted) in zip(kids, _split_deletion(layers, rows, d, c, bu)):
            stack.append((v, bv, "y_in" if deleted else "y0"))
    return frozenset(Y)


def forest_dyn(instance: Instance, Y) -> int:
    """Minimum dynamic monopoly of ``T - Y``, summed over its components."""
    return sum(dyn_tree(comp.instance) for comp in delete_vertices(instance, Y))


def certify_Y(instance: Instance, Y, value) -> bool:
    return forest_dyn(instance, Y) == value
