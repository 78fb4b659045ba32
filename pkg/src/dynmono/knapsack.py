"""Budget-splitting knapsacks over the children of a vertex.

Every child contributes a row ``row[b]`` (a float array, ``-inf`` for
infeasible budgets).  The tables hold the best total over all ordered
budget splits, built one child at a time so that splits are never listed.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

NEG = -np.inf


def maxplus_knapsack(rows: Sequence[np.ndarray], bmax: int) -> list[np.ndarray]:
    """Layers ``S_0..S_k`` with ``S_p[b] = max sum_{i<=p} rows[i][b_i]`` over splits of ``b``.

    ``S_0 = [0]``: zero children can only absorb a zero budget.
    """
    S = np.zeros(1)
    layers = [S]
    for row in rows:
        width = min(bmax, len(S) - 1 + len(row) - 1) + 1
        new = np.full(width, NEG)
        for bp, val in enumerate(row):
            if val == NEG:
                continue
            span = min(len(S), width - bp)
            if span <= 0:
                break
            np.maximum(new[bp:bp + span], S[:span] + val, out=new[bp:bp + span])
        S = new
        layers.append(S)
    return layers


def counted_knapsack(
    rows: Sequence[np.ndarray],
    equal: Sequence[np.ndarray],
    bmax: int,
    cap: int | None = None,
) -> list[np.ndarray]:
    """Layers ``M_p[c, b]``: best sum over splits of ``b`` with ``c`` children flagged equal.

    ``equal[i][b]`` flags whether child ``i`` at budget ``b`` counts.  With
    ``cap`` set, index ``cap`` collects every count ``>= cap``; the default
    keeps exact counts ``0..k``.
    """
    k = len(rows)
    cap = k if cap is None else min(cap, k)
    M = np.full((cap + 1, 1), NEG)
    M[0, 0] = 0.0
    layers = [M]
    for row, eq in zip(rows, equal):
        width = min(bmax, M.shape[1] - 1 + len(row) - 1) + 1
        new = np.full((cap + 1, width), NEG)
        for bp, val in enumerate(row):
            if val == NEG:
                continue
            span = min(M.shape[1], width - bp)
            if span <= 0:
                break
            cand = M[:, :span] + val
            dst = new[:, bp:bp + span]
            if eq[bp]:
                np.maximum(dst[1:], cand[:-1], out=dst[1:])
                np.maximum(dst[-1], cand[-1], out=dst[-1])
            else:
                np.maximum(dst, cand, out=dst)
        M = new
        layers.append(M)
    return layers


def effective_threshold(tau_u, j: int, k: int) -> int:
    """Number of "free" children needed to skip seeding a vertex with ``k`` children.

    ``tau_u - j`` clamped at 0; an immune vertex (``inf``) can never be
    skipped, encoded as ``k + 1``.
    """
    if tau_u == np.inf:
        return k + 1
    return max(int(tau_u) - j, 0)


def count_cap(tau_u, k: int) -> int:
    """Smallest count cap that still separates both effective thresholds."""
    if tau_u == np.inf:
        return 0
    return min(k, effective_threshold(tau_u, 0, k))


def seeded_or_free(M: np.ndarray, t: int) -> np.ndarray:
    """Per budget: ``max(1 + max_{c<t} M[c], max_{c>=t} M[c])``.

    Children with counts below ``t`` cannot activate the vertex, so it is seeded.
    """
    lo = M[:t].max(axis=0) + 1 if t > 0 else np.full(M.shape[1], NEG)
    hi = M[t:].max(axis=0) if t < M.shape[0] else np.full(M.shape[1], NEG)
    return np.maximum(lo, hi)
