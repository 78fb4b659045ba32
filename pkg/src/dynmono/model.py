"""Instances, rooted views and threshold manipulation.

Thresholds are plain Python values: an ``int`` or :data:`POS_INF`.
Solver values are an ``int`` or :data:`NEG_INF`.  Both infinities are the
IEEE floats, so ordering, ``max`` and ``-inf + x == -inf`` come for free.
"""
from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

POS_INF = math.inf
NEG_INF = -math.inf


class InstanceError(ValueError):
    """Raised for malformed or invalid instance input."""


class InfeasibleBudget(ValueError):
    """Raised when a witness is requested for a budget larger than n."""


def ext_value(x) -> int | float:
    """Normalize a DP cell (int or float) to an ExtValue: ``int`` or NEG_INF."""
    if x == NEG_INF:
        return NEG_INF
    if x == POS_INF or x != x:
        raise ValueError(f"not an ExtValue: {x!r}")
    return int(x)


def ext_max(values: Iterable) -> int | float:
    """``max`` with the empty-collection convention ``max() = NEG_INF``."""
    return max(values, default=NEG_INF)


def _check_threshold(x, where: str):
    if isinstance(x, bool):
        raise InstanceError(f"{where}: threshold must be an integer or 'inf', got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        if x == POS_INF:
            return POS_INF
        if x.is_integer():
            return int(x)
    if isinstance(x, str) and x.strip().lower() in ("inf", "+inf", "infinity"):
        return POS_INF
    raise InstanceError(f"{where}: threshold must be an integer or 'inf', got {x!r}")


@dataclass(frozen=True)
class Instance:
    """A tree on vertices ``0..n-1`` with a threshold per vertex.

    The constructor validates the tree property; instances are immutable.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    tau: tuple
    budget: int | None = None

    def __post_init__(self):
        n = self.n
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise InstanceError(f"n must be a positive integer, got {n!r}")
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        object.__setattr__(self, "edges", edges)
        tau = tuple(_check_threshold(t, f"tau[{i}]") for i, t in enumerate(self.tau))
        object.__setattr__(self, "tau", tau)
        if len(tau) != n:
            raise InstanceError(f"tau has {len(tau)} entries, expected {n}")
        if self.budget is not None and (
            isinstance(self.budget, bool) or not isinstance(self.budget, int) or self.budget < 0
        ):
            raise InstanceError(f"budget must be a non-negative integer, got {self.budget!r}")
        _validate_tree(n, edges)

    def adjacency(self) -> list[list[int]]:
        return adjacency_lists(self.n, self.edges)

    def degree(self) -> list[int]:
        return [len(nb) for nb in self.adjacency()]

    def with_tau(self, tau: Sequence) -> Instance:
        return Instance(self.n, self.edges, tuple(tau), self.budget)

    def with_budget(self, budget: int | None) -> Instance:
        return Instance(self.n, self.edges, self.tau, budget)


def _validate_tree(n: int, edges: Sequence[tuple[int, int]]):
    seen = set()
    for i, (a, b) in enumerate(edges):
        for x in (a, b):
            if not 0 <= x < n:
                raise InstanceError(f"edges[{i}]: unknown vertex {x} (n={n})")
        if a == b:
            raise InstanceError(f"edges[{i}]: self-loop at vertex {a}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise InstanceError(f"edges[{i}]: duplicate edge {key}")
        seen.add(key)
    if len(edges) != n - 1:
        raise InstanceError(f"not a tree: {len(edges)} edges on {n} vertices")
    adj = adjacency_lists(n, edges)
    reached = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in reached:
                reached.add(v)
                queue.append(v)
    if len(reached) != n:
        raise InstanceError(f"not a tree: graph is disconnected ({len(reached)} of {n} vertices reachable from 0)")


def adjacency_lists(n: int, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    """Sorted neighbor lists for a simple undirected graph."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    for nb in adj:
        nb.sort()
    return adj


# --- JSON interchange -------------------------------------------------------

def parse_instance(text: str) -> Instance:
    """Parse the JSON instance format.

    ``{"n": 3, "edges": [[0, 1], [1, 2]], "tau": [1, "inf", 1], "budget": 1}``

    ``tau`` may also be an object keyed by vertex labels; keys outside the
    vertex set are ignored.  An optional ``"labels"`` list names the vertices,
    in which case edges and ``tau`` keys may use those names.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InstanceError("top level: expected a JSON object")
    for key in ("n", "edges", "tau"):
        if key not in data:
            raise InstanceError(f"top level: missing key {key!r}")
    n = data["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InstanceError(f"n: expected a positive integer, got {n!r}")

    alias: dict[str, int] = {str(i): i for i in range(n)}
    labels = data.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != n:
            raise InstanceError(f"labels: expected a list of {n} names")
        if len({str(x) for x in labels}) != n:
            raise InstanceError("labels: names must be distinct")
        alias.update({str(name): i for i, name in enumerate(labels)})

    def vertex(x, where):
        if isinstance(x, bool):
            raise InstanceError(f"{where}: unknown vertex label {x!r}")
        if isinstance(x, int) and 0 <= x < n:
            return x
        if isinstance(x, str) and x in alias:
            return alias[x]
        raise InstanceError(f"{where}: unknown vertex label {x!r}")

    raw_edges = data["edges"]
    if not isinstance(raw_edges, list):
        raise InstanceError("edges: expected a list of pairs")
    edges = []
    for i, e in enumerate(raw_edges):
        if not isinstance(e, list) or len(e) != 2:
            raise InstanceError(f"edges[{i}]: expected a pair, got {e!r}")
        edges.append((vertex(e[0], f"edges[{i}][0]"), vertex(e[1], f"edges[{i}][1]")))

    raw_tau = data["tau"]
    if isinstance(raw_tau, list):
        if len(raw_tau) != n:
            raise InstanceError(f"tau: has {len(raw_tau)} entries, expected {n}")
        tau = [_check_threshold(t, f"tau[{i}]") for i, t in enumerate(raw_tau)]
    elif isinstance(raw_tau, dict):
        tau = [None] * n
        for key, t in raw_tau.items():
            if key not in alias:
                continue
            tau[alias[key]] = _check_threshold(t, f"tau[{key!r}]")
        missing = [i for i, t in enumerate(tau) if t is None]
        if missing:
            raise InstanceError(f"tau: no threshold for vertices {missing}")
    else:
        raise InstanceError("tau: expected a list or an object")

    budget = data.get("budget")
    if budget is not None and (isinstance(budget, bool) or not isinstance(budget, int) or budget < 0):
        raise InstanceError(f"budget: expected a non-negative integer, got {budget!r}")
    return Instance(n, tuple(edges), tuple(tau), budget)


def format_instance(instance: Instance, indent: int | None = None) -> str:
    """Canonical JSON text; ``parse_instance`` inverts it exactly."""
    data = {
        "n": instance.n,
        "edges": [list(e) for e in instance.edges],
        "tau": ["inf" if t == POS_INF else t for t in instance.tau],
    }
    if instance.budget is not None:
        data["budget"] = instance.budget
    if indent is None:
        return json.dumps(data, separators=(",", ":"))
    return json.dumps(data, indent=indent)


# --- rooted view ------------------------------------------------------------

@dataclass(frozen=True)
class RootedTree:
    root: int
    parent: tuple
    children: tuple[tuple[int, ...], ...]
    post_order: tuple[int, ...]
    subtree_size: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.parent)


def root_at(instance: Instance, root: int = 0) -> RootedTree:
    """Root the tree; children are listed in ascending label order."""
    n = instance.n
    if isinstance(root, bool) or not isinstance(root, int) or not 0 <= root < n:
        raise InstanceError(f"root {root!r} out of range 0..{n - 1}")
    adj = instance.adjacency()
    parent: list[int | None] = [None] * n
    order = [root]
    visited = [False] * n
    visited[root] = True
    for u in order:  # BFS; the list grows while iterating
        for v in adj[u]:
            if not visited[v]:
                visited[v] = True
                parent[v] = u
                order.append(v)
    children = [tuple(v for v in adj[u] if v != parent[u]) for u in range(n)]

    # iterative DFS post-order, children in ascending order
    post = []
    stack = [(root, 0)]
    while stack:
        u, i = stack.pop()
        if i < len(children[u]):
            stack.append((u, i + 1))
            stack.append((children[u][i], 0))
        else:
            post.append(u)

    size = [1] * n
    for u in post:
        if parent[u] is not None:
            size[parent[u]] += size[u]
    return RootedTree(root, tuple(parent), tuple(children), tuple(post), tuple(size))


# --- threshold manipulation -------------------------------------------------

def immunize(tau: Sequence, X: Iterable[int]) -> tuple:
    """Return ``tau`` with every vertex of ``X`` set to POS_INF."""
    out = list(tau)
    for x in X:
        out[x] = POS_INF
    return tuple(out)


def decrement_at(tau: Sequence, u: int) -> tuple:
    """Return ``tau`` with the entry at ``u`` lowered by one (POS_INF stays)."""
    out = list(tau)
    out[u] = out[u] - 1 if out[u] != POS_INF else POS_INF
    return tuple(out)


# --- vertex deletion --------------------------------------------------------

@dataclass(frozen=True)
class Component:
    """A tree component of a forest; ``labels[i]`` is the original id of local vertex ``i``."""

    instance: Instance
    labels: tuple[int, ...] = field(default=())


def delete_vertices(instance: Instance, Y: Iterable[int]) -> list[Component]:
    """Split ``T - Y`` into its tree components (ordered by smallest label)."""
    removed = set(Y)
    for y in removed:
        if not 0 <= y < instance.n:
            raise InstanceError(f"vertex {y} out of range")
    adj = instance.adjacency()
    seen = set(removed)
    comps = []
    for s in range(instance.n):
        if s in seen:
            continue
        seen.add(s)
        members = [s]
        for u in members:
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    members.append(v)
        members.sort()
        local = {v: i for i, v in enumerate(members)}
        edges = tuple(
            (local[a], local[b]) for a, b in instance.edges if a in local and b in local
        )
        sub = Instance(len(members), edges, tuple(instance.tau[v] for v in members))
        comps.append(Component(sub, tuple(members)))
    return comps
