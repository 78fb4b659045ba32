"""Seeded random instances: uniform labeled trees plus threshold profiles.

Profiles (``--profile`` strings):

``const:c``          every threshold is ``c``
``uniform:lo..hi``   uniform integer in ``[lo, hi]``
``degree-plus:d``    ``deg(u) + d``
``mixed-inf:p``      ``inf`` with probability ``p``, else uniform in ``[0, deg(u) + 1]``
``choice:a,b,...``   uniform over the listed values (``inf`` allowed)
"""
from __future__ import annotations

import networkx as nx
import numpy as np

from .model import POS_INF, Instance, adjacency_lists

DEFAULT_PROFILE = "choice:0,1,2,3,inf"


class ProfileError(ValueError):
    pass


def random_tree_edges(n: int, rng: np.random.Generator) -> tuple[tuple[int, int], ...]:
    """Edges of a uniformly random labeled tree (decoded Prüfer sequence)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return ()
    seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
    tree = nx.from_prufer_sequence(seq)
    return tuple(sorted((min(a, b), max(a, b)) for a, b in tree.edges()))


def _parse_value(text: str):
    text = text.strip()
    if text.lower() in ("inf", "+inf", "infinity"):
        return POS_INF
    try:
        return int(text)
    except ValueError:
        raise ProfileError(f"bad threshold value {text!r}") from None


def parse_profile(profile: str):
    """Return ``sample(degrees, rng) -> tau`` for a profile string."""
    kind, sep, arg = profile.partition(":")
    if not sep:
        raise ProfileError(f"profile {profile!r} is missing ':'")
    try:
        if kind == "const":
            c = _parse_value(arg)
            return lambda deg, rng: [c] * len(deg)
        if kind == "uniform":
            lo, sep2, hi = arg.partition("..")
            lo, hi = int(lo), int(hi)
            if not sep2 or lo > hi:
                raise ProfileError(f"bad range {arg!r}")
            return lambda deg, rng: [int(x) for x in rng.integers(lo, hi + 1, size=len(deg))]
        if kind == "degree-plus":
            d = int(arg)
            return lambda deg, rng: [x + d for x in deg]
        if kind == "mixed-inf":
            p = float(arg)
            if not 0.0 <= p <= 1.0:
                raise ProfileError(f"probability {p} outside [0, 1]")

            def sample(deg, rng):
                out = []
                for x in deg:
                    immune = rng.random() < p
                    finite = int(rng.integers(0, x + 2))
                    out.append(POS_INF if immune else finite)
                return out

            return sample
        if kind == "choice":
            values = [_parse_value(v) for v in arg.split(",")]
            return lambda deg, rng: [values[i] for i in rng.integers(0, len(values), size=len(deg))]
    except ValueError as exc:
        if isinstance(exc, ProfileError):
            raise
        raise ProfileError(f"bad profile {profile!r}: {exc}") from None
    raise ProfileError(f"unknown profile kind {kind!r}")


def random_instance(n: int, profile: str = DEFAULT_PROFILE, rng=None, budget: int | None = None) -> Instance:
    rng = np.random.default_rng(rng)
    sample = parse_profile(profile)
    edges = random_tree_edges(n, rng)
    deg = [len(nb) for nb in adjacency_lists(n, edges)]
    return Instance(n, edges, tuple(sample(deg, rng)), budget)
