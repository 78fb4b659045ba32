import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from dynmono import POS_INF, Instance

TAU_VALUES = [0, 1, 2, 3, POS_INF]


def path(n, t):
    return Instance(n, tuple((i, i + 1) for i in range(n - 1)), (t,) * n)


def star(n, t):
    return Instance(n, tuple((0, i) for i in range(1, n)), (t,) * n)


@st.composite
def trees(draw, min_n=1, max_n=8, tau_values=TAU_VALUES):
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        edges = ()
    else:
        seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
        edges = tuple(nx.from_prufer_sequence(seq).edges())
    tau = tuple(draw(st.sampled_from(tau_values)) for _ in range(n))
    return Instance(n, edges, tau)


@pytest.fixture
def rng():
    return random.Random(20261015)
