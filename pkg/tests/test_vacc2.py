import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynmono import (
    NEG_INF,
    POS_INF,
    InfeasibleBudget,
    Instance,
    decrement_at,
    dyn_bruteforce,
    forest_dyn,
    reconstruct_Y,
    solve_table_v2,
    solve_vacc1,
    solve_vacc2,
    vacc2_bruteforce,
)
from dynmono import knapsack
from dynmono.vacc2 import certify_Y, combine_children_v2, combine_y_in, leaf_table_v2

from conftest import path, star, trees
from subtrees import subtree_instance


@pytest.mark.parametrize(
    "tau, y0, y1",
    [(1, [1, NEG_INF], [0, NEG_INF]), (0, [0, NEG_INF], [0, NEG_INF]), (POS_INF, [1, NEG_INF], [1, NEG_INF])],
)
def test_leaf_table(tau, y0, y1):
    y_in, r0, r1 = leaf_table_v2(0, (tau,), 3)
    assert list(y_in) == [NEG_INF, 0]
    assert list(r0) == y0 and list(r1) == y1


def test_y_in_three_vertex_star():
    leaf = leaf_table_v2(0, (1,), 1)
    row = combine_y_in(0, [leaf, leaf], 1)
    assert row[0] == NEG_INF
    assert row[1] == 2 == vacc2_bruteforce(star(3, 1), 1)[0]


def test_y_in_whole_subtree_deleted():
    leaf = leaf_table_v2(0, (1,), 2)
    assert combine_y_in(0, [leaf], 2)[2] == 0


def test_kept_star_center():
    # K_{1,4}, tau = 1: seeding the center is optimal; with help the center self-activates
    leaf = leaf_table_v2(0, (1,), 5)
    y0, y1 = combine_children_v2(0, [leaf] * 4, 1, 5)
    inst = star(5, 1)
    assert y0[0] == 1 == dyn_bruteforce(inst.adjacency(), inst.tau)[0]
    assert y1[0] == 0 == dyn_bruteforce(inst.adjacency(), decrement_at(inst.tau, 0))[0]
    assert y0[1] == 1  # delete a leaf, seed the center
    assert y0[4] == 1  # every leaf deleted, the lone center is seeded
    assert len(y0) == 6 and y0[5] == NEG_INF


def test_solve_examples():
    assert solve_vacc2(star(5, 1), 1) == 4
    assert solve_vacc2(path(3, 1), 1) == 2
    assert solve_vacc2(star(5, 1), 2) == 3
    assert solve_vacc2(path(3, 1), 4) == NEG_INF
    inst = Instance(5, ((0, 1), (1, 2), (1, 3), (3, 4)), (1, 2, POS_INF, 0, 3))
    assert solve_vacc2(inst, 0) == dyn_bruteforce(inst.adjacency(), inst.tau)[0] == solve_vacc1(inst, 0)


def test_reconstruct_examples():
    assert reconstruct_Y(star(5, 1), 1) == {0}
    assert reconstruct_Y(path(5, 2), 0) == frozenset()
    assert reconstruct_Y(Instance(1, (), (3,)), 1) == {0}
    with pytest.raises(InfeasibleBudget):
        reconstruct_Y(path(3, 2), 4)


@settings(max_examples=300, deadline=None)
@given(trees(max_n=8), st.data())
def test_matches_bruteforce(inst, data):
    b = data.draw(st.integers(0, inst.n + 1))
    assert solve_vacc2(inst, b) == vacc2_bruteforce(inst, b)[0]


def _y_in_oracle(sub, b):
    """Best deletion value on a subtree with its root (local 0) forced into Y."""
    if b == 0 or b > sub.n:
        return NEG_INF
    from itertools import combinations
    return max(forest_dyn(sub, {0, *rest}) for rest in combinations(range(1, sub.n), b - 1))


def _y_kept_oracle(sub, b):
    from itertools import combinations
    if b > sub.n - 1:
        return NEG_INF
    return max(forest_dyn(sub, set(Y)) for Y in combinations(range(1, sub.n), b))


@settings(max_examples=60, deadline=None)
@given(trees(max_n=7), st.data())
def test_every_cell_matches_subtree_enumeration(inst, data):
    root = data.draw(st.integers(0, inst.n - 1))
    table = solve_table_v2(inst, inst.n, root)
    tree = table.tree
    for u in range(inst.n):
        sub0 = subtree_instance(inst, tree, u)
        sub1 = subtree_instance(inst, tree, u, helped=True)
        for b in range(tree.subtree_size[u] + 2):
            assert table.cell("y_in", u, b) == _y_in_oracle(sub0, b)
            assert table.cell("y0", u, b) == _y_kept_oracle(sub0, b)
            assert table.cell("y1", u, b) == _y_kept_oracle(sub1, b)


@given(trees(max_n=12))
def test_table_structure(inst):
    table = solve_table_v2(inst, inst.n)
    for u in range(inst.n):
        size = table.tree.subtree_size[u]
        y_in, y0, y1 = table.y_in[u], table.y0[u], table.y1[u]
        assert y_in[0] == NEG_INF and np.all(np.isfinite(y_in[1:]))
        assert np.all(np.isfinite(y0[:size])) and np.all(np.isfinite(y1[:size]))
        assert np.all(y0 >= y1)
        if size < len(y0):
            assert y0[size] == y1[size] == NEG_INF
        assert table.cell("y_in", u, size + 1) == NEG_INF


@settings(deadline=None)
@given(trees(max_n=12), st.data())
def test_witness_certifies(inst, data):
    b = data.draw(st.integers(0, inst.n))
    Y = reconstruct_Y(inst, b)
    assert len(Y) == b
    assert certify_Y(inst, Y, solve_vacc2(inst, b))


@given(trees(max_n=12), st.data())
def test_root_invariance(inst, data):
    b = data.draw(st.integers(0, inst.n))
    r = data.draw(st.integers(0, inst.n - 1))
    assert solve_vacc2(inst, b, root=r) == solve_vacc2(inst, b)


@given(trees(max_n=10), st.data())
def test_count_cap_does_not_change_values(inst, data):
    b = data.draw(st.integers(0, inst.n))
    capped = solve_table_v2(inst, b)
    original = knapsack.count_cap
    knapsack.count_cap = lambda tau_u, k: k
    try:
        exact = solve_table_v2(inst, b)
    finally:
        knapsack.count_cap = original
    for u in range(inst.n):
        assert np.array_equal(capped.y0[u], exact.y0[u])
        assert np.array_equal(capped.y1[u], exact.y1[u])


def test_full_budget_deletes_everything():
    assert solve_vacc2(star(6, 2), 6) == 0
    assert reconstruct_Y(star(6, 2), 6) == set(range(6))
