"""Exact vaccination solvers for threshold spreading on trees."""
from .model import (
    NEG_INF,
    POS_INF,
    Component,
    InfeasibleBudget,
    Instance,
    InstanceError,
    RootedTree,
    decrement_at,
    delete_vertices,
    format_instance,
    immunize,
    parse_instance,
    root_at,
)
from .percolation import (
    InstanceTooLarge,
    dyn_bruteforce,
    hull,
    is_dynamic_monopoly,
    mandatory_vertices,
    vacc1_bruteforce,
    vacc2_bruteforce,
)
from .vacc1 import certify_X, dyn_tree, reconstruct_X, solve_table_v1, solve_vacc1
from .vacc2 import certify_Y, forest_dyn, reconstruct_Y, solve_table_v2, solve_vacc2
from .generate import random_instance, random_tree_edges

__version__ = "0.1.0"
