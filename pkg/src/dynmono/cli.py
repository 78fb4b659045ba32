"""``dynmono-vacc``: solve, hull, check and gen subcommands.

Exit codes: 0 success, 1 oracle mismatch in ``check``, 2 input error,
3 budget larger than the vertex count.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import percolation
from .generate import DEFAULT_PROFILE, ProfileError, random_instance
from .model import NEG_INF, InstanceError, format_instance, parse_instance
from .vacc1 import certify_X, reconstruct_X, solve_table_v1
from .vacc2 import certify_Y, reconstruct_Y, solve_table_v2

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_INFEASIBLE = 0, 1, 2, 3


def render_value(value):
    return "-inf" if value == NEG_INF else int(value)


def _emit(obj, pretty: bool, stream=None):
    stream = stream or sys.stdout
    stream.write(json.dumps(obj, indent=2 if pretty else None) + "\n")


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_instance(fh.read())
    except OSError as exc:
        raise InstanceError(f"{path}: {exc.strerror}") from None


def solve_report(instance, problem: str, budget=None, root: int = 0, witness: bool = False, certify: bool = False) -> dict:
    """Build the report dict for ``solve``; raises ``InstanceError`` on bad input."""
    if problem not in ("dyn", "vacc1", "vacc2"):
        raise InstanceError(f"unknown problem {problem!r}")
    if problem == "dyn":
        b = 0
    else:
        b = instance.budget if budget is None else budget
        if b is None:
            raise InstanceError("no budget: pass --budget or set \"budget\" in the instance")
        if b < 0:
            raise InstanceError(f"budget must be non-negative, got {b}")
    if not 0 <= root < instance.n:
        raise InstanceError(f"root {root} out of range 0..{instance.n - 1}")

    start = time.perf_counter()
    report = {"problem": problem}
    wit = None
    certified = False
    if b > instance.n:
        value = NEG_INF
    elif problem == "vacc2":
        table = solve_table_v2(instance, b, root)
        r = table.tree.root
        value = max(table.cell("y_in", r, b), table.cell("y0", r, b))
        if witness or certify:
            wit = reconstruct_Y(instance, b, root, table)
            if certify:
                certified = certify_Y(instance, wit, value)
    else:
        table = solve_table_v1(instance, b, root)
        value = table.cell(0, table.tree.root, b)
        if problem == "vacc1" and (witness or certify):
            wit = reconstruct_X(instance, b, root, table)
            if certify:
                certified = certify_X(instance, wit, value)
        elif problem == "dyn" and (witness or certify) and instance.n <= percolation.DYN_MAX_N:
            # the tree DP yields no monopoly itself; small instances get an exhaustive one
            adj = instance.adjacency()
            _, wit = percolation.dyn_bruteforce(adj, instance.tau)
            if certify:
                certified = len(wit) == value and percolation.is_dynamic_monopoly(adj, instance.tau, wit)
    report["value"] = render_value(value)
    if wit is not None:
        report["witness"] = sorted(wit)
    report["certified"] = certified
    report["timing"] = round((time.perf_counter() - start) * 1000.0, 3)
    return report


def cmd_solve(args) -> int:
    instance = _load(args.instance)
    report = solve_report(instance, args.problem, args.budget, args.root, args.witness, args.certify)
    _emit(report, args.pretty)
    return EXIT_INFEASIBLE if report["value"] == "-inf" else EXIT_OK


def cmd_hull(args) -> int:
    instance = _load(args.instance)
    for s in args.seeds:
        if not 0 <= s < instance.n:
            raise InstanceError(f"seed vertex {s} out of range 0..{instance.n - 1}")
    adj = instance.adjacency()
    H = percolation.hull(adj, instance.tau, args.seeds)
    _emit({"problem": "hull", "hull": sorted(H), "is_monopoly": len(H) == instance.n}, args.pretty)
    return EXIT_OK


def run_check(count: int, min_n: int, max_n: int, profile: str, seed: int, out: str | None, stream=None) -> int:
    """Compare both tree solvers with the exhaustive oracles on random instances."""
    stream = stream or sys.stdout
    if max_n > percolation.VACC_MAX_N:
        raise InstanceError(f"--max-n {max_n} exceeds the oracle cap {percolation.VACC_MAX_N}")
    if not 1 <= min_n <= max_n:
        raise InstanceError(f"need 1 <= min-n <= max-n, got {min_n}..{max_n}")
    rng = np.random.default_rng(seed)
    ok1 = ok2 = 0
    first_bad = None
    for case in range(count):
        n = int(rng.integers(min_n, max_n + 1))
        inst = random_instance(n, profile, rng)
        b1 = int(rng.integers(0, n + 2))
        b2 = int(rng.integers(0, n + 1))
        problems = []
        for name, b, oracle, table_fn, rebuild, certify in (
            ("vacc1", b1, percolation.vacc1_bruteforce, solve_table_v1, reconstruct_X, certify_X),
            ("vacc2", b2, percolation.vacc2_bruteforce, solve_table_v2, reconstruct_Y, certify_Y),
        ):
            expected, _ = oracle(inst, b)
            got = solve_report(inst, name, b)["value"]
            if got != render_value(expected):
                problems.append(f"{name} b={b}: solver {got}, oracle {render_value(expected)}")
            elif b <= n:
                wit = rebuild(inst, b)
                if len(wit) != b or not certify(inst, wit, expected):
                    problems.append(f"{name} b={b}: witness {sorted(wit)} fails certification")
        bad = {p.split()[0] for p in problems}
        ok1 += "vacc1" not in bad
        ok2 += "vacc2" not in bad
        if problems:
            stream.write(f"case {case}: {format_instance(inst)}\n")
            for p in problems:
                stream.write(f"  {p}\n")
            if first_bad is None:
                first_bad = inst.with_budget(b1 if "vacc1" in bad else b2)
    stream.write(f"{ok1}/{count} vacc1 ok, {ok2}/{count} vacc2 ok\n")
    if first_bad is not None:
        path = out or "counterexample.json"
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(format_instance(first_bad) + "\n")
        stream.write(f"first counterexample written to {path}\n")
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_check(args) -> int:
    return run_check(args.count, args.min_n, args.max_n, args.profile, args.seed, args.out)


def cmd_gen(args) -> int:
    if args.n < 1:
        raise InstanceError("n must be at least 1")
    inst = random_instance(args.n, args.profile, np.random.default_rng(args.seed), args.budget)
    text = format_instance(inst, indent=2 if args.pretty else None) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dynmono-vacc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve dyn, vacc1 or vacc2 on a tree instance")
    p.add_argument("problem", choices=["dyn", "vacc1", "vacc2"])
    p.add_argument("instance")
    p.add_argument("--budget", type=int)
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--witness", action="store_true")
    p.add_argument("--certify", action="store_true")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("hull", help="spread from a seed set")
    p.add_argument("instance")
    p.add_argument("seeds", nargs="*", type=int)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("check", help="cross-check the solvers against brute force")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--profile", default=DEFAULT_PROFILE)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="where to write the first counterexample")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="print a random instance")
    p.add_argument("n", type=int)
    p.add_argument("--profile", default="const:1")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int)
    p.add_argument("--out")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InstanceError, ProfileError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
