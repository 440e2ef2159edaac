"""Command-line front end.

Subcommands:
    solve    run one algorithm on a DIMACS file or a generated family
    compare  run all four algorithms and print a comparison table
    gen      print a generated family as DIMACS

Exit codes: 0 success, 1 usage or parse error, 2 internal invariant
violation (including a failed --verify check).
"""

from __future__ import annotations

import argparse
import json
import sys

from .adversarial import AdversarialOracle
from .algorithms import (
    AlgorithmResult,
    InternalInvariantError,
    SchemeInvariantError,
    algo_a0,
    algo_a01,
    algo_a1,
    algo_abs,
    scheme_s01,
    sqrt_partition,
)
from .brute import DEFAULT_LIMIT, SizeExceededError, enumerate_autarkies, maximal_autarky_bf
from .dimacs import DimacsError, parse_dimacs, serialize_dimacs
from .engine import InternalOracle, RunStats
from .formula import Clause, ClauseSet, apply, extend_quasi_maximal
from .generators import FAMILIES, gen_family
from .translate import VarMap

ALGORITHMS = ("a0", "a1", "abs", "a01", "brute")


def _add_instance_args(p: argparse.ArgumentParser):
    p.add_argument("input", nargs="?", help="DIMACS CNF file (omit when using --family)")
    p.add_argument("--family", choices=FAMILIES, help="generate the instance instead")
    p.add_argument("--n", type=int, default=0, help="size parameter for --family")
    p.add_argument("--seed", type=int, default=0)


def _add_run_args(p: argparse.ArgumentParser):
    p.add_argument("--oracle", choices=("internal", "adversarial"), default="internal")
    p.add_argument("--verify", action="store_true", help="check against exhaustive enumeration")
    p.add_argument("--verify-limit", type=int, default=DEFAULT_LIMIT)
    p.add_argument("--stats", metavar="PATH", help="write the statistics record here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="autarky", description="Maximal autarkies and lean kernels of CNF clause-sets"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="compute a maximal autarky")
    _add_instance_args(p_solve)
    _add_run_args(p_solve)
    p_solve.add_argument("--algorithm", choices=ALGORITHMS, default="a01")
    p_solve.add_argument(
        "--steering",
        choices=("full", "units", "sqrt"),
        default="sqrt",
        help="steering clause shape for a01",
    )

    p_cmp = sub.add_parser("compare", help="run all four algorithms and tabulate")
    _add_instance_args(p_cmp)
    _add_run_args(p_cmp)

    p_gen = sub.add_parser("gen", help="print a generated family as DIMACS")
    p_gen.add_argument("--family", choices=FAMILIES, required=True)
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--seed", type=int, default=0)

    return parser


def _load_instance(args) -> ClauseSet:
    if args.family is not None:
        return gen_family(args.family, args.n, args.seed)
    if args.input is None:
        raise DimacsError("no input file and no --family given")
    with open(args.input) as fh:
        return parse_dimacs(fh.read())


def _make_oracle(policy: str, vm: VarMap, seed: int):
    if policy == "adversarial":
        return AdversarialOracle(vm, seed=seed)
    return InternalOracle(seed)


def _steering(shape: str, f: ClauseSet) -> ClauseSet:
    if shape == "full":
        return ClauseSet([Clause(f.vars)]) if f.vars else ClauseSet()
    if shape == "units":
        return ClauseSet([Clause([v]) for v in sorted(f.vars)])
    return sqrt_partition(f.vars)


def run_algorithm(name: str, f: ClauseSet, oracle, vm: VarMap, steering: str = "sqrt") -> AlgorithmResult:
    """One algorithm run, normalised to return a maximal autarky."""
    if name == "a0":
        res = algo_a0(f, oracle)
        return AlgorithmResult(extend_quasi_maximal(res.autarky, f), res.stats)
    if name == "a1":
        return algo_a1(f, oracle, vm)
    if name == "abs":
        return algo_abs(f, oracle, vm)
    if name == "a01":
        return scheme_s01(f, _steering(steering, f), oracle, vm)
    if name == "brute":
        return AlgorithmResult(maximal_autarky_bf(f), RunStats())
    raise ValueError(f"unknown algorithm {name!r}")


def write_result(result: AlgorithmResult, f: ClauseSet, algorithm: str, out) -> dict:
    """Emit the v-line, the lean kernel, and the statistics record."""
    lits = result.autarky.to_literals()
    out.write("v " + " ".join(str(l) for l in lits + (0,)) + "\n")
    kernel = apply(result.autarky, f)
    out.write(serialize_dimacs(kernel))
    stats = {
        "algorithm": algorithm,
        "n": f.n,
        "c": f.c,
        "oracle_calls": [
            {"result": r.kind, "vars": r.n, "clauses": r.c} for r in result.stats.calls
        ],
        "total_calls": result.stats.total,
        "autarky_size": len(result.autarky),
        "lean_kernel_clauses": kernel.c,
    }
    return stats


def _verify(result: AlgorithmResult, f: ClauseSet, limit: int) -> str | None:
    """Compare against the exhaustive catalog; None when everything matches."""
    try:
        cat = enumerate_autarkies(f, limit)
    except SizeExceededError as exc:
        return str(exc)
    if result.autarky.vars != cat.largest_var_set:
        return (
            f"autarky variables {sorted(result.autarky.vars)} != "
            f"largest autarky-var-set {sorted(cat.largest_var_set)}"
        )
    if apply(result.autarky, f) != cat.lean_kernel:
        return "application does not yield the lean kernel"
    return None


def cmd_solve(args) -> int:
    f = _load_instance(args)
    vm = VarMap.for_formula(f)
    oracle = _make_oracle(args.oracle, vm, args.seed)
    result = run_algorithm(args.algorithm, f, oracle, vm, args.steering)
    stats = write_result(result, f, args.algorithm, sys.stdout)
    if args.stats:
        with open(args.stats, "w") as fh:
            json.dump(stats, fh, indent=2)
            fh.write("\n")
    else:
        json.dump(stats, sys.stdout, indent=2)
        sys.stdout.write("\n")
    if args.verify:
        problem = _verify(result, f, args.verify_limit)
        if problem is not None:
            print(f"verification failed: {problem}", file=sys.stderr)
            return 2
        print("c verified against exhaustive enumeration")
    return 0


def cmd_compare(args) -> int:
    f = _load_instance(args)
    vm = VarMap.for_formula(f)
    rows = []
    for name in ("a0", "a1", "abs", "a01"):
        oracle = _make_oracle(args.oracle, vm, args.seed)
        result = run_algorithm(name, f, oracle, vm)
        rows.append(
            {
                "algorithm": name,
                "total_calls": result.stats.total,
                "sat_calls": result.stats.sat_calls,
                "unsat_calls": result.stats.unsat_calls,
                "max_instance_vars": result.stats.max_instance_vars,
                "autarky_size": len(result.autarky),
            }
        )
        if args.verify:
            problem = _verify(result, f, args.verify_limit)
            if problem is not None:
                print(f"verification failed for {name}: {problem}", file=sys.stderr)
                return 2
    header = ["algorithm", "total_calls", "sat_calls", "unsat_calls", "max_instance_vars", "autarky_size"]
    print("\t".join(header))
    for row in rows:
        print("\t".join(str(row[k]) for k in header))
    if args.stats:
        with open(args.stats, "w") as fh:
            for row in rows:
                fh.write(json.dumps(row) + "\n")
    return 0


def cmd_gen(args) -> int:
    sys.stdout.write(serialize_dimacs(gen_family(args.family, args.n, args.seed)))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits with 2 on usage errors
        return 0 if exc.code == 0 else 1
    try:
        if args.command == "solve":
            return cmd_solve(args)
        if args.command == "compare":
            return cmd_compare(args)
        return cmd_gen(args)
    except (DimacsError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InternalInvariantError, SchemeInvariantError) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
