"""Instance families for tests and benchmarks."""

from __future__ import annotations

import math
import random

from .formula import Clause, ClauseSet

FAMILIES = ("units-pairs", "units", "random-3cnf", "mixed")


def units_pairs(n: int) -> ClauseSet:
    """{{1},{-1},...,{n},{-n}}: lean, every algorithm's worst case."""
    return ClauseSet([Clause([lit]) for v in range(1, n + 1) for lit in (v, -v)])


def units(n: int) -> ClauseSet:
    """{{1},...,{n}}: satisfiable, with the identity as maximal autarky."""
    return ClauseSet([Clause([v]) for v in range(1, n + 1)])


def random_3cnf(n: int, seed: int = 0) -> ClauseSet:
    """ceil(4.2*n) distinct random ternary clauses over n >= 3 variables."""
    if n < 3:
        raise ValueError("random-3cnf needs at least 3 variables")
    rng = random.Random(seed)
    draws = math.ceil(4.2 * n)
    clauses = []
    for _ in range(draws):
        vs = rng.sample(range(1, n + 1), 3)
        clauses.append(Clause([v if rng.getrandbits(1) else -v for v in vs]))
    return ClauseSet(clauses)  # duplicates collapse, so c may be below draws


def mixed(n: int) -> ClauseSet:
    """Variable-disjoint union of units_pairs(ceil(n/2)) and a shifted
    units(floor(n/2)): nontrivial lean kernel and autarky part at once."""
    lean_n = (n + 1) // 2
    lean = units_pairs(lean_n)
    shifted = ClauseSet([Clause([lean_n + v]) for v in range(1, n // 2 + 1)])
    return lean.union(shifted)


def gen_family(name: str, n: int, seed: int = 0) -> ClauseSet:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if name == "units-pairs":
        return units_pairs(n)
    if name == "units":
        return units(n)
    if name == "random-3cnf":
        return random_3cnf(n, seed)
    if name == "mixed":
        return mixed(n)
    raise ValueError(f"unknown family {name!r} (choose from {', '.join(FAMILIES)})")
