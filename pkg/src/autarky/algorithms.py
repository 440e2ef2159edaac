"""The four maximal-autarky algorithms over an extended SAT oracle.

All four follow the same loop shape: keep a working formula (the input
itself, or its autarky-search encoding), ask the oracle, and either fold
a found autarky into the result or cut away variables that a refutation
proved useless.  State is updated in place round by round; the oracle is
any object with ``solve_full(ClauseSet) -> OracleAnswer``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .engine import OracleAnswer, RunStats
from .formula import (
    Clause,
    ClauseSet,
    PartialAssignment,
    EMPTY,
    TOP,
    apply,
    compose_autarkies,
    is_autarky,
    restrict,
)
from .translate import VarMap, lift_partial, project, saturate, translate, encode_at_least


class SteeringRangeError(ValueError):
    """Steering clauses mention variables outside the input formula."""


class InternalInvariantError(RuntimeError):
    """An algorithm produced something that is not an autarky of its input."""


class SchemeInvariantError(RuntimeError):
    """Debug mode: the working formula drifted from a fresh translation."""


@dataclass(frozen=True)
class AlgorithmResult:
    autarky: PartialAssignment
    stats: RunStats


def _finish(phi: PartialAssignment, original: ClauseSet, stats: RunStats) -> AlgorithmResult:
    if not is_autarky(phi, original):
        raise InternalInvariantError(f"result {phi} is not an autarky")
    return AlgorithmResult(phi, stats)


def algo_a0(f: ClauseSet, oracle) -> AlgorithmResult:
    """Quasi-maximal autarky via the core oracle on the input itself.

    Refuted variables are cut out by restriction until a satisfying
    assignment of the remainder appears; that assignment reduces the
    original to its lean kernel.
    """
    stats = RunStats()
    phi = EMPTY
    cur = f
    while cur.vars:
        ans = oracle.solve_full(cur)
        stats.record(ans, cur)
        if ans.is_sat:
            phi = ans.assignment
            cur = TOP
        else:
            cur = restrict(cur, cur.vars - ans.used_vars)
    return _finish(phi, f, stats)


def _check_primary(f: ClauseSet, vm: VarMap):
    bad = [v for v in f.vars if not vm.is_primary(v)]
    if bad:
        raise ValueError(f"variables {bad} outside the primary range of the map")


def algo_a1(f: ClauseSet, oracle, vm: VarMap | None = None) -> AlgorithmResult:
    """Maximal autarky by iterated autarky extraction from the encoding.

    One positive clause over all remaining variables forces each found
    autarky to be non-trivial; UNSAT means the lean kernel is reached.
    """
    vm = vm or VarMap.for_formula(f)
    _check_primary(f, vm)
    stats = RunStats()
    phi = EMPTY
    steering = ClauseSet([Clause(f.vars)])
    work = translate(f, f.vars, vm).clauses
    while steering.vars:
        instance = work.union(steering)
        ans = oracle.solve_full(instance)
        stats.record(ans, instance)
        if not ans.is_sat:
            steering, work = TOP, TOP
        else:
            found = project(ans.assignment, vm)
            steering = restrict(steering, steering.vars - found.vars)
            work = apply(lift_partial(found, vm), work)
            phi = compose_autarkies(phi, found)
    return _finish(phi, f, stats)


def algo_abs(f: ClauseSet, oracle, vm: VarMap | None = None) -> AlgorithmResult:
    """Maximal autarky by binary search on the autarky size.

    Each round demands an autarky over at least half the remaining
    bound via a cardinality constraint; UNSAT halves the bound, SAT
    subtracts the autarky found.
    """
    vm = vm or VarMap.for_formula(f)
    _check_primary(f, vm)
    stats = RunStats()
    phi = EMPTY
    bound = f.n
    candidates = set(f.vars)
    work = translate(f, f.vars, vm).clauses
    fresh = vm.cardinality_base
    while bound:
        m = (bound + 1) // 2
        card = encode_at_least(candidates, m, vm, fresh)
        fresh = max((v for v in card.vars if vm.is_cardinality(v)), default=fresh - 1) + 1
        instance = work.union(card)
        ans = oracle.solve_full(instance)
        stats.record(ans, instance)
        if not ans.is_sat:
            bound = m - 1
        else:
            found = project(ans.assignment, vm)
            if len(found) < m:
                raise InternalInvariantError("model violates the cardinality bound")
            bound -= len(found)
            candidates -= found.vars
            work = apply(lift_partial(found, vm), work)
            phi = compose_autarkies(phi, found)
    return _finish(phi, f, stats)


def scheme_s01(
    f: ClauseSet,
    steering: ClauseSet,
    oracle,
    vm: VarMap | None = None,
    debug: bool = False,
) -> AlgorithmResult:
    """The combined scheme: positive steering clauses force autarkies
    over chosen variable groups, and refutations cut whole groups out.

    Returns an autarky of f; a maximal one when the steering clauses
    cover all variables of f.  With ``debug`` the working formula is
    compared against a freshly computed translation every round.
    """
    vm = vm or VarMap.for_formula(f)
    _check_primary(f, vm)
    for clause in steering:
        for lit in clause:
            if lit < 0:
                raise SteeringRangeError(f"steering literal {lit} is negative")
    if not steering.vars <= f.vars:
        raise SteeringRangeError("steering variables outside var(input)")
    stats = RunStats()
    phi = EMPTY
    window = set(f.vars)
    work = translate(f, window, vm).clauses
    while steering.vars:
        instance = work.union(steering)
        ans = oracle.solve_full(instance)
        stats.record(ans, instance)
        before = (steering, frozenset(window))
        if not ans.is_sat:
            cut = saturate(ans.used_vars, vm)
            window -= cut
            steering = restrict(steering, steering.vars - cut)
            work = restrict(work, work.vars - cut)
        else:
            found = project(ans.assignment, vm)
            window -= found.vars
            steering = restrict(steering, steering.vars - found.vars)
            work = apply(lift_partial(found, vm), work)
            phi = compose_autarkies(phi, found)
        if (steering, frozenset(window)) == before:
            raise InternalInvariantError("oracle answer made no progress")
        if debug:
            expected = translate(apply(phi, f), window, vm).clauses
            if work != expected:
                raise SchemeInvariantError(
                    f"after {stats.total} calls the working formula differs from "
                    f"a fresh translation over {sorted(window)}"
                )
    return _finish(phi, f, stats)


def sqrt_partition(variables) -> ClauseSet:
    """Chunk the variables, ascending, into at most ceil(sqrt(n)) blocks
    of size at most ceil(sqrt(n))."""
    ordered = sorted(variables)
    if not ordered:
        return TOP
    size = math.isqrt(len(ordered) - 1) + 1  # ceil(sqrt(n))
    return ClauseSet(
        Clause(ordered[i : i + size]) for i in range(0, len(ordered), size)
    )


def algo_a01(f: ClauseSet, oracle, vm: VarMap | None = None, debug: bool = False) -> AlgorithmResult:
    """Maximal autarky with about 2*sqrt(n) oracle calls: the scheme
    steered by a square-root partition of the variables."""
    return scheme_s01(f, sqrt_partition(f.vars), oracle, vm, debug)
