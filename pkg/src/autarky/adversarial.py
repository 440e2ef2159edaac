"""Worst-case oracle policy for call-count tests.

A valid extended-oracle answer, chosen to make the algorithms progress
as slowly as possible: on SAT the smallest autarky compatible with the
steering and cardinality clauses, on UNSAT the variables of a minimal
unsatisfiable subset (whose clauses are precisely the axioms of some
tree refutation).  Answers are deterministic.

Instances are decomposed purely by the id layout of the variable map:
clauses touching the cardinality range are cardinality clauses, purely
positive primary clauses are steering clauses, the rest is the encoded
formula.  A raw instance (no auxiliary ids at all) is served directly.
"""

from __future__ import annotations

import itertools

from .brute import DEFAULT_LIMIT, SizeExceededError
from .engine import OracleAnswer, Solver
from .formula import BOT, Clause, ClauseSet, PartialAssignment, satisfies
from .translate import VarMap, encode_at_least

#: exhaustive minimum-variable core search is affordable up to this many
#: instance variables; larger instances fall back to core shrinking
EXHAUSTIVE_VARS = 12


class AdversarialOracle:
    def __init__(self, vm: VarMap, limit: int = DEFAULT_LIMIT, seed: int = 0):
        self.vm = vm
        self.limit = limit
        self.seed = seed

    def solve_full(self, instance: ClauseSet) -> OracleAnswer:
        translated = any(self.vm.is_aux(v) for v in instance.vars)
        primaries = sorted(v for v in instance.vars if self.vm.is_primary(v))
        if len(primaries) > self.limit:
            raise SizeExceededError(
                f"{len(primaries)} primary variables exceeds the adversarial limit {self.limit}"
            )
        probe = Solver(self.seed).solve(instance)
        if not probe.is_sat:
            return self._min_core(instance)
        if not translated:
            return self._lex_least_model(instance, primaries)
        return self._min_autarky_model(instance, primaries)

    # -- SAT answers -------------------------------------------------------

    def _lex_least_model(self, instance: ClauseSet, variables) -> OracleAnswer:
        for values in itertools.product((0, 1), repeat=len(variables)):
            model = PartialAssignment(dict(zip(variables, values)))
            if satisfies(model, instance):
                return OracleAnswer("SAT", assignment=model)
        raise AssertionError("probe said SAT but no total model exists")

    def _min_autarky_model(self, instance: ClauseSet, window) -> OracleAnswer:
        """Smallest, lexicographically least autarky the instance accepts.

        The minimum number of assigned window variables is found by
        tightening an at-most-k cap on the indicators (a totalizer over
        their negations); the least witness of that size is then pinned
        down variable by variable in ascending order, preferring
        unassigned, then false, then true.
        """
        vm = self.vm
        variables = sorted(window)
        w = len(variables)
        used_card = [v for v in instance.vars if vm.is_cardinality(v)]
        fresh = max(used_card, default=vm.cardinality_base - 1) + 1

        def at_most(k: int) -> ClauseSet:
            return encode_at_least([-v for v in variables], w - k, vm, fresh)

        capped = None
        for k in range(w + 1):
            capped = instance.union(at_most(k))
            if Solver(self.seed).solve(capped).is_sat:
                break
        fixed: list[Clause] = []
        for v in variables:
            for units in ([-v], [v, -vm.t(v), vm.t(-v)], [v, vm.t(v), -vm.t(-v)]):
                trial = fixed + [Clause([l]) for l in units]
                if Solver(self.seed).solve(capped.union(ClauseSet(trial))).is_sat:
                    fixed = trial
                    break
            else:
                raise AssertionError("greedy fixing ran out of options")
        ans = Solver(self.seed).solve(capped.union(ClauseSet(fixed)))
        model = PartialAssignment(
            {v: b for v, b in ans.assignment.items() if v in instance.vars}
        )
        return OracleAnswer("SAT", assignment=model)

    # -- UNSAT answers -----------------------------------------------------

    def _min_core(self, instance: ClauseSet) -> OracleAnswer:
        if BOT in instance:
            return OracleAnswer("UNSAT", used_vars=frozenset(), core=ClauseSet([BOT]))
        if instance.n <= EXHAUSTIVE_VARS:
            core = self._exhaustive_min_var_core(instance)
        else:
            core = self._shrunk_core(instance)
        return OracleAnswer("UNSAT", used_vars=core.vars, core=core)

    def _exhaustive_min_var_core(self, instance: ClauseSet) -> ClauseSet:
        """Minimum-variable unsatisfiable subset by subset search.

        A variable set V is feasible when the clauses entirely over V are
        unsatisfiable; the least feasible V (by size, then lexicographic)
        is the variable set of a minimum-variable MUS.
        """
        variables = sorted(instance.vars)
        for size in range(len(variables) + 1):
            for subset in itertools.combinations(variables, size):
                inside = frozenset(subset)
                cand = ClauseSet(c for c in instance if c.vars <= inside)
                if cand and not Solver(self.seed).solve(cand).is_sat:
                    return self._deletion_mus(cand)
        raise AssertionError("instance was unsatisfiable but no core found")

    def _shrunk_core(self, instance: ClauseSet) -> ClauseSet:
        """Engine core shrunk to a MUS (deletion only while affordable)."""
        core = Solver(self.seed).solve(instance).core
        while True:
            smaller = Solver(self.seed).solve(core).core
            if smaller == core:
                break
            core = smaller
        if core.c <= 60:
            core = self._deletion_mus(core)
        return core

    def _deletion_mus(self, core: ClauseSet) -> ClauseSet:
        clauses = list(core)
        i = 0
        while i < len(clauses):
            trial = ClauseSet(clauses[:i] + clauses[i + 1 :])
            if trial and not Solver(self.seed).solve(trial).is_sat:
                clauses.pop(i)
            else:
                i += 1
        return ClauseSet(clauses)
