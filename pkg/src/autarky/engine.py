"""A small CDCL solver with used-axiom tracking.

Beyond the usual SAT answer with a total model, an UNSAT answer carries
the set of input clauses reachable in the derivation graph from the
final conflict.  Unfolding that graph gives a tree resolution refutation
whose axioms are precisely the reachable clauses, so their variable set
is a valid "used variables" answer.  No core minimisation is attempted:
larger cores exclude more variables from autarkies, so shrinking them
would be counter-productive.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .formula import BOT, Clause, ClauseSet, PartialAssignment, satisfies


@dataclass(frozen=True)
class OracleAnswer:
    """Answer of the extended oracle: a model, or the used-axiom variables."""

    kind: str  # "SAT" | "UNSAT"
    assignment: PartialAssignment | None = None
    used_vars: frozenset[int] = frozenset()
    core: ClauseSet | None = None  # the recorded axiom subset on UNSAT

    @property
    def is_sat(self) -> bool:
        return self.kind == "SAT"


@dataclass
class CallRecord:
    kind: str
    n: int
    c: int


@dataclass
class RunStats:
    """Per-call ledger of one algorithm run."""

    calls: list[CallRecord] = field(default_factory=list)

    def record(self, answer: OracleAnswer, instance: ClauseSet):
        self.calls.append(CallRecord(answer.kind, instance.n, instance.c))

    @property
    def total(self) -> int:
        return len(self.calls)

    @property
    def sat_calls(self) -> int:
        return sum(1 for r in self.calls if r.kind == "SAT")

    @property
    def unsat_calls(self) -> int:
        return sum(1 for r in self.calls if r.kind == "UNSAT")

    @property
    def max_instance_vars(self) -> int:
        return max((r.n for r in self.calls), default=0)


class _Cl:
    """Internal clause: literal list plus provenance.

    For learned clauses, ``premises`` is the recorded resolution chain
    ``[(start, None), (reason, resolved_trail_lit), ...]``.
    """

    __slots__ = ("lits", "origin", "premises")

    def __init__(self, lits, origin=None, premises=None):
        self.lits = lits
        self.origin = origin  # original Clause, or None for learned
        self.premises = premises


class Solver:
    """One-shot CDCL solver; construct per call, then ``solve``."""

    def __init__(self, seed: int = 0):
        self.seed = seed

    def solve(self, f: ClauseSet) -> OracleAnswer:
        if BOT in f:
            return OracleAnswer("UNSAT", used_vars=frozenset(), core=ClauseSet([BOT]))
        self.vars = sorted(f.vars)
        rng = random.Random(self.seed)
        self.order = list(self.vars)
        rng.shuffle(self.order)
        self.phase = {v: rng.getrandbits(1) == 1 for v in self.vars}
        self.activity = {v: 0.0 for v in self.vars}
        self.var_inc = 1.0
        self.assign: dict[int, bool] = {}
        self.level: dict[int, int] = {}
        self.reason: dict[int, _Cl | None] = {}
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.watches: dict[int, list[_Cl]] = {}
        self.prop_queue = 0

        units: list[_Cl] = []
        self.clauses: list[_Cl] = []
        for clause in f:
            cl = _Cl(list(clause.lits), origin=clause)
            self.clauses.append(cl)
            if len(cl.lits) == 1:
                units.append(cl)
            else:
                self._watch(cl)

        for cl in units:
            lit = cl.lits[0]
            if self._value(lit) is False:
                # two contradicting input units: resolve them directly
                other = self.reason[abs(lit)]
                return self._unsat(_Cl([], premises=[(cl, None), (other, -lit)]))
            if self._value(lit) is None:
                self._enqueue(lit, cl)

        conflict = self._propagate()
        if conflict is not None:
            return self._unsat(conflict)

        while True:
            v = self._pick_branch_var()
            if v is None:
                return self._sat(f)
            self.trail_lim.append(len(self.trail))
            self._enqueue(v if self.phase[v] else -v, None)
            while True:
                conflict = self._propagate()
                if conflict is None:
                    break
                if not self.trail_lim:
                    return self._unsat(conflict)
                learned, premises, back_level = self._analyze(conflict)
                self._backjump(back_level)
                cl = _Cl(learned, premises=premises)
                if len(learned) > 1:
                    self._watch(cl)
                    self.clauses.append(cl)
                self._enqueue(learned[0], cl)

    # -- basic machinery ---------------------------------------------------

    def _value(self, lit: int):
        b = self.assign.get(abs(lit))
        return None if b is None else (b if lit > 0 else not b)

    def _watch(self, cl: _Cl):
        for lit in cl.lits[:2]:
            self.watches.setdefault(-lit, []).append(cl)

    def _enqueue(self, lit: int, reason: _Cl | None):
        self.assign[abs(lit)] = lit > 0
        self.level[abs(lit)] = len(self.trail_lim)
        self.reason[abs(lit)] = reason
        self.trail.append(lit)

    def _propagate(self) -> _Cl | None:
        while self.prop_queue < len(self.trail):
            lit = self.trail[self.prop_queue]
            self.prop_queue += 1
            watching = self.watches.get(lit, [])
            i = 0
            while i < len(watching):
                cl = watching[i]
                lits = cl.lits
                if lits[0] == -lit:
                    lits[0], lits[1] = lits[1], lits[0]
                if self._value(lits[0]) is True:
                    i += 1
                    continue
                for k in range(2, len(lits)):
                    if self._value(lits[k]) is not False:
                        lits[1], lits[k] = lits[k], lits[1]
                        watching[i] = watching[-1]
                        watching.pop()
                        self.watches.setdefault(-lits[1], []).append(cl)
                        break
                else:
                    if self._value(lits[0]) is False:
                        return cl
                    self._enqueue(lits[0], cl)
                    i += 1
        return None

    def _pick_branch_var(self):
        best = None
        best_act = -1.0
        for v in self.order:
            if v not in self.assign and self.activity[v] > best_act:
                best, best_act = v, self.activity[v]
        return best

    def _bump(self, var: int):
        self.activity[var] += self.var_inc
        if self.activity[var] > 1e100:
            for v in self.activity:
                self.activity[v] *= 1e-100
            self.var_inc *= 1e-100

    def _analyze(self, conflict: _Cl):
        """First-UIP conflict analysis, recording the resolved premises.

        Level-0 literals are dropped from the learned clause; the final
        core traversal resolves them away via their (permanent) level-0
        reasons, so provenance stays complete.
        """
        cur_level = len(self.trail_lim)
        premises = [(conflict, None)]
        learned: list[int] = []
        seen: set[int] = set()
        counter = 0
        cl = conflict
        idx = len(self.trail)
        while True:
            for lit in cl.lits:
                v = abs(lit)
                if v in seen or self.level[v] == 0:
                    continue
                seen.add(v)
                self._bump(v)
                if self.level[v] == cur_level:
                    counter += 1
                else:
                    learned.append(lit)
            while True:
                idx -= 1
                lit = self.trail[idx]
                if abs(lit) in seen and self.level[abs(lit)] == cur_level:
                    break
            counter -= 1
            if counter == 0:
                break
            cl = self.reason[abs(lit)]
            premises.append((cl, lit))
        learned = [-lit] + learned
        self.var_inc *= 1.05
        if len(learned) == 1:
            back = 0
        else:
            back = max(self.level[abs(l)] for l in learned[1:])
            k = max(range(1, len(learned)), key=lambda i: self.level[abs(learned[i])])
            learned[1], learned[k] = learned[k], learned[1]
        return learned, premises, back

    def _backjump(self, back_level: int):
        while self.trail and self.level[abs(self.trail[-1])] > back_level:
            lit = self.trail.pop()
            v = abs(lit)
            self.phase[v] = lit > 0
            del self.assign[v], self.level[v], self.reason[v]
        del self.trail_lim[back_level:]
        self.prop_queue = len(self.trail)

    # -- answers -----------------------------------------------------------

    def _sat(self, f: ClauseSet) -> OracleAnswer:
        model = PartialAssignment({v: int(self.assign.get(v, False)) for v in self.vars})
        assert satisfies(model, f), "model verification failed"
        return OracleAnswer("SAT", assignment=model)

    def _full(self, cl: _Cl, memo: dict) -> tuple[frozenset[int], frozenset]:
        """Literals actually derivable for cl, and the input axioms used.

        Replays the recorded resolution chain of a learned clause; level-0
        literals dropped during analysis reappear here and are carried
        upward, so the result can be a superset of ``cl.lits``.
        """
        if id(cl) in memo:
            return memo[id(cl)]
        if cl.origin is not None:
            res = (frozenset(cl.lits), frozenset([cl.origin]))
            memo[id(cl)] = res
            return res
        stack = [cl]
        while stack:
            top = stack[-1]
            pending = [p for p, _ in top.premises if id(p) not in memo and p.origin is None]
            if pending:
                stack.extend(pending)
                continue
            stack.pop()
            if id(top) in memo:
                continue
            lits, axioms = self._full(top.premises[0][0], memo)
            for reason, p in top.premises[1:]:
                if -p not in lits:
                    continue  # vacuous step, reason not actually needed
                rlits, raxioms = self._full(reason, memo)
                lits = (lits - {-p}) | (rlits - {p})
                axioms = axioms | raxioms
            memo[id(top)] = (lits, axioms)
        return memo[id(cl)]

    def _unsat(self, conflict: _Cl) -> OracleAnswer:
        """Derive the empty clause from the final level-0 conflict.

        Every remaining literal is falsified at level 0 and gets resolved
        via its reason; the collected axioms are precisely the input
        clauses of one tree refutation.
        """
        memo: dict = {}
        res, core = self._full(conflict, memo)
        while res:
            lit = next(iter(res))
            reason = self.reason[abs(lit)]
            rlits, raxioms = self._full(reason, memo)
            res = (res - {lit}) | (rlits - {-lit})
            core = core | raxioms
        core_set = ClauseSet(core)
        return OracleAnswer("UNSAT", used_vars=core_set.vars, core=core_set)


class InternalOracle:
    """Oracle backed by the embedded CDCL engine; fresh solver per call."""

    def __init__(self, seed: int = 0):
        self.seed = seed

    def solve_full(self, f: ClauseSet) -> OracleAnswer:
        return Solver(self.seed).solve(f)


def solve_full(f: ClauseSet, seed: int = 0) -> OracleAnswer:
    """One extended-oracle call on f."""
    return Solver(seed).solve(f)


def solve_sat(f: ClauseSet, seed: int = 0):
    """Standard SAT oracle: 0, or (1, model)."""
    ans = solve_full(f, seed)
    return (1, ans.assignment) if ans.is_sat else 0


def solve_core(f: ClauseSet, seed: int = 0):
    """Core oracle: 1, or (0, used variable set)."""
    ans = solve_full(f, seed)
    return 1 if ans.is_sat else (0, ans.used_vars)


def solve_decision(f: ClauseSet, seed: int = 0) -> bool:
    """Plain satisfiability bit."""
    return solve_full(f, seed).is_sat
