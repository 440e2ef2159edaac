"""SAT encoding of autarky search, assignment lifts, and cardinality clauses.

For an input formula over primary variables ``1..N`` the encoding uses,
per primary variable ``v``, two auxiliary variables ``tpos(v)`` ("v is
assigned true by the autarky") and ``tneg(v)`` ("v is assigned false"),
while ``v`` itself becomes an indicator for "v is assigned at all".
Ids are laid out in three fixed, disjoint ranges:

    primaries        1 .. N
    tpos(v)/tneg(v)  N + 2v - 1, N + 2v
    cardinality aux  3N + 1 ..

The layout is fixed from the original input and never re-derived from a
shrunken formula, so it stays stable across a whole algorithm run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .formula import BOT, Clause, ClauseSet, PartialAssignment


@dataclass(frozen=True)
class VarMap:
    """The fixed id layout for one input formula."""

    primary_count: int

    @classmethod
    def for_formula(cls, f: ClauseSet) -> "VarMap":
        return cls(max(f.vars, default=0))

    @property
    def cardinality_base(self) -> int:
        return 3 * self.primary_count + 1

    def is_primary(self, var: int) -> bool:
        return 1 <= var <= self.primary_count

    def is_aux(self, var: int) -> bool:
        return self.primary_count < var < self.cardinality_base

    def is_cardinality(self, var: int) -> bool:
        return var >= self.cardinality_base

    def t(self, lit: int) -> int:
        """Auxiliary variable of a primary literal."""
        v = abs(lit)
        if not self.is_primary(v):
            raise ValueError(f"literal {lit} outside the primary range")
        return self.primary_count + 2 * v - (1 if lit > 0 else 0)

    def t_inv(self, aux: int) -> int:
        """The primary literal whose auxiliary variable is ``aux``."""
        if not self.is_aux(aux):
            raise ValueError(f"{aux} is not an auxiliary variable")
        off = aux - self.primary_count
        v, r = divmod(off + 1, 2)
        return v if r == 0 else -v

    def class_of(self, var: int) -> tuple[int, int, int]:
        """The 3-element equivalence class {v, t(v), t(-v)} containing var."""
        v = var if self.is_primary(var) else abs(self.t_inv(var))
        return (v, self.t(v), self.t(-v))


def saturate(variables: Iterable[int], vm: VarMap) -> frozenset[int]:
    """Close a variable set under the 3-element classes {v, t(v), t(-v)}.

    Cardinality-range ids are rejected: they belong to no class.
    """
    out: set[int] = set()
    for var in variables:
        if vm.is_cardinality(var):
            raise ValueError(f"variable {var} is in the cardinality range")
        out.update(vm.class_of(var))
    return frozenset(out)


@dataclass(frozen=True)
class TranslatedFormula:
    """The autarky-search encoding of a formula over a variable window."""

    clauses: ClauseSet
    varmap: VarMap
    window: frozenset[int]
    #: True when two clauses of different groups coincided and collapsed,
    #: invalidating the closed-form size formulas.
    collision: bool = field(default=False, compare=False)


def translate(f: ClauseSet, window: Iterable[int], vm: VarMap) -> TranslatedFormula:
    """Encode the search for autarkies of f with variables inside ``window``.

    Three clause groups: for each literal x of a clause C with var(x) in
    the window, the autarky clause "if the autarky falsifies x, it must
    satisfy C elsewhere in the window"; per window variable an
    at-most-one clause over tpos/tneg; and three clauses tying the
    indicator v to tpos(v) or tneg(v).
    """
    window = frozenset(window)
    for v in window | f.vars:
        if not vm.is_primary(v):
            raise ValueError(f"variable {v} outside the primary range of the map")
    groups: list[set[Clause]] = [set(), set(), set()]
    for clause in f:
        for x in clause:
            if abs(x) not in window:
                continue
            lits = [-vm.t(-x)]
            lits += [vm.t(y) for y in clause if y != x and abs(y) in window]
            groups[0].add(Clause(lits))
    for v in sorted(window):
        groups[1].add(Clause([-vm.t(v), -vm.t(-v)]))
        groups[2].add(Clause([-v, vm.t(v), vm.t(-v)]))
        groups[2].add(Clause([-vm.t(v), v]))
        groups[2].add(Clause([-vm.t(-v), v]))
    total = sum(len(g) for g in groups)
    all_clauses = groups[0] | groups[1] | groups[2]
    return TranslatedFormula(
        clauses=ClauseSet(all_clauses),
        varmap=vm,
        window=window,
        collision=len(all_clauses) != total,
    )


def lift_total(phi: PartialAssignment, window: Iterable[int], vm: VarMap) -> PartialAssignment:
    """Lift phi to a total assignment over the window and its auxiliaries.

    Unassigned window variables become explicit zeros on all three class
    members.
    """
    window = frozenset(window)
    if not phi.vars <= window:
        raise ValueError("assignment uses variables outside the window")
    out = {}
    for v in window:
        assigned = v in phi
        out[v] = int(assigned)
        out[vm.t(v)] = int(assigned and phi[v] == 1)
        out[vm.t(-v)] = int(assigned and phi[v] == 0)
    return PartialAssignment(out)


def lift_partial(phi: PartialAssignment, vm: VarMap) -> PartialAssignment:
    """Lift phi, leaving variables outside var(phi) unassigned.

    The domain of the result is the saturation of var(phi).
    """
    out = {}
    for v, b in phi.items():
        if not vm.is_primary(v):
            raise ValueError(f"variable {v} outside the primary range")
        out[v] = 1
        out[vm.t(v)] = b
        out[vm.t(-v)] = 1 - b
    return PartialAssignment(out)


def project(psi: PartialAssignment, vm: VarMap) -> PartialAssignment:
    """Read an autarky off a (model) assignment of a translated formula.

    Cardinality-range ids are ignored; the remaining domain must be
    saturated.  A primary variable enters the result iff its indicator
    is 1; its value is the tpos bit.
    """
    relevant = {v: b for v, b in psi.items() if not vm.is_cardinality(v)}
    dom = set(relevant)
    for v in dom:
        if not all(u in dom for u in vm.class_of(v)):
            raise ValueError(f"domain is not saturated at variable {v}")
    return PartialAssignment(
        {v: relevant[vm.t(v)] for v in relevant if vm.is_primary(v) and relevant[v] == 1}
    )


def encode_at_least(
    variables: Iterable[int], bound: int, vm: VarMap, fresh_base: int
) -> ClauseSet:
    """Totalizer clauses forcing at least ``bound`` of ``variables`` true.

    The projection of the models onto ``variables`` is exactly the set of
    assignments with >= bound ones; auxiliaries are drawn from ids >=
    fresh_base (which must lie in the cardinality range).
    """
    variables = sorted(variables)
    if not 0 <= bound <= len(variables):
        raise ValueError(f"bound {bound} out of range for {len(variables)} variables")
    if variables and fresh_base < vm.cardinality_base:
        raise ValueError("fresh_base below the cardinality range")
    if bound == 0:
        return ClauseSet()
    clauses: list[Clause] = []
    counter = [fresh_base]

    def fresh() -> int:
        counter[0] += 1
        return counter[0] - 1

    def tree(vs: list[int]) -> list[int]:
        # returns unary-counter outputs: out[i] <=> at least i+1 of vs are true
        if len(vs) == 1:
            return vs
        mid = len(vs) // 2
        left, right = tree(vs[:mid]), tree(vs[mid:])
        out = [fresh() for _ in range(len(vs))]
        for i in range(len(left) + 1):
            for j in range(len(right) + 1):
                if i + j > 0:
                    head = [out[i + j - 1]]
                    if i > 0:
                        head.append(-left[i - 1])
                    if j > 0:
                        head.append(-right[j - 1])
                    # left >= i and right >= j  =>  out >= i+j
                    clauses.append(Clause(head))
                if i + j < len(vs):
                    tail = [-out[i + j]]
                    if i < len(left):
                        tail.append(left[i])
                    if j < len(right):
                        tail.append(right[j])
                    # out >= i+j+1  =>  left >= i+1 or right >= j+1
                    clauses.append(Clause(tail))
        return out

    outputs = tree(list(variables))
    clauses.append(Clause([outputs[bound - 1]]))
    return ClauseSet(clauses)
