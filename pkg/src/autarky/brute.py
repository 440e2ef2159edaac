"""Ground-truth autarky computation by exhaustive enumeration.

Each of the n variables of a formula is unassigned, false, or true, so
there are 3^n candidate partial assignments; the autarky condition is
checked for all of them at once with numpy bit tables.  Intended for
verification at desk scale only (default limit: 12 variables).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .formula import ClauseSet, PartialAssignment

DEFAULT_LIMIT = 12


class SizeExceededError(ValueError):
    """The formula has too many variables for exhaustive enumeration."""


@dataclass
class AutarkyCatalog:
    """Everything there is to know about the autarkies of one formula."""

    formula: ClauseSet
    largest_var_set: frozenset[int]
    lean_kernel: ClauseSet
    _vars: tuple[int, ...] = field(repr=False)
    _assigned: np.ndarray = field(repr=False)  # (rows, n) bool, autarky rows only
    _values: np.ndarray = field(repr=False)  # (rows, n) bool

    @property
    def autarkies(self) -> list[PartialAssignment]:
        """All restricted autarkies, built on demand."""
        out = []
        for row in range(self._assigned.shape[0]):
            out.append(
                PartialAssignment(
                    {
                        v: int(self._values[row, i])
                        for i, v in enumerate(self._vars)
                        if self._assigned[row, i]
                    }
                )
            )
        return out

    @property
    def nu_aut(self) -> int:
        return len(self.largest_var_set)

    @property
    def nu_lean(self) -> int:
        return len(self.lean_kernel.vars)


def _autarky_table(f: ClauseSet, limit: int):
    """Return (vars, assigned, values) numpy tables of all autarky rows."""
    variables = tuple(sorted(f.vars))
    n = len(variables)
    if n > limit:
        raise SizeExceededError(f"{n} variables exceeds the enumeration limit {limit}")
    index = {v: i for i, v in enumerate(variables)}
    states = np.arange(3**n, dtype=np.int64)
    digits = np.empty((3**n, n), dtype=np.int8)
    for i in range(n):
        states, digits[:, i] = np.divmod(states, 3)
    assigned = digits > 0
    values = digits == 2
    ok = np.ones(3**n, dtype=bool)
    for clause in f:
        touched = np.zeros(3**n, dtype=bool)
        satisfied = np.zeros(3**n, dtype=bool)
        for lit in clause:
            col = index[abs(lit)]
            touched |= assigned[:, col]
            satisfied |= assigned[:, col] & (values[:, col] == (lit > 0))
        ok &= ~touched | satisfied
    return variables, assigned[ok], values[ok]


def enumerate_autarkies(f: ClauseSet, limit: int = DEFAULT_LIMIT) -> AutarkyCatalog:
    """Catalog of all restricted autarkies, the largest autarky-var-set,
    and the lean kernel of f."""
    variables, assigned, values = _autarky_table(f, limit)
    if assigned.shape[0]:
        var_mask = assigned.any(axis=0)
    else:  # unreachable: the empty assignment is always an autarky
        var_mask = np.zeros(len(variables), dtype=bool)
    largest = frozenset(v for v, m in zip(variables, var_mask) if m)
    index = {v: i for i, v in enumerate(variables)}
    kernel = []
    for clause in f:
        sat = np.zeros(assigned.shape[0], dtype=bool)
        for lit in clause:
            col = index[abs(lit)]
            sat |= assigned[:, col] & (values[:, col] == (lit > 0))
        if not sat.any():
            kernel.append(clause)
    return AutarkyCatalog(
        formula=f,
        largest_var_set=largest,
        lean_kernel=ClauseSet(kernel),
        _vars=variables,
        _assigned=assigned,
        _values=values,
    )


def maximal_autarky_bf(f: ClauseSet, limit: int = DEFAULT_LIMIT) -> PartialAssignment:
    """The lexicographically least maximal autarky of f.

    All maximal autarkies assign exactly the largest autarky-var-set;
    ties are broken by preferring value 0 on the smallest variable.
    """
    cat = enumerate_autarkies(f, limit)
    target = np.array([v in cat.largest_var_set for v in cat._vars], dtype=bool)
    rows = np.nonzero((cat._assigned == target).all(axis=1))[0]
    # smallest variable is the most significant digit; 0 beats 1
    weights = 1 << np.arange(len(cat._vars) - 1, -1, -1, dtype=np.int64)
    keys = (cat._values[rows] & target) @ weights
    best = rows[int(np.argmin(keys))]
    return PartialAssignment(
        {
            v: int(cat._values[best, i])
            for i, v in enumerate(cat._vars)
            if cat._assigned[best, i]
        }
    )
