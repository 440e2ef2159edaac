"""Clause-sets and partial assignments over integer variables.

Literals are nonzero ints in DIMACS convention: ``v`` is the positive
literal of variable ``v >= 1``, ``-v`` the negative one.  Clauses and
clause-sets have set semantics but are stored in a canonical sorted
order, so equality of two clause-sets is plain ``==``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class TautologyError(ValueError):
    """A clause contains a variable in both signs."""


class ContractViolationError(RuntimeError):
    """A stated precondition of an operation did not actually hold."""


def _lit_key(lit: int) -> tuple[int, int]:
    # sort by variable, positive literal first
    return (abs(lit), 0 if lit > 0 else 1)


class Clause:
    """An immutable set of literals with no variable in both signs."""

    __slots__ = ("lits",)

    def __init__(self, lits: Iterable[int]):
        seen = set(lits)
        if 0 in seen:
            raise ValueError("0 is not a literal")
        for lit in seen:
            if -lit in seen:
                raise TautologyError(f"variable {abs(lit)} occurs in both signs")
        object.__setattr__(self, "lits", tuple(sorted(seen, key=_lit_key)))

    def __setattr__(self, name, value):
        raise AttributeError("Clause is immutable")

    @property
    def vars(self) -> frozenset[int]:
        return frozenset(abs(lit) for lit in self.lits)

    def __len__(self) -> int:
        return len(self.lits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.lits)

    def __contains__(self, lit: int) -> bool:
        return lit in self.lits

    def __eq__(self, other) -> bool:
        return isinstance(other, Clause) and self.lits == other.lits

    def __hash__(self) -> int:
        return hash(self.lits)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.lits)) + "}"


#: The empty clause.
BOT = Clause(())


class ClauseSet:
    """An immutable finite set of clauses."""

    __slots__ = ("clauses",)

    def __init__(self, clauses: Iterable[Clause | Iterable[int]] = ()):
        canon = {c if isinstance(c, Clause) else Clause(c) for c in clauses}
        object.__setattr__(
            self, "clauses", tuple(sorted(canon, key=lambda c: tuple(_lit_key(l) for l in c.lits)))
        )

    def __setattr__(self, name, value):
        raise AttributeError("ClauseSet is immutable")

    @property
    def vars(self) -> frozenset[int]:
        return frozenset(abs(lit) for c in self.clauses for lit in c.lits)

    @property
    def n(self) -> int:
        """Number of variables."""
        return len(self.vars)

    @property
    def c(self) -> int:
        """Number of clauses."""
        return len(self.clauses)

    @property
    def ell(self) -> int:
        """Number of literal occurrences."""
        return sum(len(c) for c in self.clauses)

    def union(self, other: "ClauseSet") -> "ClauseSet":
        return ClauseSet(self.clauses + other.clauses)

    def __len__(self) -> int:
        return len(self.clauses)

    def __iter__(self) -> Iterator[Clause]:
        return iter(self.clauses)

    def __contains__(self, clause: Clause) -> bool:
        return clause in self.clauses

    def __eq__(self, other) -> bool:
        return isinstance(other, ClauseSet) and self.clauses == other.clauses

    def __hash__(self) -> int:
        return hash(self.clauses)

    def __repr__(self) -> str:
        return "ClauseSet(" + ", ".join(map(repr, self.clauses)) + ")"


#: The empty clause-set.
TOP = ClauseSet()


class PartialAssignment:
    """An immutable finite map from variables to 0/1.

    Extended to literals by ``value(-v) = 1 - value(v)``.
    """

    __slots__ = ("_map",)

    def __init__(self, mapping: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        m = dict(mapping)
        for v, b in m.items():
            if v < 1:
                raise ValueError(f"bad variable {v}")
            if b not in (0, 1):
                raise ValueError(f"bad value {b} for variable {v}")
        object.__setattr__(self, "_map", dict(sorted(m.items())))

    def __setattr__(self, name, value):
        raise AttributeError("PartialAssignment is immutable")

    @classmethod
    def from_literals(cls, lits: Iterable[int]) -> "PartialAssignment":
        """Build from true literals, e.g. ``[1, -2]`` -> {1: 1, 2: 0}."""
        return cls({abs(l): int(l > 0) for l in lits})

    @property
    def vars(self) -> frozenset[int]:
        return frozenset(self._map)

    def value(self, lit: int) -> int:
        """Value of a literal; the literal's variable must be assigned."""
        v = self._map[abs(lit)]
        return v if lit > 0 else 1 - v

    def get(self, var: int, default=None):
        return self._map.get(var, default)

    def items(self):
        return self._map.items()

    def to_literals(self) -> tuple[int, ...]:
        """The assignment as a sorted tuple of true literals."""
        return tuple(v if b else -v for v, b in self._map.items())

    def __len__(self) -> int:
        return len(self._map)

    def __contains__(self, var: int) -> bool:
        return var in self._map

    def __getitem__(self, var: int) -> int:
        return self._map[var]

    def __eq__(self, other) -> bool:
        return isinstance(other, PartialAssignment) and self._map == other._map

    def __hash__(self) -> int:
        return hash(tuple(self._map.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{v}->{b}" for v, b in self._map.items())
        return "{" + inner + "}"


#: The empty partial assignment.
EMPTY = PartialAssignment()


def apply(phi: PartialAssignment, f: ClauseSet) -> ClauseSet:
    """Apply phi to f: drop satisfied clauses, delete falsified literals.

    The empty clause arises (and is kept) when all literals of a clause
    are falsified.
    """
    out = []
    for clause in f:
        kept = []
        satisfied = False
        for lit in clause:
            if abs(lit) in phi:
                if phi.value(lit) == 1:
                    satisfied = True
                    break
            else:
                kept.append(lit)
        if not satisfied:
            out.append(Clause(kept))
    return ClauseSet(out)


def restrict(f: ClauseSet, variables: frozenset[int] | set[int]) -> ClauseSet:
    """Restrict f to the given variables, dropping clauses that become empty."""
    out = []
    for clause in f:
        kept = [lit for lit in clause if abs(lit) in variables]
        if kept:
            out.append(Clause(kept))
    return ClauseSet(out)


def is_autarky(phi: PartialAssignment, f: ClauseSet) -> bool:
    """True iff every clause of f touched by phi is satisfied by phi."""
    for clause in f:
        touched = any(abs(lit) in phi for lit in clause)
        if touched and not any(abs(lit) in phi and phi.value(lit) == 1 for lit in clause):
            return False
    return True


def compose_autarkies(phi: PartialAssignment, psi: PartialAssignment) -> PartialAssignment:
    """Combine two assignments, phi taking precedence on shared variables.

    For autarkies of the same clause-set the result is again an autarky.
    """
    merged = dict(psi.items())
    merged.update(phi.items())
    return PartialAssignment(merged)


def satisfies(phi: PartialAssignment, f: ClauseSet) -> bool:
    """True iff applying phi removes every clause of f."""
    return apply(phi, f) == TOP


def extend_quasi_maximal(phi: PartialAssignment, f: ClauseSet) -> PartialAssignment:
    """Extend a quasi-maximal autarky to a maximal one.

    Variables of f outside both phi and the reduced clause-set get value
    0 (any value works when phi is quasi-maximal).  Raises
    ContractViolationError if the extension is not an autarky, which
    means phi was not quasi-maximal.
    """
    reduced = apply(phi, f)
    missing = f.vars - reduced.vars - phi.vars
    extended = compose_autarkies(phi, PartialAssignment({v: 0 for v in missing}))
    if not is_autarky(extended, f):
        raise ContractViolationError("input was not a quasi-maximal autarky")
    return extended
