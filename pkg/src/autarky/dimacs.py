"""DIMACS CNF reading and writing.

Parsing is strict where it matters for correctness (tautologies are an
error, not silently removed) and lenient where the format is sloppy in
the wild (clauses may span lines, trailing whitespace is fine).
Duplicate literals within a clause and duplicate clauses collapse.
"""

from __future__ import annotations

from .formula import Clause, ClauseSet, TautologyError


class DimacsError(ValueError):
    """Malformed DIMACS input; the message carries a line number."""


def parse_dimacs(text: str) -> ClauseSet:
    header = None
    clauses: list[Clause] = []
    pending: list[int] = []
    pending_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if header is not None:
                raise DimacsError(f"line {lineno}: duplicate header")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: malformed header {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed header {line!r}") from None
            continue
        if header is None:
            raise DimacsError(f"line {lineno}: clause before 'p cnf' header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"line {lineno}: bad token {tok!r}") from None
            if lit == 0:
                try:
                    clauses.append(Clause(pending))
                except TautologyError as exc:
                    raise DimacsError(
                        f"line {lineno}: tautological clause {pending}: {exc}"
                    ) from None
                pending = []
            else:
                if abs(lit) > header[0]:
                    raise DimacsError(
                        f"line {lineno}: variable {abs(lit)} exceeds declared {header[0]}"
                    )
                if not pending:
                    pending_line = lineno
                pending.append(lit)
    if header is None:
        raise DimacsError("line 1: missing 'p cnf' header")
    if pending:
        raise DimacsError(f"line {pending_line}: clause not terminated by 0")
    return ClauseSet(clauses)


def serialize_dimacs(f: ClauseSet) -> str:
    top = max(f.vars, default=0)
    lines = [f"p cnf {top} {f.c}"]
    for clause in f:
        lines.append(" ".join(str(lit) for lit in clause) + " 0" if clause.lits else "0")
    return "\n".join(lines) + "\n"
